#pragma once

// Generic-position projection families at finite dimension. A contraction
// family is a k-block matrix M = (C_uv) with rows indexed by U and columns by
// V, zero off the edge pattern. Column and row orthonormality of the blocks
// together say that M is unitary, which needs |U| = |V|.

#include <cstdint>
#include <optional>
#include <vector>

#include "bga/graph.hpp"
#include "bga/linalg.hpp"
#include "bga/repr.hpp"

namespace bga {

/// Residual target and acceptance level for synthesis.
inline constexpr double kSynthTol = 1e-10;
inline constexpr double kSynthAccept = 1e-8;
/// Edge blocks with a smaller singular value count as not invertible.
inline constexpr double kBlockConditioning = 1e-6;

struct ContractionFamily {
  BipartiteGraph graph;
  std::size_t k = 0;
  std::vector<ComplexMatrix> blocks;  // row-major over (u, v): index u * |V| + v

  const ComplexMatrix& block(std::size_t u, std::size_t v) const { return blocks.at(u * graph.v_count() + v); }
  ComplexMatrix& block(std::size_t u, std::size_t v) { return blocks.at(u * graph.v_count() + v); }

  /// The assembled (|U| k) x (|V| k) matrix.
  ComplexMatrix assembled() const;
};

struct ConditionResiduals {
  double column = 0.0;   // max |sum_u C_uv1* C_uv2 - delta I|
  double row = 0.0;      // max |sum_v C_u1v C_u2v* - delta I|
  double pattern = 0.0;  // max entry of an off-pattern block
  double min_edge_singular_value = 0.0;
};

ConditionResiduals condition_residuals(const ContractionFamily& cf);

struct SynthesisOptions {
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::size_t max_iter = 5000;
  double tol = kSynthTol;
};

struct SynthesisStats {
  std::size_t iterations = 0;
  double residual = 0.0;
};

/// Alternating projections between unitaries (polar factor) and the edge
/// pattern, from a seeded complex Gaussian start. Throws SideCountMismatch,
/// NotConnected, ParameterOutOfRange (k = 0), Nonconvergence (residual above
/// kSynthAccept after max_iter) or DegenerateBlock.
ContractionFamily synthesize(const BipartiteGraph& g, const SynthesisOptions& opt,
                             SynthesisStats* stats = nullptr);

struct ProjectionFamilyGP {
  Representation rep;  // on C^{k |V|}, V-blocks of size k
  std::size_t k = 0;
};

/// P_u = R_u* R_u with R_u the u-th block row; P_v the v-th coordinate block.
/// Throws InvariantViolation when cf breaks the pattern, the conditions
/// (at kSynthAccept) or block invertibility.
ProjectionFamilyGP build_projection_family(const ContractionFamily& cf);

struct EdgeGenericPosition {
  EdgeIndex edge = 0;
  std::size_t im_u_ker_v = 0;
  std::size_t ker_u_im_v = 0;
};

struct GenericPositionReport {
  std::vector<EdgeGenericPosition> edges;
  bool pass = false;
};

GenericPositionReport check_generic_position(const Representation& rep);

/// Compresses P_u P_v between pivoted-QR bases of the ranges. Throws
/// RankMismatch or NotGenericPosition.
ContractionFamily extract_contractions(const Representation& rep);

struct HalmosForm {
  ComplexMatrix C;
  ComplexMatrix S;
  double residual = 0.0;  // max |C^2 + S^2 - I|
};

/// C^2 is the compression of P_v1 to im P_u1; S^2 that of P_v1 to im P_u2
/// after aligning the off-diagonal block to be positive. Throws NotK22,
/// NotGenericPosition or InvariantViolation (residual above kSynthAccept).
HalmosForm halmos_decompose(const Representation& rep);

}  // namespace bga
