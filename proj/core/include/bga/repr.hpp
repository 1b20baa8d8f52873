#pragma once

// Finite-dimensional representations of C*(G): the one-dimensional pi_e,
// the two-dimensional sigma_{H,t}, direct sums, relation checks (GP1/GP2,
// GC1-GC4), words, the sandwich property, commutants, and numerical checks
// of the homomorphism phi_f induced by an edge bijection.
//
// Representations built here are block diagonal; `summands` records the
// blocks so that checks run per block. A representation with no summands
// recorded is treated as a single block.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bga/graph.hpp"
#include "bga/iso.hpp"
#include "bga/linalg.hpp"

namespace bga {

enum class SummandKind : std::uint8_t { Pi, Sigma, Other };

struct Summand {
  SummandKind kind = SummandKind::Other;
  EdgeIndex edge = 0;           // Pi: the edge
  std::size_t quadruple = 0;    // Sigma: index into enumerate_k22(graph)
  double t = 0.0;               // Sigma: parameter
  std::size_t offset = 0;
  std::size_t dim = 0;
};

struct Representation {
  BipartiteGraph graph;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> images;  // indexed by graph.global_id
  std::vector<Summand> summands;

  const ComplexMatrix& image(Vertex x) const { return images.at(graph.global_id(x)); }
  /// Throws UnknownVertex.
  const ComplexMatrix& image(std::string_view label) const { return image(graph.vertex(label)); }
};

/// 1x1 representation: 1 on both endpoints of e, 0 elsewhere. Throws UnknownEdge.
Representation rep_pi(const BipartiteGraph& g, EdgeIndex e);

/// 2x2 representation supported on the quadruple h. Throws
/// ParameterOutOfRange unless 0 < t < 1, NotAQuadruple if h is not a K_{2,2}
/// of g.
Representation rep_sigma(const BipartiteGraph& g, const Quadruple& h, double t);

/// Block-diagonal stacking. Throws EmptySum or GraphMismatch.
Representation direct_sum(std::span<const Representation> reps);

/// The i-th recorded summand as a standalone representation.
Representation summand_rep(const Representation& rep, std::size_t i);

/// {1/4, 1/2, 3/4} followed by two uniform points of (0,1) drawn from `seed`.
std::vector<double> default_t_samples(std::uint64_t seed = 0);

/// Sum of all pi_e followed by all sigma_{H,t}, quadruples outer, samples
/// inner. Throws ParameterOutOfRange on an empty or out-of-range sample list.
Representation standard_rep(const BipartiteGraph& g, std::span<const double> t_samples);

struct CheckResult {
  std::string relation;
  double max_deviation = 0.0;
  bool pass = false;
};
using CheckReport = std::vector<CheckResult>;

bool all_pass(const CheckReport& r);

/// "projection", "GP1_U", "GP1_V", "GP2".
CheckReport check_gp(const Representation& rep, double tol = kTau);

struct EdgeGeneratorFamily {
  BipartiteGraph graph;
  std::vector<ComplexMatrix> x;  // x_e = P_u P_v, indexed by edge
  std::vector<Summand> summands;
};

EdgeGeneratorFamily edge_generators(const Representation& rep);

/// "GC1", "GC2", "GC3", "GC4", "xxx=xx".
CheckReport check_gc(const EdgeGeneratorFamily& fam, double tol = kTau);

/// Product of the images along the word. Throws UnknownVertex.
ComplexMatrix evaluate_word(const Representation& rep, std::span<const std::string> word);

/// Collapses consecutive repeats, then tests adjacency of neighbours.
bool is_path_word(const BipartiteGraph& g, std::span<const std::string> word);

struct SandwichReport {
  bool applicable = false;  // no K_{2,2} contains x1, y, x2
  double norm = 0.0;        // max-norm of P_x1 P_y P_x2
  bool pass = true;
};

/// Throws SideMismatch unless x1, x2 share a side, y is on the other and
/// x1 != x2.
SandwichReport sandwich_check(const Representation& rep, std::string_view x1, std::string_view y,
                              std::string_view x2, double tol = kTau);

/// Dimension of the commutant of the image set; 1 means irreducible.
std::size_t commutant_dim(const Representation& rep);

/// Extends a representation of a subgraph h by zero. Labels of h must occur
/// in g on the same sides (or all swapped) with every edge of h an edge of g.
/// Throws NotASubgraph.
Representation subgraph_quotient_rep(const BipartiteGraph& g, const BipartiteGraph& h,
                                     const Representation& rep_h);

struct PhiContext {
  BipartiteGraph source;
  BipartiteGraph target;
  EdgeBijection f;
  std::vector<std::vector<EdgeIndex>> I;  // by source global id: target edges
  std::vector<std::vector<EdgeIndex>> J;  // by target global id: source edges
};

PhiContext make_phi_context(const BipartiteGraph& g, const BipartiteGraph& h, const EdgeBijection& f);

/// Sum over I(x) of P_u' P_v' in a representation of the target graph.
/// Throws UnknownVertex.
ComplexMatrix phi_image(const PhiContext& ctx, std::string_view x, const Representation& target_rep);

struct PhiReport {
  CheckReport checks;  // phi.* in standard_rep(h), phi_inv.* in standard_rep(g)
  bool pass = false;
  std::optional<std::string> caveat;  // set when either graph contains K_{2,3}
};

/// Throws WitnessInvalid if f fails verify_witness.
PhiReport verify_phi(const BipartiteGraph& g, const BipartiteGraph& h, const EdgeBijection& f,
                     std::span<const double> t_samples, double tol = kTau);

}  // namespace bga
