#pragma once

// Isomorphism decision for bipartite graph C*-algebras. Two algebras are
// isomorphic iff some edge bijection f: E -> E' maps 4-edge sets forming a
// K_{2,2} exactly onto such sets (both directions) and, inside each K_{2,2},
// preserves which edges are adjacent.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bga/graph.hpp"

namespace bga {

struct EdgeBijection {
  std::vector<EdgeIndex> forward;
  std::vector<EdgeIndex> backward;

  /// Throws NotABijection unless `forward` is a permutation of 0..n-1.
  static EdgeBijection from_forward(std::vector<EdgeIndex> forward);
  EdgeBijection inverse() const { return {backward, forward}; }
};

enum class RejectionReason { CountMismatch, CertificateMismatch, ExhaustedSearch };

std::string_view to_string(RejectionReason r) noexcept;

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<EdgeBijection> witness;
  std::optional<RejectionReason> reason;
};

/// Pruned search: count prechecks, invariant comparison, joint colour
/// refinement, then backtracking over quadruple-covered edges. Loose edges
/// are matched in canonical order. Deterministic.
IsoVerdict decide_iso(const BipartiteGraph& g, const BipartiteGraph& h);

/// Exhaustive oracle over all |E|! bijections, testing both conditions on
/// every 4-subset directly. Throws SizeBoundExceeded above `bound` edges.
IsoVerdict brute_force_iso(const BipartiteGraph& g, const BipartiteGraph& h, std::size_t bound = 8);

struct WitnessReport {
  bool valid = false;
  std::optional<std::string> violation;  // first violation found
};

/// Checks that f sends the K_{2,2} sets of g exactly onto those of h and
/// preserves adjacency within each. Throws NotABijection.
WitnessReport verify_witness(const BipartiteGraph& g, const BipartiteGraph& h, const EdgeBijection& f);
WitnessReport verify_witness(const BipartiteGraph& g, const BipartiteGraph& h,
                             std::span<const EdgeIndex> forward);

}  // namespace bga
