#pragma once

// Combinatorial model of the space of one- and two-dimensional irreducible
// representations: one clopen point per loose edge and, per K_{2,2}
// subgraph, an interval glued to four boundary points whose two
// non-Hausdorff pairs are the opposite-edge pairs of the 4-cycle.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bga/graph.hpp"

namespace bga {

/// The data quantified over by the classification: edges, their K_{2,2}
/// quadruples with pairings, and the loose remainder.
struct DerivedStructure {
  std::size_t edge_count = 0;
  std::vector<Quadruple> quadruples;
  std::vector<EdgeIndex> loose;
  /// quadruple ids containing each edge
  std::vector<std::vector<std::size_t>> incidence;
};

DerivedStructure derived_structure(const BipartiteGraph& g);

/// Disjoint union with the second structure's edges shifted by
/// a.edge_count; used to colour two structures in one dictionary.
DerivedStructure disjoint_union(const DerivedStructure& a, const DerivedStructure& b);

struct SkeletonComponent {
  std::array<EdgeIndex, 4> boundary;                 // boundary points, labelled by edge
  std::array<std::array<EdgeIndex, 2>, 2> pairing;   // non-Hausdorff boundary pairs
};

struct SpecSkeleton {
  std::vector<EdgeIndex> clopen_points;
  std::vector<SkeletonComponent> components;
};

SpecSkeleton spec_skeleton(const BipartiteGraph& g);
SpecSkeleton spec_skeleton(const DerivedStructure& s);

struct InvariantVector {
  std::size_t edge_count = 0;
  std::size_t loose_count = 0;
  std::size_t quadruple_count = 0;
  std::vector<std::size_t> quadruple_degrees;               // sorted multiset
  std::vector<std::vector<std::size_t>> partner_profiles;   // per edge, sorted; outer sorted

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariant_vector(const DerivedStructure& s);

/// One round-stable colour refinement of the edges. Colours are ranks of
/// (old colour, multiset over containing quadruples of (partner colour,
/// sorted colours of the other pair)), so the result only depends on the
/// structure up to isomorphism and refines the input order.
std::vector<int> refine_edge_colors(const DerivedStructure& s, std::vector<int> colors);

/// Initial colours: quadruple degree of each edge.
std::vector<int> initial_edge_colors(const DerivedStructure& s);

/// Canonical byte string: equal iff the two structures are isomorphic as
/// quadruple systems with pairings (and have equal edge counts).
std::vector<std::uint8_t> canonical_certificate(const DerivedStructure& s);

std::string to_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace bga
