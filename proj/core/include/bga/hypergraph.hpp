#pragma once

#include <map>
#include <string>
#include <vector>

#include "bga/graph.hpp"

namespace bga {

/// Undirected hypergraph (E0, E1, s) with a source map from hyperedges to
/// non-empty vertex subsets.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<std::string> hedges;
  std::map<std::string, std::vector<std::string>> source;

  /// Throws InvalidHypergraph on empty or dangling source sets.
  void validate() const;
};

/// Incidence graph: U = vertices, V = hyperedges, {x, e} is an edge iff x ∈ s(e).
BipartiteGraph from_hypergraph(const Hypergraph& h);

}  // namespace bga
