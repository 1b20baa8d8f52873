#include "bga/hypergraph.hpp"

#include <set>

#include "bga/error.hpp"

namespace bga {

void Hypergraph::validate() const {
  std::set<std::string> known(vertices.begin(), vertices.end());
  std::set<std::string> hs(hedges.begin(), hedges.end());
  for (const auto& e : hedges) {
    auto it = source.find(e);
    if (it == source.end() || it->second.empty()) {
      throw Error(ErrorCode::InvalidHypergraph, "hyperedge '" + e + "' has an empty source set");
    }
    for (const auto& x : it->second) {
      if (!known.contains(x)) {
        throw Error(ErrorCode::InvalidHypergraph,
                    "source of '" + e + "' names unknown vertex '" + x + "'");
      }
    }
  }
  for (const auto& [e, _] : source) {
    if (!hs.contains(e)) {
      throw Error(ErrorCode::InvalidHypergraph, "source map names unknown hyperedge '" + e + "'");
    }
  }
}

BipartiteGraph from_hypergraph(const Hypergraph& h) {
  h.validate();
  std::vector<LabelPair> edges;
  for (const auto& e : h.hedges) {
    // Repeated members of a source set collapse to one incidence.
    std::set<std::string> members(h.source.at(e).begin(), h.source.at(e).end());
    for (const auto& x : members) edges.emplace_back(x, e);
  }
  return BipartiteGraph(h.vertices, h.hedges, edges);
}

}  // namespace bga
