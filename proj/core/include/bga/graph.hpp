#pragma once

// Bipartite graph model G = (U, V, E) and the combinatorial machinery the
// algebra layer is built on: induced subgraphs, isomorphism with the side
// swap, 4-cycle (K_{2,2}) enumeration, loose edges and their reduction.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bga {

enum class Side : std::uint8_t { U, V };

constexpr Side opposite(Side s) noexcept { return s == Side::U ? Side::V : Side::U; }

struct Vertex {
  Side side;
  std::size_t index;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Edge stored by side-local indices; u indexes U, v indexes V.
struct Edge {
  std::size_t u;
  std::size_t v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeIndex = std::size_t;
using LabelPair = std::pair<std::string, std::string>;

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds a normalized graph. Each edge names one U label and one V label,
  /// in either order. Throws DuplicateLabel, CrossSideEdge or UnknownEndpoint.
  BipartiteGraph(std::vector<std::string> u_labels, std::vector<std::string> v_labels,
                 const std::vector<LabelPair>& edges);

  /// Index-based construction; duplicate edges are rejected.
  static BipartiteGraph from_indices(std::vector<std::string> u_labels,
                                     std::vector<std::string> v_labels,
                                     std::vector<Edge> edges);

  const std::vector<std::string>& u_labels() const noexcept { return u_labels_; }
  const std::vector<std::string>& v_labels() const noexcept { return v_labels_; }
  std::size_t u_count() const noexcept { return u_labels_.size(); }
  std::size_t v_count() const noexcept { return v_labels_.size(); }
  std::size_t vertex_count() const noexcept { return u_count() + v_count(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in canonical order: lexicographic on (U-index, V-index).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  LabelPair edge_labels(EdgeIndex e) const;

  bool adjacent(std::size_t u, std::size_t v) const noexcept;
  std::optional<EdgeIndex> edge_index(std::size_t u, std::size_t v) const noexcept;
  /// Looks up the edge joining two labels given in either order; throws UnknownEdge.
  EdgeIndex edge_index(std::string_view a, std::string_view b) const;

  std::optional<Vertex> find_vertex(std::string_view label) const;
  /// Throws UnknownVertex.
  Vertex vertex(std::string_view label) const;
  const std::string& label(Vertex x) const;

  /// Dense vertex numbering: U vertices first, then V.
  std::size_t global_id(Vertex x) const noexcept {
    return x.side == Side::U ? x.index : u_count() + x.index;
  }
  Vertex vertex_at(std::size_t global) const noexcept {
    return global < u_count() ? Vertex{Side::U, global} : Vertex{Side::V, global - u_count()};
  }

  const std::vector<std::size_t>& neighbors_of_u(std::size_t u) const { return u_adj_.at(u); }
  const std::vector<std::size_t>& neighbors_of_v(std::size_t v) const { return v_adj_.at(v); }
  const std::vector<std::size_t>& neighbors(Vertex x) const {
    return x.side == Side::U ? neighbors_of_u(x.index) : neighbors_of_v(x.index);
  }
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }

  /// Structural equality: same labels in the same order and the same edge set.
  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.u_labels_ == b.u_labels_ && a.v_labels_ == b.v_labels_ && a.edges_ == b.edges_;
  }

 private:
  void build_index();

  std::vector<std::string> u_labels_;
  std::vector<std::string> v_labels_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, Vertex> by_label_;
  std::vector<std::vector<std::size_t>> u_adj_;
  std::vector<std::vector<std::size_t>> v_adj_;
  std::vector<std::int64_t> edge_of_;  // u * |V| + v -> edge index or -1
};

/// A walk x_1 ... x_n given by vertex labels; s(mu) = x_1, r(mu) = x_n.
struct Path {
  std::vector<std::string> vertices;

  const std::string& source() const { return vertices.front(); }
  const std::string& range() const { return vertices.back(); }
};

/// A K_{2,2} subgraph: four edge indices (ascending) forming a 4-cycle,
/// split into its two pairs of vertex-disjoint (opposite) edges.
struct Quadruple {
  std::array<EdgeIndex, 4> members;
  std::array<std::array<EdgeIndex, 2>, 2> pairing;
  std::array<std::size_t, 2> u;  // the two U vertices, ascending
  std::array<std::size_t, 2> v;  // the two V vertices, ascending

  bool contains(EdgeIndex e) const noexcept {
    return members[0] == e || members[1] == e || members[2] == e || members[3] == e;
  }
  /// The opposite edge of a member.
  EdgeIndex partner(EdgeIndex e) const;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Complete bipartite graph K_{m,n} labelled u1..um, v1..vn.
BipartiteGraph complete_bipartite(std::size_t m, std::size_t n);

/// Disjoint union; labels of the two graphs must not collide.
BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b);

std::vector<std::string> neighbors(const BipartiteGraph& g, std::string_view label);

BipartiteGraph induced_by_vertices(const BipartiteGraph& g, std::span<const std::string> labels);
BipartiteGraph induced_by_edges(const BipartiteGraph& g, std::span<const EdgeIndex> edges);

/// Every vertex (isolated ones included) lies in a single component.
/// The graph without vertices counts as connected.
bool is_connected(const BipartiteGraph& g);

/// True iff consecutive labels are adjacent. Throws UnknownVertex.
bool is_path(const BipartiteGraph& g, std::span<const std::string> labels);
bool is_path(const BipartiteGraph& g, const Path& path);

/// Vertex bijections witnessing g ≅ h. When `swapped` is set, u_map sends
/// U(g) onto V(h) and v_map sends V(g) onto U(h).
struct GraphIsomorphism {
  bool swapped = false;
  std::vector<std::size_t> u_map;
  std::vector<std::size_t> v_map;
};

/// Bipartite graph isomorphism allowing the side swap. Colour refinement
/// seeds a backtracking search over U; V is matched by neighbourhood images.
std::optional<GraphIsomorphism> is_graph_isomorphic(const BipartiteGraph& g,
                                                    const BipartiteGraph& h);

/// Canonical relabelling (u1.., v1..) such that two graphs are isomorphic iff
/// their canonical forms are equal. Brute force over the smaller side;
/// throws SizeBoundExceeded when that side has more than 9 vertices.
BipartiteGraph canonical_form(const BipartiteGraph& g);

/// All K_{2,2} subgraphs, ordered by (u1, u2, v1, v2).
std::vector<Quadruple> enumerate_k22(const BipartiteGraph& g);

/// Edges lying in no K_{2,2}, ascending.
std::vector<EdgeIndex> loose_edges(const BipartiteGraph& g);

/// True iff K_{2,3} or K_{3,2} is a subgraph.
bool contains_k23(const BipartiteGraph& g);

struct LooseReduction {
  BipartiteGraph graph;
  std::size_t scalar_summands = 0;
};

/// Deletes one loose edge, splitting off a scalar summand.
/// Throws UnknownEdge or EdgeNotLoose.
LooseReduction reduce_loose_edge(const BipartiteGraph& g, EdgeIndex e);

/// Iterates reduce_loose_edge until no loose edge remains.
LooseReduction reduce_all_loose_edges(const BipartiteGraph& g);

}  // namespace bga
