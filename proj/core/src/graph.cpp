#include "bga/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "bga/error.hpp"

namespace bga {

namespace {

void check_unique_labels(const std::vector<std::string>& u, const std::vector<std::string>& v) {
  std::set<std::string_view> seen;
  for (const auto& l : u) {
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + l + "'");
  }
  for (const auto& l : v) {
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + l + "'");
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<std::string> u_labels, std::vector<std::string> v_labels,
                               const std::vector<LabelPair>& edges)
    : u_labels_(std::move(u_labels)), v_labels_(std::move(v_labels)) {
  check_unique_labels(u_labels_, v_labels_);
  by_label_.clear();
  for (std::size_t i = 0; i < u_labels_.size(); ++i) by_label_.emplace(u_labels_[i], Vertex{Side::U, i});
  for (std::size_t i = 0; i < v_labels_.size(); ++i) by_label_.emplace(v_labels_[i], Vertex{Side::V, i});

  std::set<Edge> unique;
  for (const auto& [a, b] : edges) {
    auto xa = find_vertex(a);
    auto xb = find_vertex(b);
    if (!xa) throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + a + "' is not a vertex");
    if (!xb) throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + b + "' is not a vertex");
    if (xa->side == xb->side) {
      throw Error(ErrorCode::CrossSideEdge, "edge {" + a + ", " + b + "} joins two vertices of one side");
    }
    Edge e = xa->side == Side::U ? Edge{xa->index, xb->index} : Edge{xb->index, xa->index};
    if (!unique.insert(e).second) {
      throw Error(ErrorCode::DuplicateLabel, "parallel edge {" + a + ", " + b + "}");
    }
  }
  edges_.assign(unique.begin(), unique.end());
  build_index();
}

BipartiteGraph BipartiteGraph::from_indices(std::vector<std::string> u_labels,
                                            std::vector<std::string> v_labels,
                                            std::vector<Edge> edges) {
  BipartiteGraph g;
  g.u_labels_ = std::move(u_labels);
  g.v_labels_ = std::move(v_labels);
  check_unique_labels(g.u_labels_, g.v_labels_);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::DuplicateLabel, "parallel edge in index list");
  }
  for (const auto& e : edges) {
    if (e.u >= g.u_labels_.size() || e.v >= g.v_labels_.size()) {
      throw Error(ErrorCode::UnknownEndpoint, "edge index out of range");
    }
  }
  g.edges_ = std::move(edges);
  g.build_index();
  return g;
}

void BipartiteGraph::build_index() {
  by_label_.clear();
  for (std::size_t i = 0; i < u_labels_.size(); ++i) by_label_.emplace(u_labels_[i], Vertex{Side::U, i});
  for (std::size_t i = 0; i < v_labels_.size(); ++i) by_label_.emplace(v_labels_[i], Vertex{Side::V, i});
  u_adj_.assign(u_count(), {});
  v_adj_.assign(v_count(), {});
  edge_of_.assign(u_count() * v_count(), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    u_adj_[e.u].push_back(e.v);
    v_adj_[e.v].push_back(e.u);
    edge_of_[e.u * v_count() + e.v] = static_cast<std::int64_t>(i);
  }
  for (auto& n : v_adj_) std::sort(n.begin(), n.end());
}

LabelPair BipartiteGraph::edge_labels(EdgeIndex e) const {
  const auto& ed = edges_.at(e);
  return {u_labels_[ed.u], v_labels_[ed.v]};
}

bool BipartiteGraph::adjacent(std::size_t u, std::size_t v) const noexcept {
  return edge_index(u, v).has_value();
}

std::optional<EdgeIndex> BipartiteGraph::edge_index(std::size_t u, std::size_t v) const noexcept {
  if (u >= u_count() || v >= v_count()) return std::nullopt;
  auto idx = edge_of_[u * v_count() + v];
  if (idx < 0) return std::nullopt;
  return static_cast<EdgeIndex>(idx);
}

EdgeIndex BipartiteGraph::edge_index(std::string_view a, std::string_view b) const {
  auto xa = find_vertex(a);
  auto xb = find_vertex(b);
  if (xa && xb && xa->side != xb->side) {
    auto idx = xa->side == Side::U ? edge_index(xa->index, xb->index) : edge_index(xb->index, xa->index);
    if (idx) return *idx;
  }
  throw Error(ErrorCode::UnknownEdge,
              "no edge {" + std::string(a) + ", " + std::string(b) + "} in graph");
}

std::optional<Vertex> BipartiteGraph::find_vertex(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Vertex BipartiteGraph::vertex(std::string_view label) const {
  auto x = find_vertex(label);
  if (!x) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
  return *x;
}

const std::string& BipartiteGraph::label(Vertex x) const {
  return x.side == Side::U ? u_labels_.at(x.index) : v_labels_.at(x.index);
}

EdgeIndex Quadruple::partner(EdgeIndex e) const {
  for (const auto& p : pairing) {
    if (p[0] == e) return p[1];
    if (p[1] == e) return p[0];
  }
  throw Error(ErrorCode::UnknownEdge, "edge is not a member of the quadruple");
}

BipartiteGraph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<std::string> u, v;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) u.push_back("u" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n; ++j) v.push_back("v" + std::to_string(j + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) edges.push_back({i, j});
  return BipartiteGraph::from_indices(std::move(u), std::move(v), std::move(edges));
}

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  auto u = a.u_labels();
  auto v = a.v_labels();
  u.insert(u.end(), b.u_labels().begin(), b.u_labels().end());
  v.insert(v.end(), b.v_labels().begin(), b.v_labels().end());
  auto edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.u_count(), e.v + a.v_count()});
  return BipartiteGraph::from_indices(std::move(u), std::move(v), std::move(edges));
}

std::vector<std::string> neighbors(const BipartiteGraph& g, std::string_view label) {
  auto x = g.vertex(label);
  std::vector<std::string> out;
  for (auto y : g.neighbors(x)) out.push_back(g.label({opposite(x.side), y}));
  return out;
}

BipartiteGraph induced_by_vertices(const BipartiteGraph& g, std::span<const std::string> labels) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (const auto& l : labels) keep[g.global_id(g.vertex(l))] = true;

  std::vector<std::string> u, v;
  std::vector<std::size_t> u_new(g.u_count()), v_new(g.v_count());
  for (std::size_t i = 0; i < g.u_count(); ++i) {
    if (keep[i]) { u_new[i] = u.size(); u.push_back(g.u_labels()[i]); }
  }
  for (std::size_t j = 0; j < g.v_count(); ++j) {
    if (keep[g.u_count() + j]) { v_new[j] = v.size(); v.push_back(g.v_labels()[j]); }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[g.u_count() + e.v]) edges.push_back({u_new[e.u], v_new[e.v]});
  }
  return BipartiteGraph::from_indices(std::move(u), std::move(v), std::move(edges));
}

BipartiteGraph induced_by_edges(const BipartiteGraph& g, std::span<const EdgeIndex> edge_set) {
  std::vector<bool> keep_u(g.u_count(), false), keep_v(g.v_count(), false);
  std::vector<Edge> picked;
  for (auto e : edge_set) {
    if (e >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
    const auto& ed = g.edge(e);
    keep_u[ed.u] = true;
    keep_v[ed.v] = true;
    picked.push_back(ed);
  }
  std::vector<std::string> u, v;
  std::vector<std::size_t> u_new(g.u_count()), v_new(g.v_count());
  for (std::size_t i = 0; i < g.u_count(); ++i) {
    if (keep_u[i]) { u_new[i] = u.size(); u.push_back(g.u_labels()[i]); }
  }
  for (std::size_t j = 0; j < g.v_count(); ++j) {
    if (keep_v[j]) { v_new[j] = v.size(); v.push_back(g.v_labels()[j]); }
  }
  std::vector<Edge> edges;
  for (const auto& e : picked) edges.push_back({u_new[e.u], v_new[e.v]});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph::from_indices(std::move(u), std::move(v), std::move(edges));
}

bool is_connected(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = g.vertex_at(stack.back());
    stack.pop_back();
    for (auto y : g.neighbors(x)) {
      auto id = g.global_id({opposite(x.side), y});
      if (!seen[id]) {
        seen[id] = true;
        ++reached;
        stack.push_back(id);
      }
    }
  }
  return reached == n;
}

bool is_path(const BipartiteGraph& g, std::span<const std::string> labels) {
  std::vector<Vertex> xs;
  xs.reserve(labels.size());
  for (const auto& l : labels) xs.push_back(g.vertex(l));
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const auto& a = xs[i];
    const auto& b = xs[i + 1];
    if (a.side == b.side) return false;
    bool adj = a.side == Side::U ? g.adjacent(a.index, b.index) : g.adjacent(b.index, a.index);
    if (!adj) return false;
  }
  return true;
}

bool is_path(const BipartiteGraph& g, const Path& path) { return is_path(g, path.vertices); }

// ---------------------------------------------------------------------------
// Graph isomorphism

namespace {

/// A bipartite graph viewed with a chosen side as "rows".
struct Oriented {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::size_t>> row_adj;
  std::vector<std::vector<std::size_t>> col_adj;
  std::vector<std::vector<bool>> adj;  // rows x cols
};

Oriented orient(const BipartiteGraph& g, bool swap) {
  Oriented o;
  o.rows = swap ? g.v_count() : g.u_count();
  o.cols = swap ? g.u_count() : g.v_count();
  o.row_adj.assign(o.rows, {});
  o.col_adj.assign(o.cols, {});
  o.adj.assign(o.rows, std::vector<bool>(o.cols, false));
  for (const auto& e : g.edges()) {
    std::size_t r = swap ? e.v : e.u;
    std::size_t c = swap ? e.u : e.v;
    o.row_adj[r].push_back(c);
    o.col_adj[c].push_back(r);
    o.adj[r][c] = true;
  }
  return o;
}

/// Joint 1-WL colouring of two oriented graphs. Colours are comparable across
/// both because signatures share one dictionary.
std::pair<std::vector<int>, std::vector<int>> joint_refine(const Oriented& a, const Oriented& b) {
  auto init = [](const Oriented& o) {
    std::vector<int> c(o.rows + o.cols);
    for (std::size_t i = 0; i < o.rows; ++i) c[i] = 0;
    for (std::size_t j = 0; j < o.cols; ++j) c[o.rows + j] = 1;
    return c;
  };
  std::vector<int> ca = init(a), cb = init(b);
  std::size_t classes = 2;
  for (;;) {
    using Sig = std::pair<int, std::vector<int>>;
    auto sigs = [](const Oriented& o, const std::vector<int>& c) {
      std::vector<Sig> s(o.rows + o.cols);
      for (std::size_t i = 0; i < o.rows; ++i) {
        std::vector<int> nb;
        for (auto j : o.row_adj[i]) nb.push_back(c[o.rows + j]);
        std::sort(nb.begin(), nb.end());
        s[i] = {c[i], std::move(nb)};
      }
      for (std::size_t j = 0; j < o.cols; ++j) {
        std::vector<int> nb;
        for (auto i : o.col_adj[j]) nb.push_back(c[i]);
        std::sort(nb.begin(), nb.end());
        s[o.rows + j] = {c[o.rows + j], std::move(nb)};
      }
      return s;
    };
    auto sa = sigs(a, ca);
    auto sb = sigs(b, cb);
    std::map<Sig, int> dict;
    for (const auto& s : sa) dict.emplace(s, 0);
    for (const auto& s : sb) dict.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : dict) v = next++;
    for (std::size_t i = 0; i < sa.size(); ++i) ca[i] = dict[sa[i]];
    for (std::size_t i = 0; i < sb.size(); ++i) cb[i] = dict[sb[i]];
    if (dict.size() == classes) break;
    classes = dict.size();
  }
  return {ca, cb};
}

class OrientedMatcher {
 public:
  OrientedMatcher(const Oriented& a, const Oriented& b) : a_(a), b_(b) {}

  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> run() {
    if (a_.rows != b_.rows || a_.cols != b_.cols) return std::nullopt;
    auto [ca, cb] = joint_refine(a_, b_);
    auto sorted_a = ca, sorted_b = cb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    ca_ = std::move(ca);
    cb_ = std::move(cb);

    // Rows ordered by colour-class size so constrained rows are placed first.
    std::map<int, std::size_t> class_size;
    for (std::size_t i = 0; i < a_.rows; ++i) ++class_size[ca_[i]];
    order_.resize(a_.rows);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(class_size[ca_[x]], x) < std::tie(class_size[ca_[y]], y);
    });
    row_map_.assign(a_.rows, 0);
    used_.assign(b_.rows, false);
    if (!extend(0)) return std::nullopt;
    auto col_map = match_columns(a_.rows);
    return std::make_pair(row_map_, *col_map);
  }

 private:
  // Column signature: (colour, adjacency to the first `depth` placed rows).
  using ColKey = std::pair<int, std::vector<bool>>;

  std::optional<std::vector<std::size_t>> match_columns(std::size_t depth) const {
    std::vector<std::pair<ColKey, std::size_t>> ka, kb;
    for (std::size_t j = 0; j < a_.cols; ++j) {
      std::vector<bool> m(depth);
      for (std::size_t d = 0; d < depth; ++d) m[d] = a_.adj[order_[d]][j];
      ka.push_back({{ca_[a_.rows + j], std::move(m)}, j});
    }
    for (std::size_t j = 0; j < b_.cols; ++j) {
      std::vector<bool> m(depth);
      for (std::size_t d = 0; d < depth; ++d) m[d] = b_.adj[row_map_[order_[d]]][j];
      kb.push_back({{cb_[b_.rows + j], std::move(m)}, j});
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    std::vector<std::size_t> col_map(a_.cols);
    for (std::size_t i = 0; i < ka.size(); ++i) {
      if (ka[i].first != kb[i].first) return std::nullopt;
      col_map[ka[i].second] = kb[i].second;
    }
    return col_map;
  }

  bool extend(std::size_t depth) {
    if (!match_columns(depth)) return false;
    if (depth == a_.rows) return true;
    std::size_t r = order_[depth];
    for (std::size_t cand = 0; cand < b_.rows; ++cand) {
      if (used_[cand] || cb_[cand] != ca_[r]) continue;
      used_[cand] = true;
      row_map_[r] = cand;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

  const Oriented& a_;
  const Oriented& b_;
  std::vector<int> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> row_map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<GraphIsomorphism> is_graph_isomorphic(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (g.edge_count() != h.edge_count() || g.vertex_count() != h.vertex_count()) return std::nullopt;
  const Oriented og = orient(g, false);
  for (bool swap : {false, true}) {
    const Oriented oh = orient(h, swap);
    OrientedMatcher matcher(og, oh);
    if (auto m = matcher.run()) {
      return GraphIsomorphism{swap, std::move(m->first), std::move(m->second)};
    }
  }
  return std::nullopt;
}

BipartiteGraph canonical_form(const BipartiteGraph& g) {
  using Key = std::tuple<std::size_t, std::size_t, std::vector<std::vector<bool>>>;
  std::optional<Key> best;

  auto consider = [&](bool swap) {
    const Oriented o = orient(g, swap);
    if (o.rows > 9) throw Error(ErrorCode::SizeBoundExceeded, "canonical_form: side larger than 9");
    std::vector<std::size_t> perm(o.rows);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // Column masks over rows in permuted order; sorted to canonicalize columns.
      std::vector<std::vector<bool>> cols(o.cols, std::vector<bool>(o.rows));
      for (std::size_t j = 0; j < o.cols; ++j)
        for (std::size_t p = 0; p < o.rows; ++p) cols[j][p] = o.adj[perm[p]][j];
      std::sort(cols.begin(), cols.end(), std::greater<>());
      Key key{o.rows, o.cols, std::move(cols)};
      if (!best || key < *best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  if (g.u_count() <= g.v_count()) consider(false);
  if (g.v_count() <= g.u_count()) consider(true);

  const auto& [rows, cols, masks] = *best;
  std::vector<std::string> u, v;
  for (std::size_t i = 0; i < rows; ++i) u.push_back("u" + std::to_string(i + 1));
  for (std::size_t j = 0; j < cols; ++j) v.push_back("v" + std::to_string(j + 1));
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (masks[j][i]) edges.push_back({i, j});
  return BipartiteGraph::from_indices(std::move(u), std::move(v), std::move(edges));
}

// ---------------------------------------------------------------------------
// K_{2,2} machinery

std::vector<Quadruple> enumerate_k22(const BipartiteGraph& g) {
  std::vector<Quadruple> out;
  const std::size_t nu = g.u_count();
  std::vector<std::size_t> common;
  for (std::size_t u1 = 0; u1 < nu; ++u1) {
    for (std::size_t u2 = u1 + 1; u2 < nu; ++u2) {
      common.clear();
      for (auto v : g.neighbors_of_u(u1))
        if (g.adjacent(u2, v)) common.push_back(v);
      for (std::size_t a = 0; a < common.size(); ++a) {
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          const std::size_t v1 = common[a], v2 = common[b];
          const EdgeIndex e11 = *g.edge_index(u1, v1);
          const EdgeIndex e12 = *g.edge_index(u1, v2);
          const EdgeIndex e21 = *g.edge_index(u2, v1);
          const EdgeIndex e22 = *g.edge_index(u2, v2);
          Quadruple q;
          q.members = {e11, e12, e21, e22};
          q.pairing = {{{e11, e22}, {e12, e21}}};
          q.u = {u1, u2};
          q.v = {v1, v2};
          out.push_back(q);
        }
      }
    }
  }
  return out;
}

std::vector<EdgeIndex> loose_edges(const BipartiteGraph& g) {
  std::vector<bool> covered(g.edge_count(), false);
  for (const auto& q : enumerate_k22(g))
    for (auto e : q.members) covered[e] = true;
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!covered[e]) out.push_back(e);
  return out;
}

bool contains_k23(const BipartiteGraph& g) {
  auto has_triple = [](std::size_t n, auto common_count) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (common_count(a, b) >= 3) return true;
    return false;
  };
  auto common_u = [&](std::size_t a, std::size_t b) {
    std::size_t c = 0;
    for (auto v : g.neighbors_of_u(a)) c += g.adjacent(b, v) ? 1 : 0;
    return c;
  };
  auto common_v = [&](std::size_t a, std::size_t b) {
    std::size_t c = 0;
    for (auto u : g.neighbors_of_v(a)) c += g.adjacent(u, b) ? 1 : 0;
    return c;
  };
  return has_triple(g.u_count(), common_u) || has_triple(g.v_count(), common_v);
}

LooseReduction reduce_loose_edge(const BipartiteGraph& g, EdgeIndex e) {
  if (e >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  for (const auto& q : enumerate_k22(g)) {
    if (q.contains(e)) {
      auto [a, b] = g.edge_labels(e);
      throw Error(ErrorCode::EdgeNotLoose, "edge {" + a + ", " + b + "} lies in a K_{2,2}");
    }
  }
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return {BipartiteGraph::from_indices(g.u_labels(), g.v_labels(), std::move(edges)), 1};
}

LooseReduction reduce_all_loose_edges(const BipartiteGraph& g) {
  LooseReduction acc{g, 0};
  for (;;) {
    auto loose = loose_edges(acc.graph);
    if (loose.empty()) return acc;
    auto step = reduce_loose_edge(acc.graph, loose.front());
    acc.graph = std::move(step.graph);
    acc.scalar_summands += step.scalar_summands;
  }
}

}  // namespace bga
