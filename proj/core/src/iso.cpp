#include "bga/iso.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "bga/error.hpp"
#include "bga/skeleton.hpp"

namespace bga {

EdgeBijection EdgeBijection::from_forward(std::vector<EdgeIndex> forward) {
  std::vector<EdgeIndex> backward(forward.size(), forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (forward[i] >= forward.size() || backward[forward[i]] != forward.size()) {
      throw Error(ErrorCode::NotABijection, "edge map is not a bijection");
    }
    backward[forward[i]] = i;
  }
  return {std::move(forward), std::move(backward)};
}

std::string_view to_string(RejectionReason r) noexcept {
  switch (r) {
    case RejectionReason::CountMismatch: return "count mismatch";
    case RejectionReason::CertificateMismatch: return "certificate mismatch";
    case RejectionReason::ExhaustedSearch: return "exhausted search";
  }
  return "unknown";
}

namespace {

IsoVerdict reject(RejectionReason r) { return {false, std::nullopt, r}; }

using Members = std::array<EdgeIndex, 4>;
using Pairing = std::array<std::array<EdgeIndex, 2>, 2>;

Pairing normalized(Pairing p) {
  for (auto& pr : p)
    if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
  if (p[1] < p[0]) std::swap(p[0], p[1]);
  return p;
}

Members sorted_members(Members m) {
  std::sort(m.begin(), m.end());
  return m;
}

/// Quadruples keyed by their member set, valued by normalized pairing.
std::map<Members, Pairing> quadruple_table(const DerivedStructure& s) {
  std::map<Members, Pairing> t;
  for (const auto& q : s.quadruples) t.emplace(sorted_members(q.members), normalized(q.pairing));
  return t;
}

/// Does the image of q under `map` form a quadruple of the target with the
/// image pairing?
bool image_is_quadruple(const Quadruple& q, const std::vector<EdgeIndex>& map,
                        const std::map<Members, Pairing>& target) {
  Members m{map[q.members[0]], map[q.members[1]], map[q.members[2]], map[q.members[3]]};
  auto it = target.find(sorted_members(m));
  if (it == target.end()) return false;
  Pairing p{{{map[q.pairing[0][0]], map[q.pairing[0][1]]}, {map[q.pairing[1][0]], map[q.pairing[1][1]]}}};
  return normalized(p) == it->second;
}

/// Pair relation between two covered edges: number of quadruples in which
/// they are opposite and number in which they are adjacent.
struct PairRelation {
  std::vector<std::array<int, 2>> rel;
  std::size_t n = 0;
  const std::array<int, 2>& at(EdgeIndex a, EdgeIndex b) const { return rel[a * n + b]; }
};

PairRelation pair_relation(const DerivedStructure& s) {
  PairRelation pr;
  pr.n = s.edge_count;
  pr.rel.assign(pr.n * pr.n, {0, 0});
  for (const auto& q : s.quadruples) {
    for (auto a : q.members) {
      for (auto b : q.members) {
        if (a == b) continue;
        if (q.partner(a) == b) ++pr.rel[a * pr.n + b][0];
        else ++pr.rel[a * pr.n + b][1];
      }
    }
  }
  return pr;
}

class WitnessSearch {
 public:
  WitnessSearch(const DerivedStructure& a, const DerivedStructure& b, std::vector<int> ca,
                std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        ra_(pair_relation(a)), rb_(pair_relation(b)), target_(quadruple_table(b)) {}

  std::optional<std::vector<EdgeIndex>> run() {
    const std::size_t n = a_.edge_count;
    map_.assign(n, n);
    used_.assign(n, false);
    placed_.assign(n, false);
    plan_order();
    if (!extend(0)) return std::nullopt;
    // Loose edges carry no constraint; match them in canonical order.
    for (std::size_t i = 0; i < a_.loose.size(); ++i) map_[a_.loose[i]] = b_.loose[i];
    return map_;
  }

 private:
  void plan_order() {
    std::map<int, std::size_t> class_size;
    for (EdgeIndex e = 0; e < a_.edge_count; ++e)
      if (!a_.incidence[e].empty()) ++class_size[ca_[e]];
    std::vector<bool> chosen(a_.edge_count, false);
    std::vector<int> links(a_.edge_count, 0);
    std::size_t covered = a_.edge_count - a_.loose.size();
    while (order_.size() < covered) {
      std::optional<EdgeIndex> pick;
      for (EdgeIndex e = 0; e < a_.edge_count; ++e) {
        if (chosen[e] || a_.incidence[e].empty()) continue;
        if (!pick) { pick = e; continue; }
        auto key = [&](EdgeIndex x) { return std::make_tuple(-links[x], class_size[ca_[x]], x); };
        if (key(e) < key(*pick)) pick = e;
      }
      chosen[*pick] = true;
      order_.push_back(*pick);
      for (auto qi : a_.incidence[*pick])
        for (auto x : a_.quadruples[qi].members) ++links[x];
    }
  }

  bool consistent(EdgeIndex e, EdgeIndex cand) const {
    for (std::size_t d = 0; d < depth_; ++d) {
      EdgeIndex x = order_[d];
      if (ra_.at(x, e) != rb_.at(map_[x], cand)) return false;
    }
    return true;
  }

  bool quads_close(EdgeIndex e) const {
    for (auto qi : a_.incidence[e]) {
      const auto& q = a_.quadruples[qi];
      bool complete = std::all_of(q.members.begin(), q.members.end(), [&](EdgeIndex x) { return placed_[x]; });
      if (complete && !image_is_quadruple(q, map_, target_)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const EdgeIndex e = order_[depth];
    for (EdgeIndex cand = 0; cand < b_.edge_count; ++cand) {
      if (used_[cand] || b_.incidence[cand].empty() || cb_[cand] != ca_[e]) continue;
      depth_ = depth;
      if (!consistent(e, cand)) continue;
      map_[e] = cand;
      used_[cand] = true;
      placed_[e] = true;
      if (quads_close(e) && extend(depth + 1)) return true;
      placed_[e] = false;
      used_[cand] = false;
      map_[e] = a_.edge_count;
    }
    return false;
  }

  const DerivedStructure& a_;
  const DerivedStructure& b_;
  std::vector<int> ca_, cb_;
  PairRelation ra_, rb_;
  std::map<Members, Pairing> target_;
  std::vector<EdgeIndex> order_;
  std::vector<EdgeIndex> map_;
  std::vector<bool> used_, placed_;
  std::size_t depth_ = 0;
};

}  // namespace

IsoVerdict decide_iso(const BipartiteGraph& g, const BipartiteGraph& h) {
  const auto sa = derived_structure(g);
  const auto sb = derived_structure(h);
  if (sa.edge_count != sb.edge_count || sa.quadruples.size() != sb.quadruples.size() ||
      sa.loose.size() != sb.loose.size()) {
    return reject(RejectionReason::CountMismatch);
  }
  if (invariant_vector(sa) != invariant_vector(sb)) return reject(RejectionReason::CertificateMismatch);

  const auto joint = disjoint_union(sa, sb);
  auto colors = refine_edge_colors(joint, initial_edge_colors(joint));
  std::vector<int> ca(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(sa.edge_count));
  std::vector<int> cb(colors.begin() + static_cast<std::ptrdiff_t>(sa.edge_count), colors.end());
  {
    auto x = ca, y = cb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return reject(RejectionReason::CertificateMismatch);
  }

  WitnessSearch search(sa, sb, std::move(ca), std::move(cb));
  auto map = search.run();
  if (!map) return reject(RejectionReason::ExhaustedSearch);
  return {true, EdgeBijection::from_forward(std::move(*map)), std::nullopt};
}

// ---------------------------------------------------------------------------
// Oracle: direct evaluation of both conditions, no quadruple enumeration.

namespace {

bool shares_vertex(const BipartiteGraph& g, EdgeIndex a, EdgeIndex b) {
  const auto& x = g.edge(a);
  const auto& y = g.edge(b);
  return x.u == y.u || x.v == y.v;
}

/// Four distinct edges form a K_{2,2} iff they span exactly two vertices per side.
bool forms_k22(const BipartiteGraph& g, const std::array<EdgeIndex, 4>& es) {
  std::array<std::size_t, 4> us, vs;
  for (int i = 0; i < 4; ++i) {
    us[i] = g.edge(es[i]).u;
    vs[i] = g.edge(es[i]).v;
  }
  std::sort(us.begin(), us.end());
  std::sort(vs.begin(), vs.end());
  std::size_t nu = 1, nv = 1;
  for (int i = 1; i < 4; ++i) {
    nu += us[i] != us[i - 1] ? 1 : 0;
    nv += vs[i] != vs[i - 1] ? 1 : 0;
  }
  return nu == 2 && nv == 2;
}

std::vector<std::array<EdgeIndex, 4>> four_subsets(std::size_t n) {
  std::vector<std::array<EdgeIndex, 4>> out;
  for (EdgeIndex a = 0; a < n; ++a)
    for (EdgeIndex b = a + 1; b < n; ++b)
      for (EdgeIndex c = b + 1; c < n; ++c)
        for (EdgeIndex d = c + 1; d < n; ++d) out.push_back({a, b, c, d});
  return out;
}

bool satisfies_conditions(const BipartiteGraph& g, const BipartiteGraph& h,
                          const std::vector<std::array<EdgeIndex, 4>>& subsets,
                          const std::vector<char>& source_k22, const std::vector<EdgeIndex>& f) {
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    const auto& es = subsets[s];
    std::array<EdgeIndex, 4> img{f[es[0]], f[es[1]], f[es[2]], f[es[3]]};
    const bool src = source_k22[s] != 0;
    if (src != forms_k22(h, img)) return false;
    if (!src) continue;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (shares_vertex(g, es[i], es[j]) != shares_vertex(h, img[i], img[j])) return false;
  }
  return true;
}

}  // namespace

IsoVerdict brute_force_iso(const BipartiteGraph& g, const BipartiteGraph& h, std::size_t bound) {
  if (g.edge_count() > bound || h.edge_count() > bound) {
    throw Error(ErrorCode::SizeBoundExceeded,
                "brute_force_iso: more than " + std::to_string(bound) + " edges");
  }
  if (g.edge_count() != h.edge_count()) return reject(RejectionReason::CountMismatch);
  const std::size_t n = g.edge_count();
  const auto subsets = four_subsets(n);
  std::vector<char> source_k22(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) source_k22[s] = forms_k22(g, subsets[s]) ? 1 : 0;

  std::vector<EdgeIndex> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    if (satisfies_conditions(g, h, subsets, source_k22, f)) {
      return {true, EdgeBijection::from_forward(f), std::nullopt};
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return reject(RejectionReason::ExhaustedSearch);
}

// ---------------------------------------------------------------------------

WitnessReport verify_witness(const BipartiteGraph& g, const BipartiteGraph& h, const EdgeBijection& f) {
  const std::size_t n = g.edge_count();
  if (h.edge_count() != n || f.forward.size() != n || f.backward.size() != n) {
    throw Error(ErrorCode::NotABijection, "edge map sizes do not match the edge sets");
  }
  for (EdgeIndex e = 0; e < n; ++e) {
    if (f.forward[e] >= n || f.backward[f.forward[e]] != e) {
      throw Error(ErrorCode::NotABijection, "forward and backward maps are not inverse");
    }
  }
  const auto sa = derived_structure(g);
  const auto sb = derived_structure(h);
  const auto ta = quadruple_table(sa);
  const auto tb = quadruple_table(sb);

  auto edge_name = [](const BipartiteGraph& gr, EdgeIndex e) {
    auto [a, b] = gr.edge_labels(e);
    return "{" + a + "," + b + "}";
  };
  auto set_name = [&](const BipartiteGraph& gr, const Members& m) {
    std::string s;
    for (auto e : m) s += (s.empty() ? "" : " ") + edge_name(gr, e);
    return s;
  };

  for (const auto& q : sa.quadruples) {
    Members img{f.forward[q.members[0]], f.forward[q.members[1]], f.forward[q.members[2]],
                f.forward[q.members[3]]};
    if (!tb.contains(sorted_members(img))) {
      return {false, "K22 preservation: " + set_name(g, q.members) + " maps to a non-K22 edge set"};
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        auto a = q.members[i], b = q.members[j];
        if (shares_vertex(g, a, b) != shares_vertex(h, f.forward[a], f.forward[b])) {
          return {false, "adjacency preservation: " + edge_name(g, a) + " and " + edge_name(g, b) +
                             (shares_vertex(g, a, b) ? " are adjacent" : " are not adjacent") +
                             " but their images are" +
                             (shares_vertex(g, a, b) ? " not" : "")};
        }
      }
    }
  }
  for (const auto& q : sb.quadruples) {
    Members pre{f.backward[q.members[0]], f.backward[q.members[1]], f.backward[q.members[2]],
                f.backward[q.members[3]]};
    if (!ta.contains(sorted_members(pre))) {
      return {false, "K22 preservation: " + set_name(h, q.members) + " has a non-K22 preimage"};
    }
  }
  return {true, std::nullopt};
}

WitnessReport verify_witness(const BipartiteGraph& g, const BipartiteGraph& h,
                             std::span<const EdgeIndex> forward) {
  if (forward.size() != g.edge_count() || h.edge_count() != g.edge_count()) {
    throw Error(ErrorCode::NotABijection, "edge map sizes do not match the edge sets");
  }
  return verify_witness(g, h, EdgeBijection::from_forward({forward.begin(), forward.end()}));
}

}  // namespace bga
