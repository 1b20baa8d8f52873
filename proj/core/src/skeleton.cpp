#include "bga/skeleton.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace bga {

DerivedStructure derived_structure(const BipartiteGraph& g) {
  DerivedStructure s;
  s.edge_count = g.edge_count();
  s.quadruples = enumerate_k22(g);
  s.incidence.assign(s.edge_count, {});
  for (std::size_t q = 0; q < s.quadruples.size(); ++q)
    for (auto e : s.quadruples[q].members) s.incidence[e].push_back(q);
  for (EdgeIndex e = 0; e < s.edge_count; ++e)
    if (s.incidence[e].empty()) s.loose.push_back(e);
  return s;
}

DerivedStructure disjoint_union(const DerivedStructure& a, const DerivedStructure& b) {
  DerivedStructure s;
  const std::size_t shift = a.edge_count;
  s.edge_count = a.edge_count + b.edge_count;
  s.quadruples = a.quadruples;
  for (auto q : b.quadruples) {
    for (auto& e : q.members) e += shift;
    for (auto& p : q.pairing)
      for (auto& e : p) e += shift;
    s.quadruples.push_back(q);
  }
  s.loose = a.loose;
  for (auto e : b.loose) s.loose.push_back(e + shift);
  s.incidence = a.incidence;
  for (auto inc : b.incidence) {
    for (auto& q : inc) q += a.quadruples.size();
    s.incidence.push_back(std::move(inc));
  }
  return s;
}

SpecSkeleton spec_skeleton(const DerivedStructure& s) {
  SpecSkeleton sk;
  sk.clopen_points = s.loose;
  for (const auto& q : s.quadruples) sk.components.push_back({q.members, q.pairing});
  return sk;
}

SpecSkeleton spec_skeleton(const BipartiteGraph& g) { return spec_skeleton(derived_structure(g)); }

InvariantVector invariant_vector(const DerivedStructure& s) {
  InvariantVector iv;
  iv.edge_count = s.edge_count;
  iv.loose_count = s.loose.size();
  iv.quadruple_count = s.quadruples.size();
  for (EdgeIndex e = 0; e < s.edge_count; ++e) {
    iv.quadruple_degrees.push_back(s.incidence[e].size());
    std::vector<std::size_t> profile;
    for (auto q : s.incidence[e]) profile.push_back(s.incidence[s.quadruples[q].partner(e)].size());
    std::sort(profile.begin(), profile.end());
    iv.partner_profiles.push_back(std::move(profile));
  }
  std::sort(iv.quadruple_degrees.begin(), iv.quadruple_degrees.end());
  std::sort(iv.partner_profiles.begin(), iv.partner_profiles.end());
  return iv;
}

std::vector<int> initial_edge_colors(const DerivedStructure& s) {
  std::vector<int> c(s.edge_count);
  for (EdgeIndex e = 0; e < s.edge_count; ++e) c[e] = static_cast<int>(s.incidence[e].size());
  return c;
}

std::vector<int> refine_edge_colors(const DerivedStructure& s, std::vector<int> colors) {
  using Entry = std::tuple<int, int, int>;  // partner colour, other pair (sorted)
  using Sig = std::pair<int, std::vector<Entry>>;
  std::size_t classes = 0;
  {
    auto tmp = colors;
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<std::size_t>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }
  for (;;) {
    std::vector<Sig> sigs(s.edge_count);
    for (EdgeIndex e = 0; e < s.edge_count; ++e) {
      std::vector<Entry> entries;
      for (auto qi : s.incidence[e]) {
        const auto& q = s.quadruples[qi];
        const auto& other = (q.pairing[0][0] == e || q.pairing[0][1] == e) ? q.pairing[1] : q.pairing[0];
        int a = colors[other[0]], b = colors[other[1]];
        if (a > b) std::swap(a, b);
        entries.emplace_back(colors[q.partner(e)], a, b);
      }
      std::sort(entries.begin(), entries.end());
      sigs[e] = {colors[e], std::move(entries)};
    }
    std::map<Sig, int> rank;
    for (const auto& sg : sigs) rank.emplace(sg, 0);
    int next = 0;
    for (auto& [k, v] : rank) v = next++;
    for (EdgeIndex e = 0; e < s.edge_count; ++e) colors[e] = rank[sigs[e]];
    if (rank.size() == classes) return colors;
    classes = rank.size();
  }
}

namespace {

using Code = std::vector<int>;

Code encode(const DerivedStructure& s, const std::vector<int>& colors) {
  // Colours of covered edges are distinct here; relabel covered edges by rank.
  std::vector<EdgeIndex> covered;
  for (EdgeIndex e = 0; e < s.edge_count; ++e)
    if (!s.incidence[e].empty()) covered.push_back(e);
  std::sort(covered.begin(), covered.end(), [&](EdgeIndex a, EdgeIndex b) { return colors[a] < colors[b]; });
  std::vector<int> label(s.edge_count, -1);
  for (std::size_t i = 0; i < covered.size(); ++i) label[covered[i]] = static_cast<int>(i);

  std::vector<std::array<int, 4>> quads;
  for (const auto& q : s.quadruples) {
    std::array<int, 2> p0{label[q.pairing[0][0]], label[q.pairing[0][1]]};
    std::array<int, 2> p1{label[q.pairing[1][0]], label[q.pairing[1][1]]};
    if (p0[0] > p0[1]) std::swap(p0[0], p0[1]);
    if (p1[0] > p1[1]) std::swap(p1[0], p1[1]);
    if (p1 < p0) std::swap(p0, p1);
    quads.push_back({p0[0], p0[1], p1[0], p1[1]});
  }
  std::sort(quads.begin(), quads.end());
  Code code{static_cast<int>(s.edge_count), static_cast<int>(s.loose.size()),
            static_cast<int>(s.quadruples.size())};
  for (const auto& q : quads) code.insert(code.end(), q.begin(), q.end());
  return code;
}

void search(const DerivedStructure& s, std::vector<int> colors, std::optional<Code>& best) {
  colors = refine_edge_colors(s, std::move(colors));

  // First non-singleton cell among covered edges, by colour.
  std::map<int, std::vector<EdgeIndex>> cells;
  for (EdgeIndex e = 0; e < s.edge_count; ++e)
    if (!s.incidence[e].empty()) cells[colors[e]].push_back(e);
  const std::vector<EdgeIndex>* target = nullptr;
  for (const auto& [c, members] : cells) {
    if (members.size() > 1) {
      target = &members;
      break;
    }
  }
  if (target == nullptr) {
    Code code = encode(s, colors);
    if (!best || code < *best) best = std::move(code);
    return;
  }
  for (auto e : *target) {
    std::vector<int> next(colors.size());
    for (EdgeIndex x = 0; x < colors.size(); ++x) next[x] = 2 * colors[x] + (x == e ? 0 : 1);
    search(s, std::move(next), best);
  }
}

}  // namespace

std::vector<std::uint8_t> canonical_certificate(const DerivedStructure& s) {
  std::optional<Code> best;
  search(s, initial_edge_colors(s), best);
  std::vector<std::uint8_t> bytes;
  bytes.reserve(best->size() * 4);
  for (int v : *best) {
    auto u = static_cast<std::uint32_t>(v);
    bytes.push_back(static_cast<std::uint8_t>(u >> 24));
    bytes.push_back(static_cast<std::uint8_t>(u >> 16));
    bytes.push_back(static_cast<std::uint8_t>(u >> 8));
    bytes.push_back(static_cast<std::uint8_t>(u));
  }
  return bytes;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace bga
