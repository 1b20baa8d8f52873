#include "bga/repr.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bga/error.hpp"

namespace bga {

namespace {

struct Block {
  Eigen::Index offset;
  Eigen::Index dim;
};

/// Recorded blocks when they tile the space and every image vanishes off
/// them; otherwise the whole space as one block.
std::vector<Block> block_layout(std::size_t dim, const std::vector<Summand>& summands,
                                const std::vector<ComplexMatrix>& images) {
  const auto whole = std::vector<Block>{{0, static_cast<Eigen::Index>(dim)}};
  if (summands.empty()) return whole;
  std::vector<Block> blocks;
  std::size_t next = 0;
  for (const auto& s : summands) {
    if (s.offset != next || s.dim == 0) return whole;
    blocks.push_back({static_cast<Eigen::Index>(s.offset), static_cast<Eigen::Index>(s.dim)});
    next += s.dim;
  }
  if (next != dim) return whole;
  for (const auto& m : images) {
    ComplexMatrix off = m;
    for (const auto& b : blocks) off.block(b.offset, b.offset, b.dim, b.dim).setZero();
    if (max_abs(off) != 0.0) return whole;
  }
  return blocks;
}

std::vector<Block> block_layout(const Representation& rep) {
  return block_layout(rep.dim, rep.summands, rep.images);
}

std::vector<ComplexMatrix> restrict_to(const std::vector<ComplexMatrix>& ms, const Block& b) {
  std::vector<ComplexMatrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.block(b.offset, b.offset, b.dim, b.dim));
  return out;
}

void check_t(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "t must lie strictly between 0 and 1");
  }
}

struct Accumulator {
  std::vector<CheckResult> results;

  void note(std::size_t i, double dev) { results[i].max_deviation = std::max(results[i].max_deviation, dev); }

  CheckReport finish(double tol) {
    for (auto& r : results) r.pass = r.max_deviation <= tol;
    return std::move(results);
  }
};

Accumulator make_acc(std::initializer_list<const char*> names) {
  Accumulator a;
  for (auto n : names) a.results.push_back({n, 0.0, false});
  return a;
}

}  // namespace

Representation rep_pi(const BipartiteGraph& g, EdgeIndex e) {
  if (e >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  Representation r{g, 1, std::vector<ComplexMatrix>(g.vertex_count(), ComplexMatrix::Zero(1, 1)), {}};
  const auto& ed = g.edge(e);
  r.images[g.global_id({Side::U, ed.u})](0, 0) = 1.0;
  r.images[g.global_id({Side::V, ed.v})](0, 0) = 1.0;
  r.summands.push_back({SummandKind::Pi, e, 0, 0.0, 0, 1});
  return r;
}

Representation rep_sigma(const BipartiteGraph& g, const Quadruple& h, double t) {
  check_t(t);
  const auto quads = enumerate_k22(g);
  auto it = std::find_if(quads.begin(), quads.end(), [&](const Quadruple& q) { return q.members == h.members; });
  if (it == quads.end()) throw Error(ErrorCode::NotAQuadruple, "edge set is not a K_{2,2} of the graph");
  const Quadruple& q = *it;

  const double c = std::sqrt(t * (1.0 - t));
  Representation r{g, 2, std::vector<ComplexMatrix>(g.vertex_count(), ComplexMatrix::Zero(2, 2)), {}};
  auto& u1 = r.images[g.global_id({Side::U, q.u[0]})];
  auto& u2 = r.images[g.global_id({Side::U, q.u[1]})];
  auto& v1 = r.images[g.global_id({Side::V, q.v[0]})];
  auto& v2 = r.images[g.global_id({Side::V, q.v[1]})];
  u1(0, 0) = 1.0;
  u2(1, 1) = 1.0;
  v1 << 1.0 - t, c, c, t;
  v2 << t, -c, -c, 1.0 - t;
  r.summands.push_back({SummandKind::Sigma, 0, static_cast<std::size_t>(it - quads.begin()), t, 0, 2});
  return r;
}

Representation direct_sum(std::span<const Representation> reps) {
  if (reps.empty()) throw Error(ErrorCode::EmptySum, "direct sum of no representations");
  const auto& g = reps.front().graph;
  std::size_t dim = 0;
  for (const auto& r : reps) {
    if (!(r.graph == g)) throw Error(ErrorCode::GraphMismatch, "summands are over different graphs");
    dim += r.dim;
  }
  const auto d = static_cast<Eigen::Index>(dim);
  Representation out{g, dim, std::vector<ComplexMatrix>(g.vertex_count(), ComplexMatrix::Zero(d, d)), {}};
  std::size_t offset = 0;
  for (const auto& r : reps) {
    const auto o = static_cast<Eigen::Index>(offset);
    const auto rd = static_cast<Eigen::Index>(r.dim);
    for (std::size_t x = 0; x < out.images.size(); ++x) out.images[x].block(o, o, rd, rd) = r.images[x];
    if (r.summands.empty()) {
      out.summands.push_back({SummandKind::Other, 0, 0, 0.0, offset, r.dim});
    } else {
      for (auto s : r.summands) {
        s.offset += offset;
        out.summands.push_back(s);
      }
    }
    offset += r.dim;
  }
  return out;
}

Representation summand_rep(const Representation& rep, std::size_t i) {
  const auto& s = rep.summands.at(i);
  const Block b{static_cast<Eigen::Index>(s.offset), static_cast<Eigen::Index>(s.dim)};
  Summand local = s;
  local.offset = 0;
  return {rep.graph, s.dim, restrict_to(rep.images, b), {local}};
}

std::vector<double> default_t_samples(std::uint64_t seed) {
  std::vector<double> ts{0.25, 0.5, 0.75};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  while (ts.size() < 5) {
    const double t = unif(rng);
    if (t > 0.0) ts.push_back(t);
  }
  return ts;
}

Representation standard_rep(const BipartiteGraph& g, std::span<const double> t_samples) {
  if (t_samples.empty()) throw Error(ErrorCode::ParameterOutOfRange, "no t samples given");
  for (double t : t_samples) check_t(t);
  std::vector<Representation> parts;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) parts.push_back(rep_pi(g, e));
  for (const auto& q : enumerate_k22(g))
    for (double t : t_samples) parts.push_back(rep_sigma(g, q, t));
  if (parts.empty()) {
    // Edgeless graph: C*(G) = 0 unless both sides are empty; no summands.
    return {g, 0, std::vector<ComplexMatrix>(g.vertex_count(), ComplexMatrix(0, 0)), {}};
  }
  return direct_sum(parts);
}

bool all_pass(const CheckReport& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

CheckReport check_gp(const Representation& rep, double tol) {
  const auto& g = rep.graph;
  auto acc = make_acc({"projection", "GP1_U", "GP1_V", "GP2"});
  for (const auto& b : block_layout(rep)) {
    const auto im = restrict_to(rep.images, b);
    const ComplexMatrix id = ComplexMatrix::Identity(b.dim, b.dim);
    for (const auto& p : im) {
      acc.note(0, std::max(max_deviation(p * p, p), max_deviation(p.adjoint(), p)));
    }
    ComplexMatrix su = ComplexMatrix::Zero(b.dim, b.dim), sv = su;
    for (std::size_t u = 0; u < g.u_count(); ++u) su += im[g.global_id({Side::U, u})];
    for (std::size_t v = 0; v < g.v_count(); ++v) sv += im[g.global_id({Side::V, v})];
    acc.note(1, max_deviation(su, id));
    acc.note(2, max_deviation(sv, id));
    for (std::size_t u = 0; u < g.u_count(); ++u) {
      for (std::size_t v = 0; v < g.v_count(); ++v) {
        if (g.adjacent(u, v)) continue;
        acc.note(3, max_abs(im[g.global_id({Side::U, u})] * im[g.global_id({Side::V, v})]));
      }
    }
  }
  return acc.finish(tol);
}

EdgeGeneratorFamily edge_generators(const Representation& rep) {
  EdgeGeneratorFamily fam{rep.graph, {}, rep.summands};
  for (const auto& e : rep.graph.edges()) {
    fam.x.push_back(rep.image(Vertex{Side::U, e.u}) * rep.image(Vertex{Side::V, e.v}));
  }
  return fam;
}

CheckReport check_gc(const EdgeGeneratorFamily& fam, double tol) {
  const auto& g = fam.graph;
  auto acc = make_acc({"GC1", "GC2", "GC3", "GC4", "xxx=xx"});
  if (fam.x.empty()) return acc.finish(tol);
  const std::size_t dim = static_cast<std::size_t>(fam.x.front().rows());
  for (const auto& b : block_layout(dim, fam.summands, fam.x)) {
    const auto x = restrict_to(fam.x, b);
    ComplexMatrix sum_adj = ComplexMatrix::Zero(b.dim, b.dim);
    for (const auto& m : x) sum_adj += m.adjoint();
    for (EdgeIndex e = 0; e < x.size(); ++e) {
      const auto& ee = g.edge(e);
      for (EdgeIndex f = 0; f < x.size(); ++f) {
        const auto& ff = g.edge(f);
        if (ee.u != ff.u) acc.note(0, max_abs(x[e].adjoint() * x[f]));
        if (ee.v != ff.v) acc.note(1, max_abs(x[e] * x[f].adjoint()));
      }
      acc.note(2, max_deviation(sum_adj * x[e], x[e]));
      acc.note(3, max_deviation(x[e] * sum_adj, x[e]));
      acc.note(4, max_deviation(x[e] * x[e].adjoint() * x[e], x[e] * x[e]));
    }
  }
  return acc.finish(tol);
}

ComplexMatrix evaluate_word(const Representation& rep, std::span<const std::string> word) {
  const auto d = static_cast<Eigen::Index>(rep.dim);
  ComplexMatrix out = ComplexMatrix::Identity(d, d);
  for (const auto& x : word) out = out * rep.image(x);
  return out;
}

bool is_path_word(const BipartiteGraph& g, std::span<const std::string> word) {
  std::vector<std::string> collapsed;
  for (const auto& x : word) {
    g.vertex(x);
    if (collapsed.empty() || collapsed.back() != x) collapsed.push_back(x);
  }
  return is_path(g, collapsed);
}

SandwichReport sandwich_check(const Representation& rep, std::string_view x1, std::string_view y,
                              std::string_view x2, double tol) {
  const auto& g = rep.graph;
  const Vertex a = g.vertex(x1), m = g.vertex(y), b = g.vertex(x2);
  if (a.side != b.side || m.side == a.side || a.index == b.index) {
    throw Error(ErrorCode::SideMismatch, "sandwich needs x1 != x2 on one side and y on the other");
  }
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::vector<std::size_t> common;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
  const bool y_common = std::find(common.begin(), common.end(), m.index) != common.end();
  SandwichReport r;
  r.applicable = !(y_common && common.size() >= 2);
  r.norm = max_abs(rep.image(a) * rep.image(m) * rep.image(b));
  r.pass = !r.applicable || r.norm <= tol;
  return r;
}

std::size_t commutant_dim(const Representation& rep) {
  const auto d = static_cast<Eigen::Index>(rep.dim);
  if (d == 0) return 0;
  const Eigen::Index n2 = d * d;
  ComplexMatrix k(static_cast<Eigen::Index>(rep.images.size()) * n2, n2);
  k.setZero();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  // vec(XA - AX) = (A^T (x) I - I (x) A) vec(X), column-major vec.
  Eigen::Index row = 0;
  for (const auto& a : rep.images) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        k.block(row + i * d, j * d, d, d) += a(j, i) * id;
        if (i == j) k.block(row + i * d, j * d, d, d) -= a;
      }
    }
    row += n2;
  }
  Eigen::BDCSVD<ComplexMatrix> svd(k);
  const auto rank = (svd.singularValues().array() > kRankThreshold).count();
  return static_cast<std::size_t>(n2 - rank);
}

Representation subgraph_quotient_rep(const BipartiteGraph& g, const BipartiteGraph& h,
                                     const Representation& rep_h) {
  if (!(rep_h.graph == h)) throw Error(ErrorCode::GraphMismatch, "representation is not over the subgraph");
  auto embed = [&](bool swap) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> to_g(h.vertex_count());
    for (std::size_t x = 0; x < h.vertex_count(); ++x) {
      const Vertex hv = h.vertex_at(x);
      auto gv = g.find_vertex(h.label(hv));
      const Side want = swap ? opposite(hv.side) : hv.side;
      if (!gv || gv->side != want) return std::nullopt;
      to_g[x] = g.global_id(*gv);
    }
    for (const auto& e : h.edges()) {
      const Vertex a = g.vertex_at(to_g[h.global_id({Side::U, e.u})]);
      const Vertex b = g.vertex_at(to_g[h.global_id({Side::V, e.v})]);
      const auto& uu = a.side == Side::U ? a : b;
      const auto& vv = a.side == Side::U ? b : a;
      if (!g.adjacent(uu.index, vv.index)) return std::nullopt;
    }
    return to_g;
  };
  auto to_g = embed(false);
  if (!to_g) to_g = embed(true);
  if (!to_g) throw Error(ErrorCode::NotASubgraph, "graph is not a subgraph");

  const auto d = static_cast<Eigen::Index>(rep_h.dim);
  Representation out{g, rep_h.dim, std::vector<ComplexMatrix>(g.vertex_count(), ComplexMatrix::Zero(d, d)), {}};
  for (std::size_t x = 0; x < h.vertex_count(); ++x) out.images[(*to_g)[x]] = rep_h.images[x];
  out.summands.push_back({SummandKind::Other, 0, 0, 0.0, 0, rep_h.dim});
  return out;
}

PhiContext make_phi_context(const BipartiteGraph& g, const BipartiteGraph& h, const EdgeBijection& f) {
  PhiContext ctx{g, h, f, std::vector<std::vector<EdgeIndex>>(g.vertex_count()),
                 std::vector<std::vector<EdgeIndex>>(h.vertex_count())};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    ctx.I[g.global_id({Side::U, ed.u})].push_back(f.forward.at(e));
    ctx.I[g.global_id({Side::V, ed.v})].push_back(f.forward.at(e));
  }
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edge(e);
    ctx.J[h.global_id({Side::U, ed.u})].push_back(f.backward.at(e));
    ctx.J[h.global_id({Side::V, ed.v})].push_back(f.backward.at(e));
  }
  return ctx;
}

namespace {

/// Sum over `edges` (of graph `gr`) of P_u P_v, with P taken from `im`.
ComplexMatrix edge_sum(const BipartiteGraph& gr, const std::vector<EdgeIndex>& edges,
                       const std::vector<ComplexMatrix>& im, Eigen::Index dim) {
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (auto e : edges) {
    const auto& ed = gr.edge(e);
    s += im[gr.global_id({Side::U, ed.u})] * im[gr.global_id({Side::V, ed.v})];
  }
  return s;
}

/// The four phi checks for src -> tgt evaluated in `rep` over tgt.
void phi_checks(const BipartiteGraph& src, const BipartiteGraph& tgt,
                const std::vector<std::vector<EdgeIndex>>& I, const std::vector<std::vector<EdgeIndex>>& J,
                const Representation& rep, const std::string& prefix, double tol, CheckReport& out) {
  auto acc = make_acc({"projection", "partition_U", "partition_V", "orthogonality", "round_trip"});
  for (const auto& b : block_layout(rep)) {
    const auto im = restrict_to(rep.images, b);
    const ComplexMatrix id = ComplexMatrix::Identity(b.dim, b.dim);
    std::vector<ComplexMatrix> phi;
    phi.reserve(src.vertex_count());
    for (std::size_t x = 0; x < src.vertex_count(); ++x) phi.push_back(edge_sum(tgt, I[x], im, b.dim));
    for (const auto& p : phi) acc.note(0, std::max(max_deviation(p * p, p), max_deviation(p.adjoint(), p)));
    ComplexMatrix su = ComplexMatrix::Zero(b.dim, b.dim), sv = su;
    for (std::size_t u = 0; u < src.u_count(); ++u) su += phi[src.global_id({Side::U, u})];
    for (std::size_t v = 0; v < src.v_count(); ++v) sv += phi[src.global_id({Side::V, v})];
    acc.note(1, max_deviation(su, id));
    acc.note(2, max_deviation(sv, id));
    for (std::size_t u = 0; u < src.u_count(); ++u)
      for (std::size_t v = 0; v < src.v_count(); ++v)
        if (!src.adjacent(u, v))
          acc.note(3, max_abs(phi[src.global_id({Side::U, u})] * phi[src.global_id({Side::V, v})]));
    for (std::size_t y = 0; y < tgt.vertex_count(); ++y) {
      acc.note(4, max_deviation(edge_sum(src, J[y], phi, b.dim), im[y]));
    }
  }
  for (auto& r : acc.finish(tol)) {
    r.relation = prefix + r.relation;
    out.push_back(std::move(r));
  }
}

}  // namespace

ComplexMatrix phi_image(const PhiContext& ctx, std::string_view x, const Representation& target_rep) {
  const auto gid = ctx.source.global_id(ctx.source.vertex(x));
  return edge_sum(ctx.target, ctx.I[gid], target_rep.images, static_cast<Eigen::Index>(target_rep.dim));
}

PhiReport verify_phi(const BipartiteGraph& g, const BipartiteGraph& h, const EdgeBijection& f,
                     std::span<const double> t_samples, double tol) {
  WitnessReport w;
  try {
    w = verify_witness(g, h, f);
  } catch (const Error& e) {
    throw Error(ErrorCode::WitnessInvalid, e.what());
  }
  if (!w.valid) throw Error(ErrorCode::WitnessInvalid, *w.violation);

  const auto ctx = make_phi_context(g, h, f);
  PhiReport report;
  phi_checks(g, h, ctx.I, ctx.J, standard_rep(h, t_samples), "phi.", tol, report.checks);
  phi_checks(h, g, ctx.J, ctx.I, standard_rep(g, t_samples), "phi_inv.", tol, report.checks);
  report.pass = all_pass(report.checks);
  if (contains_k23(g) || contains_k23(h)) {
    report.caveat =
        "graph contains K_{2,3}: representations of dimension <= 2 do not separate the algebra, "
        "so these checks are necessary conditions only";
  }
  return report;
}

}  // namespace bga
