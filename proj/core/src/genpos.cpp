#include "bga/genpos.hpp"

#include <algorithm>
#include <random>

#include "bga/error.hpp"

namespace bga {

ComplexMatrix ContractionFamily::assembled() const {
  const auto kk = static_cast<Eigen::Index>(k);
  ComplexMatrix m(static_cast<Eigen::Index>(graph.u_count()) * kk, static_cast<Eigen::Index>(graph.v_count()) * kk);
  for (std::size_t u = 0; u < graph.u_count(); ++u)
    for (std::size_t v = 0; v < graph.v_count(); ++v)
      m.block(static_cast<Eigen::Index>(u) * kk, static_cast<Eigen::Index>(v) * kk, kk, kk) = block(u, v);
  return m;
}

namespace {

void apply_pattern(const BipartiteGraph& g, Eigen::Index k, ComplexMatrix& m) {
  for (std::size_t u = 0; u < g.u_count(); ++u)
    for (std::size_t v = 0; v < g.v_count(); ++v)
      if (!g.adjacent(u, v))
        m.block(static_cast<Eigen::Index>(u) * k, static_cast<Eigen::Index>(v) * k, k, k).setZero();
}

double unitarity_residual(const ComplexMatrix& m) {
  const ComplexMatrix id = ComplexMatrix::Identity(m.cols(), m.cols());
  return std::max(max_deviation(m.adjoint() * m, id), max_deviation(m * m.adjoint(), id));
}

ContractionFamily split(const BipartiteGraph& g, std::size_t k, const ComplexMatrix& m) {
  ContractionFamily cf{g, k, {}};
  const auto kk = static_cast<Eigen::Index>(k);
  for (std::size_t u = 0; u < g.u_count(); ++u)
    for (std::size_t v = 0; v < g.v_count(); ++v)
      cf.blocks.push_back(m.block(static_cast<Eigen::Index>(u) * kk, static_cast<Eigen::Index>(v) * kk, kk, kk));
  return cf;
}

}  // namespace

ConditionResiduals condition_residuals(const ContractionFamily& cf) {
  const auto& g = cf.graph;
  const auto kk = static_cast<Eigen::Index>(cf.k);
  const ComplexMatrix id = ComplexMatrix::Identity(kk, kk);
  ConditionResiduals r;
  for (std::size_t v1 = 0; v1 < g.v_count(); ++v1) {
    for (std::size_t v2 = 0; v2 < g.v_count(); ++v2) {
      ComplexMatrix s = ComplexMatrix::Zero(kk, kk);
      for (std::size_t u = 0; u < g.u_count(); ++u) s += cf.block(u, v1).adjoint() * cf.block(u, v2);
      r.column = std::max(r.column, v1 == v2 ? max_deviation(s, id) : max_abs(s));
    }
  }
  for (std::size_t u1 = 0; u1 < g.u_count(); ++u1) {
    for (std::size_t u2 = 0; u2 < g.u_count(); ++u2) {
      ComplexMatrix s = ComplexMatrix::Zero(kk, kk);
      for (std::size_t v = 0; v < g.v_count(); ++v) s += cf.block(u1, v) * cf.block(u2, v).adjoint();
      r.row = std::max(r.row, u1 == u2 ? max_deviation(s, id) : max_abs(s));
    }
  }
  bool first = true;
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    for (std::size_t v = 0; v < g.v_count(); ++v) {
      if (!g.adjacent(u, v)) {
        r.pattern = std::max(r.pattern, max_abs(cf.block(u, v)));
      } else {
        const double s = smallest_singular_value(cf.block(u, v));
        r.min_edge_singular_value = first ? s : std::min(r.min_edge_singular_value, s);
        first = false;
      }
    }
  }
  return r;
}

ContractionFamily synthesize(const BipartiteGraph& g, const SynthesisOptions& opt, SynthesisStats* stats) {
  if (g.u_count() != g.v_count()) {
    throw Error(ErrorCode::SideCountMismatch, "finite-dimensional families need |U| = |V|");
  }
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
  if (opt.k == 0) throw Error(ErrorCode::ParameterOutOfRange, "block size k must be positive");

  const auto k = static_cast<Eigen::Index>(opt.k);
  const Eigen::Index n = static_cast<Eigen::Index>(g.u_count()) * k;
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  apply_pattern(g, k, m);

  double residual = unitarity_residual(m);
  std::size_t it = 0;
  while (residual > opt.tol && it < opt.max_iter) {
    m = polar_unitary(m);
    apply_pattern(g, k, m);
    residual = unitarity_residual(m);
    ++it;
  }
  if (stats != nullptr) *stats = {it, residual};
  if (residual > kSynthAccept) {
    throw Error(ErrorCode::Nonconvergence,
                "residual " + std::to_string(residual) + " after " + std::to_string(it) + " iterations");
  }
  auto cf = split(g, opt.k, m);
  for (const auto& e : g.edges()) {
    if (smallest_singular_value(cf.block(e.u, e.v)) < kBlockConditioning) {
      auto [a, b] = g.edge_labels(g.edge_index(e.u, e.v).value());
      throw Error(ErrorCode::DegenerateBlock, "block " + a + "," + b + " is not invertible");
    }
  }
  return cf;
}

ProjectionFamilyGP build_projection_family(const ContractionFamily& cf) {
  const auto& g = cf.graph;
  if (cf.k == 0 || cf.blocks.size() != g.u_count() * g.v_count() || g.u_count() != g.v_count()) {
    throw Error(ErrorCode::InvariantViolation, "contraction family has the wrong shape");
  }
  const auto res = condition_residuals(cf);
  if (res.pattern > kTau) throw Error(ErrorCode::InvariantViolation, "non-edge block is not zero");
  if (res.column > kSynthAccept || res.row > kSynthAccept) {
    throw Error(ErrorCode::InvariantViolation, "column or row condition fails");
  }
  if (g.edge_count() > 0 && res.min_edge_singular_value < kBlockConditioning) {
    throw Error(ErrorCode::InvariantViolation, "an edge block is not invertible");
  }

  const auto k = static_cast<Eigen::Index>(cf.k);
  const ComplexMatrix m = cf.assembled();
  const Eigen::Index d = m.cols();
  Representation rep{g, static_cast<std::size_t>(d), std::vector<ComplexMatrix>(g.vertex_count()), {}};
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    const ComplexMatrix r = m.middleRows(static_cast<Eigen::Index>(u) * k, k);
    rep.images[g.global_id({Side::U, u})] = r.adjoint() * r;
  }
  for (std::size_t v = 0; v < g.v_count(); ++v) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p.block(static_cast<Eigen::Index>(v) * k, static_cast<Eigen::Index>(v) * k, k, k).setIdentity();
    rep.images[g.global_id({Side::V, v})] = std::move(p);
  }
  return {std::move(rep), cf.k};
}

GenericPositionReport check_generic_position(const Representation& rep) {
  const auto& g = rep.graph;
  const auto d = static_cast<Eigen::Index>(rep.dim);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  GenericPositionReport r;
  r.pass = true;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const ComplexMatrix& pu = rep.image(Vertex{Side::U, ed.u});
    const ComplexMatrix& pv = rep.image(Vertex{Side::V, ed.v});
    EdgeGenericPosition x{e, intersection_dim(pu, id - pv), intersection_dim(id - pu, pv)};
    r.pass = r.pass && x.im_u_ker_v == 0 && x.ker_u_im_v == 0;
    r.edges.push_back(x);
  }
  return r;
}

ContractionFamily extract_contractions(const Representation& rep) {
  const auto& g = rep.graph;
  std::vector<ComplexMatrix> basis(g.vertex_count());
  std::optional<Eigen::Index> rank;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    basis[x] = range_basis(rep.images[x]);
    if (rank && basis[x].cols() != *rank) throw Error(ErrorCode::RankMismatch, "projection ranks differ");
    rank = basis[x].cols();
  }
  if (!check_generic_position(rep).pass) {
    throw Error(ErrorCode::NotGenericPosition, "projections are not in generic position");
  }
  const std::size_t k = rank ? static_cast<std::size_t>(*rank) : 0;
  ContractionFamily cf{g, k, {}};
  const auto kk = static_cast<Eigen::Index>(k);
  for (std::size_t u = 0; u < g.u_count(); ++u) {
    for (std::size_t v = 0; v < g.v_count(); ++v) {
      if (!g.adjacent(u, v)) {
        cf.blocks.push_back(ComplexMatrix::Zero(kk, kk));
        continue;
      }
      const auto& bu = basis[g.global_id({Side::U, u})];
      const auto& bv = basis[g.global_id({Side::V, v})];
      cf.blocks.push_back(bu.adjoint() * bv);
    }
  }
  return cf;
}

HalmosForm halmos_decompose(const Representation& rep) {
  const auto& g = rep.graph;
  if (g.u_count() != 2 || g.v_count() != 2 || g.edge_count() != 4) {
    throw Error(ErrorCode::NotK22, "graph is not K_{2,2}");
  }
  if (!check_generic_position(rep).pass) {
    throw Error(ErrorCode::NotGenericPosition, "projections are not in generic position");
  }
  const ComplexMatrix b1 = range_basis(rep.image(Vertex{Side::U, 0}));
  ComplexMatrix b2 = range_basis(rep.image(Vertex{Side::U, 1}));
  if (b1.cols() != b2.cols()) throw Error(ErrorCode::NotGenericPosition, "projection ranks differ");
  const ComplexMatrix& q = rep.image(Vertex{Side::V, 0});

  // Rotate the second basis so the off-diagonal block X = H * Omega becomes H >= 0.
  const ComplexMatrix x = b1.adjoint() * q * b2;
  b2 = b2 * polar_unitary(x).adjoint();

  HalmosForm h;
  h.C = psd_sqrt(b1.adjoint() * q * b1);
  h.S = psd_sqrt(b2.adjoint() * q * b2);
  const auto k = h.C.rows();
  h.residual = max_deviation(h.C * h.C + h.S * h.S, ComplexMatrix::Identity(k, k));
  if (h.residual > kSynthAccept) {
    throw Error(ErrorCode::InvariantViolation, "C^2 + S^2 deviates from I by " + std::to_string(h.residual));
  }
  return h;
}

}  // namespace bga
