#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bga/error.hpp"
#include "bga/repr.hpp"
#include "corpus.hpp"

namespace bga {
namespace {

using testing::make_graph;

const std::vector<double> kThree{0.25, 0.5, 0.75};

BipartiteGraph k22_pendant() { return make_graph(2, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}}); }
BipartiteGraph k22_plus_edge() { return make_graph(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}); }
BipartiteGraph path3() { return make_graph(2, 2, {{0, 0}, {1, 0}, {1, 1}}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

double deviation(const CheckReport& r, const std::string& name) {
  for (const auto& c : r)
    if (c.relation == name) return c.max_deviation;
  ADD_FAILURE() << "no relation " << name;
  return 1.0;
}

std::vector<std::string> word(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

TEST(Repr, PiExamples) {
  const auto k22 = complete_bipartite(2, 2);
  const auto p = rep_pi(k22, 0);
  EXPECT_EQ(p.dim, 1u);
  EXPECT_EQ(p.image("u1")(0, 0), Complex(1.0));
  EXPECT_EQ(p.image("v1")(0, 0), Complex(1.0));
  EXPECT_EQ(p.image("u2")(0, 0), Complex(0.0));
  EXPECT_EQ(p.image("v2")(0, 0), Complex(0.0));

  const auto e = rep_pi(BipartiteGraph({"u"}, {"v"}, {{"u", "v"}}), 0);
  EXPECT_EQ(e.image("u")(0, 0), Complex(1.0));
  EXPECT_EQ(e.image("v")(0, 0), Complex(1.0));

  const auto k23 = complete_bipartite(2, 3);
  const auto q = rep_pi(k23, k23.edge_index("u1", "v2"));
  for (const auto* x : {"u2", "v1", "v3"}) EXPECT_EQ(q.image(x)(0, 0), Complex(0.0));
  EXPECT_EQ(q.image("u1")(0, 0), Complex(1.0));
  EXPECT_EQ(q.image("v2")(0, 0), Complex(1.0));

  EXPECT_EQ(code_of([&] { rep_pi(k22, 4); }), ErrorCode::UnknownEdge);
}

TEST(Repr, SigmaExamples) {
  const auto k22 = complete_bipartite(2, 2);
  const auto q = enumerate_k22(k22).front();
  const auto s = rep_sigma(k22, q, 0.5);
  ComplexMatrix half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LE(max_deviation(s.image("v1"), half), 1e-15);
  ComplexMatrix d1(2, 2), d2(2, 2);
  d1 << 1, 0, 0, 0;
  d2 << 0, 0, 0, 1;
  EXPECT_EQ(max_deviation(s.image("u1"), d1), 0.0);
  EXPECT_EQ(max_deviation(s.image("u2"), d2), 0.0);

  EXPECT_EQ(code_of([&] { rep_sigma(k22, q, 0.0); }), ErrorCode::ParameterOutOfRange);
  EXPECT_EQ(code_of([&] { rep_sigma(k22, q, 1.0); }), ErrorCode::ParameterOutOfRange);
  EXPECT_EQ(code_of([&] { rep_sigma(k22, q, std::nan("")); }), ErrorCode::ParameterOutOfRange);

  const auto k23 = complete_bipartite(2, 3);
  const auto q23 = enumerate_k22(k23).front();  // on u1, u2, v1, v2
  const auto s23 = rep_sigma(k23, q23, 0.25);
  EXPECT_EQ(max_abs(s23.image("v3")), 0.0);
  EXPECT_TRUE(all_pass(check_gp(s23)));

  Quadruple bogus = q;
  bogus.members = {0, 1, 2, 5};
  EXPECT_EQ(code_of([&] { rep_sigma(k23, bogus, 0.5); }), ErrorCode::NotAQuadruple);
}

TEST(Repr, SigmaMatchesClosedForm) {
  // Independent evaluation of the 2x2 display for several t.
  const auto k22 = complete_bipartite(2, 2);
  const auto q = enumerate_k22(k22).front();
  for (double t : {0.1, 0.3, 0.5, 0.9}) {
    const auto s = rep_sigma(k22, q, t);
    const double c = std::sqrt(t - t * t);
    ComplexMatrix v1(2, 2), v2(2, 2);
    v1 << 1 - t, c, c, t;
    v2 << t, -c, -c, 1 - t;
    EXPECT_LE(max_deviation(s.image("v1"), v1), 1e-15);
    EXPECT_LE(max_deviation(s.image("v2"), v2), 1e-15);
  }
}

TEST(Repr, DirectSumExamples) {
  const auto k22 = complete_bipartite(2, 2);
  std::vector<Representation> two{rep_pi(k22, 0), rep_pi(k22, 3)};
  const auto d = direct_sum(two);
  EXPECT_EQ(d.dim, 2u);
  EXPECT_EQ(d.image("u1")(0, 0), Complex(1.0));
  EXPECT_EQ(d.image("u1")(1, 1), Complex(0.0));
  EXPECT_EQ(d.image("u2")(1, 1), Complex(1.0));
  EXPECT_EQ(d.image("u1")(0, 1), Complex(0.0));

  std::vector<Representation> six;
  for (EdgeIndex e = 0; e < 4; ++e) six.push_back(rep_pi(k22, e));
  six.push_back(rep_sigma(k22, enumerate_k22(k22).front(), 0.5));
  EXPECT_EQ(direct_sum(six).dim, 6u);

  EXPECT_EQ(code_of([] { direct_sum(std::span<const Representation>{}); }), ErrorCode::EmptySum);
  std::vector<Representation> mixed{rep_pi(k22, 0), rep_pi(complete_bipartite(1, 1), 0)};
  EXPECT_EQ(code_of([&] { direct_sum(mixed); }), ErrorCode::GraphMismatch);
}

TEST(Repr, StandardRepDimensions) {
  const std::vector<double> half{0.5};
  EXPECT_EQ(standard_rep(complete_bipartite(2, 2), half).dim, 6u);
  EXPECT_EQ(standard_rep(complete_bipartite(1, 1), kThree).dim, 1u);
  EXPECT_EQ(standard_rep(complete_bipartite(2, 3), kThree).dim, 24u);
  const std::vector<double> bad{0.5, 1.0};
  EXPECT_EQ(code_of([&] { standard_rep(complete_bipartite(2, 2), bad); }), ErrorCode::ParameterOutOfRange);
  EXPECT_EQ(code_of([&] { standard_rep(complete_bipartite(2, 2), std::span<const double>{}); }),
            ErrorCode::ParameterOutOfRange);
}

TEST(Repr, DefaultSamples) {
  const auto a = default_t_samples(7);
  const auto b = default_t_samples(7);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[0], 0.25);
  EXPECT_EQ(a[1], 0.5);
  EXPECT_EQ(a[2], 0.75);
  for (double t : a) EXPECT_TRUE(t > 0 && t < 1);
  EXPECT_NE(default_t_samples(8)[3], a[3]);
}

TEST(Repr, CheckGpExamples) {
  const std::vector<double> half{0.5};
  const auto s = standard_rep(complete_bipartite(2, 2), half);
  const auto r = check_gp(s);
  EXPECT_TRUE(all_pass(r));
  EXPECT_LE(deviation(r, "GP1_U"), 1e-12);

  auto broken = s;
  broken.images[0].setZero();  // u1
  const auto b = check_gp(broken);
  EXPECT_FALSE(all_pass(b));
  EXPECT_NEAR(deviation(b, "GP1_U"), 1.0, 1e-12);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(rng, 5, 1, 10);
    const auto p = rep_pi(g, rng() % g.edge_count());
    for (const auto& c : check_gp(p)) EXPECT_EQ(c.max_deviation, 0.0) << c.relation;
  }
}

TEST(Repr, CheckGcExamples) {
  const std::vector<double> half{0.5}, third{1.0 / 3.0};
  EXPECT_TRUE(all_pass(check_gc(edge_generators(standard_rep(complete_bipartite(2, 2), half)))));
  const auto single = edge_generators(standard_rep(complete_bipartite(1, 1), half));
  EXPECT_EQ(single.x[0](0, 0), Complex(1.0));
  for (const auto& c : check_gc(single)) EXPECT_EQ(c.max_deviation, 0.0);
  EXPECT_TRUE(all_pass(check_gc(edge_generators(standard_rep(complete_bipartite(2, 3), third)))));
}

TEST(Repr, CheckGcDetectsBrokenGenerators) {
  const std::vector<double> half{0.5};
  auto fam = edge_generators(standard_rep(complete_bipartite(2, 2), half));
  fam.x[0] *= 2.0;
  EXPECT_FALSE(all_pass(check_gc(fam)));
}

TEST(Repr, EvaluateWordExamples) {
  const auto k22 = complete_bipartite(2, 2);
  const auto rep = standard_rep(k22, kThree);
  auto w1 = word({"u1", "v1", "u2"});
  EXPECT_GT(max_abs(evaluate_word(rep, w1)), 0.1);
  auto w2 = word({"u1", "u2"});
  EXPECT_LE(max_abs(evaluate_word(rep, w2)), kTau);
  const auto p = path3();  // u1-v1-u2-v2
  auto w3 = word({"v1", "u1", "v2"});
  EXPECT_LE(max_abs(evaluate_word(standard_rep(p, kThree), w3)), kTau);
  auto bad = word({"u1", "zz"});
  EXPECT_EQ(code_of([&] { evaluate_word(rep, bad); }), ErrorCode::UnknownVertex);
}

TEST(Repr, SandwichExamples) {
  const auto p = standard_rep(path3(), kThree);
  const auto s = sandwich_check(p, "v1", "u2", "v2");
  EXPECT_TRUE(s.applicable);
  EXPECT_TRUE(s.pass);
  EXPECT_LE(s.norm, kTau);

  const auto k = sandwich_check(standard_rep(complete_bipartite(2, 2), kThree), "v1", "u1", "v2");
  EXPECT_FALSE(k.applicable);
  EXPECT_TRUE(k.pass);

  const auto k23 = sandwich_check(standard_rep(complete_bipartite(2, 3), kThree), "u1", "v1", "u2");
  EXPECT_FALSE(k23.applicable);
  EXPECT_GT(k23.norm, 0.0);

  EXPECT_EQ(code_of([&] { sandwich_check(p, "u1", "v1", "v2"); }), ErrorCode::SideMismatch);
  EXPECT_EQ(code_of([&] { sandwich_check(p, "v1", "v2", "v1"); }), ErrorCode::SideMismatch);
}

TEST(Repr, CommutantExamples) {
  const auto k22 = complete_bipartite(2, 2);
  const auto q = enumerate_k22(k22).front();
  EXPECT_EQ(commutant_dim(rep_sigma(k22, q, 0.5)), 1u);
  EXPECT_EQ(commutant_dim(rep_pi(k22, 0)), 1u);
  std::vector<Representation> twice{rep_pi(k22, 0), rep_pi(k22, 0)};
  EXPECT_EQ(commutant_dim(direct_sum(twice)), 4u);
  for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) EXPECT_EQ(commutant_dim(rep_sigma(k22, q, t)), 1u);
  // Inequivalent summands: one scalar each.
  const std::vector<double> half{0.5};
  EXPECT_EQ(commutant_dim(standard_rep(k22, half)), 5u);
}

TEST(Repr, PiRepresentationsAreInequivalent) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(rng, 4, 2, 10);
    for (EdgeIndex a = 0; a < g.edge_count(); ++a) {
      for (EdgeIndex b = a + 1; b < g.edge_count(); ++b) {
        const auto pa = rep_pi(g, a), pb = rep_pi(g, b);
        bool differ = false;
        for (std::size_t x = 0; x < g.vertex_count(); ++x) differ = differ || pa.images[x](0, 0) != pb.images[x](0, 0);
        EXPECT_TRUE(differ);
      }
    }
  }
}

TEST(Repr, SubgraphQuotientExamples) {
  const auto k23 = complete_bipartite(2, 3);
  const auto k22 = complete_bipartite(2, 2);
  const auto s = rep_sigma(k22, enumerate_k22(k22).front(), 0.3);
  const auto ext = subgraph_quotient_rep(k23, k22, s);
  EXPECT_EQ(ext.dim, 2u);
  EXPECT_EQ(max_abs(ext.image("v3")), 0.0);
  EXPECT_TRUE(all_pass(check_gp(ext)));
  // Same images as the sigma representation built directly on the big graph.
  const auto direct = rep_sigma(k23, enumerate_k22(k23).front(), 0.3);
  for (std::size_t x = 0; x < k23.vertex_count(); ++x) EXPECT_LE(max_deviation(ext.images[x], direct.images[x]), 1e-15);

  const auto e = BipartiteGraph({"u1"}, {"v2"}, {{"u1", "v2"}});
  const auto one = subgraph_quotient_rep(k23, e, rep_pi(e, 0));
  const auto pi = rep_pi(k23, k23.edge_index("u1", "v2"));
  for (std::size_t x = 0; x < k23.vertex_count(); ++x) EXPECT_EQ(one.images[x], pi.images[x]);

  const auto stranger = BipartiteGraph({"u1"}, {"w"}, {{"u1", "w"}});
  EXPECT_EQ(code_of([&] { subgraph_quotient_rep(k23, stranger, rep_pi(stranger, 0)); }), ErrorCode::NotASubgraph);
  const auto nonedge = make_graph(3, 3, {{2, 2}});
  EXPECT_EQ(code_of([&] { subgraph_quotient_rep(k22, nonedge, rep_pi(nonedge, 0)); }), ErrorCode::NotASubgraph);
}

TEST(Repr, PhiImageExamples) {
  const auto k22 = complete_bipartite(2, 2);
  const auto id = EdgeBijection::from_forward({0, 1, 2, 3});
  const auto ctx = make_phi_context(k22, k22, id);
  const auto rep = standard_rep(k22, kThree);
  EXPECT_LE(max_deviation(phi_image(ctx, "u1", rep), rep.image("u1")), kTau);

  const auto iso = make_graph(2, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});  // v3 isolated
  const auto ctx2 = make_phi_context(iso, iso, id);
  EXPECT_EQ(max_abs(phi_image(ctx2, "v3", standard_rep(iso, kThree))), 0.0);

  const auto g = k22_pendant(), h = k22_plus_edge();
  const auto w = decide_iso(g, h);
  ASSERT_TRUE(w.witness);
  const auto c3 = make_phi_context(g, h, *w.witness);
  EXPECT_EQ(c3.I[g.global_id(g.vertex("u1"))].size(), 3u);
  const auto rh = standard_rep(h, kThree);
  const auto m = phi_image(c3, "u1", rh);
  EXPECT_LE(max_deviation(m * m, m), kTau);
}

TEST(Repr, VerifyPhiExamples) {
  const auto k22 = complete_bipartite(2, 2);
  const auto id = EdgeBijection::from_forward({0, 1, 2, 3});
  const auto r = verify_phi(k22, k22, id, kThree);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.caveat);
  EXPECT_EQ(r.checks.size(), 10u);

  const auto g = k22_pendant(), h = k22_plus_edge();
  const auto w = decide_iso(g, h);
  const auto p = verify_phi(g, h, *w.witness, default_t_samples(1));
  EXPECT_TRUE(p.pass);
  for (const auto& c : p.checks) EXPECT_LE(c.max_deviation, kTau) << c.relation;

  const auto bad = EdgeBijection::from_forward({1, 0, 2, 3});
  EXPECT_EQ(code_of([&] { verify_phi(k22, k22, bad, kThree); }), ErrorCode::WitnessInvalid);

  const auto k23 = complete_bipartite(2, 3);
  const auto self = decide_iso(k23, k23);
  const auto c = verify_phi(k23, k23, *self.witness, kThree);
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.caveat);
}

TEST(ReprProperty, RelationsHoldOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_graph(rng, 4, 0, 12);
    const auto rep = standard_rep(g, default_t_samples(rng()));
    for (const auto& c : check_gp(rep)) EXPECT_LE(c.max_deviation, 1e-12) << c.relation;
    for (const auto& c : check_gc(edge_generators(rep))) EXPECT_LE(c.max_deviation, kTau) << c.relation;
  }
}

TEST(ReprProperty, NonPathWordsVanish) {
  // Exhaustive over words of length <= 5 on small graphs.
  std::mt19937_64 rng(42);
  for (int i = 0; i < 6; ++i) {
    const auto g = testing::random_graph(rng, 3, 1, 7);
    const auto rep = standard_rep(g, kThree);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) labels.push_back(g.label(g.vertex_at(x)));
    std::vector<std::string> w;
    std::function<void()> walk = [&] {
      if (!w.empty() && !is_path_word(g, w)) {
        ASSERT_LE(max_abs(evaluate_word(rep, w)), kTau);
      }
      if (w.size() == 5) return;
      for (const auto& x : labels) {
        w.push_back(x);
        walk();
        w.pop_back();
      }
    };
    walk();
  }
}

TEST(ReprProperty, SandwichContrapositive) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    const auto g = testing::random_graph(rng, 4, 1, 12);
    const auto rep = standard_rep(g, kThree);
    for (Side side : {Side::U, Side::V}) {
      const auto& xs = side == Side::U ? g.u_labels() : g.v_labels();
      const auto& ys = side == Side::U ? g.v_labels() : g.u_labels();
      for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
          for (const auto& y : ys) EXPECT_TRUE(sandwich_check(rep, xs[a], y, xs[b]).pass);
    }
  }
}

TEST(ReprProperty, LooseEdgeBlockCarriesScalarSummand) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(rng, 4, 1, 10);
    const auto rep = standard_rep(g, kThree);
    for (auto e : loose_edges(g)) {
      const auto& ed = g.edge(e);
      const ComplexMatrix x = rep.image(Vertex{Side::U, ed.u}) * rep.image(Vertex{Side::V, ed.v});
      for (const auto& s : rep.summands) {
        const auto o = static_cast<Eigen::Index>(s.offset), d = static_cast<Eigen::Index>(s.dim);
        const ComplexMatrix blk = x.block(o, o, d, d);
        if (s.kind == SummandKind::Pi && s.edge == e) {
          EXPECT_EQ(blk(0, 0), Complex(1.0));
        } else {
          EXPECT_LE(max_abs(blk), kTau);
        }
      }
    }
  }
}

TEST(ReprProperty, SigmaIrreducibleAcrossT) {
  const auto k33 = complete_bipartite(3, 3);
  for (const auto& q : enumerate_k22(k33))
    for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) EXPECT_EQ(commutant_dim(rep_sigma(k33, q, t)), 1u);
}

}  // namespace
}  // namespace bga
