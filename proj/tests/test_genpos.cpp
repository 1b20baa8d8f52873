#include <gtest/gtest.h>

#include <cmath>

#include "bga/error.hpp"
#include "bga/genpos.hpp"
#include "corpus.hpp"

namespace bga {
namespace {

using testing::make_graph;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

ContractionFamily halmos_k1(double c) {
  const double s = std::sqrt(1 - c * c);
  ContractionFamily cf{complete_bipartite(2, 2), 1, {}};
  for (double x : {c, s, s, -c}) cf.blocks.push_back(ComplexMatrix::Constant(1, 1, x));
  return cf;
}

/// tr(P_x P_y) for all vertex pairs.
std::vector<Complex> trace_table(const Representation& r) {
  std::vector<Complex> out;
  for (const auto& a : r.images)
    for (const auto& b : r.images) out.push_back((a * b).trace());
  return out;
}

TEST(Genpos, SynthesizeK22K1IsHalmosForm) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto cf = synthesize(complete_bipartite(2, 2), {1, seed, 5000, kSynthTol});
    const auto res = condition_residuals(cf);
    EXPECT_LE(res.column, 1e-8);
    EXPECT_LE(res.row, 1e-8);
    // |c|^2 + |s|^2 = 1 along rows and columns, |C_11| = |C_22|, |C_12| = |C_21|.
    const double a = std::abs(cf.block(0, 0)(0, 0)), b = std::abs(cf.block(0, 1)(0, 0));
    EXPECT_NEAR(a * a + b * b, 1.0, 1e-8);
    EXPECT_NEAR(std::abs(cf.block(1, 1)(0, 0)), a, 1e-8);
    EXPECT_NEAR(std::abs(cf.block(1, 0)(0, 0)), b, 1e-8);
  }
}

TEST(Genpos, SynthesizeK22K3) {
  SynthesisStats st;
  const auto cf = synthesize(complete_bipartite(2, 2), {3, 1, 5000, kSynthTol}, &st);
  const auto res = condition_residuals(cf);
  EXPECT_LE(res.column, 1e-8);
  EXPECT_LE(res.row, 1e-8);
  EXPECT_GE(res.min_edge_singular_value, kBlockConditioning);
  EXPECT_LE(st.residual, kSynthAccept);
}

TEST(Genpos, SynthesizePathIsClassifiedNotAccepted) {
  // u1 - v1 - u2 - v2: unitarity forces the u2,v1 block to vanish.
  const auto path = make_graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const auto c = code_of([&] { synthesize(path, {1, 0, 5000, kSynthTol}); });
  EXPECT_TRUE(c == ErrorCode::DegenerateBlock || c == ErrorCode::Nonconvergence);
}

TEST(Genpos, SynthesizeErrors) {
  EXPECT_EQ(code_of([] { synthesize(complete_bipartite(2, 3), {}); }), ErrorCode::SideCountMismatch);
  const auto two = make_graph(2, 2, {{0, 0}, {1, 1}});
  EXPECT_EQ(code_of([&] { synthesize(two, {}); }), ErrorCode::NotConnected);
  EXPECT_EQ(code_of([] { synthesize(complete_bipartite(2, 2), {0, 0, 10, 1e-10}); }), ErrorCode::ParameterOutOfRange);
}

TEST(Genpos, SynthesizeLargerPatterns) {
  // 6-cycle: rows 1 and 2 of the pattern share one column, so no unitary has
  // this exact support and synthesis must refuse it.
  const auto c6 = make_graph(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  const auto c = code_of([&] { synthesize(c6, {2, 3, 5000, kSynthTol}); });
  EXPECT_TRUE(c == ErrorCode::DegenerateBlock || c == ErrorCode::Nonconvergence);

  const auto k33_minus = make_graph(3, 3, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  const auto cf = synthesize(k33_minus, {2, 3, 5000, kSynthTol});
  EXPECT_LE(condition_residuals(cf).pattern, 0.0);
  EXPECT_TRUE(check_generic_position(build_projection_family(cf).rep).pass);
  const auto k33 = synthesize(complete_bipartite(3, 3), {2, 4, 5000, kSynthTol});
  EXPECT_TRUE(all_pass(check_gp(build_projection_family(k33).rep)));
}

TEST(Genpos, BuildMatchesSigmaDisplay) {
  // With c^2 = 1 - t the V-side coordinate projection plays u1 of sigma and
  // P_{u1} plays v1 (roles of the sides exchanged).
  for (double t : {0.2, 0.5, 0.7}) {
    const auto pf = build_projection_family(halmos_k1(std::sqrt(1 - t)));
    const double r = std::sqrt(t * (1 - t));
    ComplexMatrix v1(2, 2);
    v1 << 1 - t, r, r, t;
    EXPECT_LE(max_deviation(pf.rep.image("u1"), v1), 1e-12);
    ComplexMatrix e1(2, 2);
    e1 << 1, 0, 0, 0;
    EXPECT_LE(max_deviation(pf.rep.image("v1"), e1), 0.0);
  }
}

TEST(Genpos, BuildHalfHalf) {
  const auto pf = build_projection_family(halmos_k1(1 / std::sqrt(2.0)));
  ComplexMatrix half = ComplexMatrix::Constant(2, 2, 0.5);
  EXPECT_LE(max_deviation(pf.rep.image("u1"), half), 1e-12);
  EXPECT_TRUE(all_pass(check_gp(pf.rep)));
  EXPECT_TRUE(check_generic_position(pf.rep).pass);
}

TEST(Genpos, BuildRejectsZeroEdgeBlock) {
  auto cf = halmos_k1(1.0);  // s = 0
  EXPECT_EQ(code_of([&] { build_projection_family(cf); }), ErrorCode::InvariantViolation);
  auto cf2 = halmos_k1(0.6);
  cf2.blocks[1] = ComplexMatrix::Zero(1, 1);
  EXPECT_EQ(code_of([&] { build_projection_family(cf2); }), ErrorCode::InvariantViolation);
}

TEST(Genpos, GenericPositionExamples) {
  const auto cf = synthesize(complete_bipartite(2, 2), {3, 2, 5000, kSynthTol});
  const auto pf = build_projection_family(cf);
  EXPECT_TRUE(check_generic_position(pf.rep).pass);

  // The t = 0 limit: c = 1, s = 0; ranges align.
  const double c = 1.0;
  Representation r{complete_bipartite(2, 2), 2, {}, {}};
  ComplexMatrix e1(2, 2), e2(2, 2);
  e1 << c, 0, 0, 0;
  e2 << 0, 0, 0, 1;
  r.images = {e1, e2, e1, e2};
  const auto rep = check_generic_position(r);
  EXPECT_FALSE(rep.pass);

  // An edge with P_u = P_v: both intersections vanish for that edge.
  EXPECT_EQ(rep.edges[0].im_u_ker_v, 0u);
  EXPECT_EQ(rep.edges[0].ker_u_im_v, 0u);
}

TEST(Genpos, ExtractRoundTripPreservesTraces) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto cf = synthesize(complete_bipartite(2, 2), {k, 7, 5000, kSynthTol});
    const auto pf = build_projection_family(cf);
    for (const auto& img : pf.rep.images) EXPECT_EQ(numerical_rank(img), k);
    const auto ex = extract_contractions(pf.rep);
    EXPECT_EQ(ex.k, k);
    const auto res = condition_residuals(ex);
    EXPECT_LE(res.column, 1e-8);
    EXPECT_LE(res.row, 1e-8);
    const auto again = build_projection_family(ex);
    const auto t1 = trace_table(pf.rep), t2 = trace_table(again.rep);
    for (std::size_t i = 0; i < t1.size(); ++i) EXPECT_LE(std::abs(t1[i] - t2[i]), 1e-8);
  }
}

TEST(Genpos, ExtractErrors) {
  Representation r{complete_bipartite(2, 2), 2, {}, {}};
  ComplexMatrix e1(2, 2), e2(2, 2), id = ComplexMatrix::Identity(2, 2), z = ComplexMatrix::Zero(2, 2);
  e1 << 1, 0, 0, 0;
  e2 << 0, 0, 0, 1;
  r.images = {e1, e2, e1, e2};
  EXPECT_EQ(code_of([&] { extract_contractions(r); }), ErrorCode::NotGenericPosition);
  r.images = {id, z, e1, e2};
  EXPECT_EQ(code_of([&] { extract_contractions(r); }), ErrorCode::RankMismatch);
}

TEST(Genpos, HalmosExamples) {
  const auto pf = build_projection_family(halmos_k1(1 / std::sqrt(2.0)));
  const auto h = halmos_decompose(pf.rep);
  EXPECT_NEAR(h.C(0, 0).real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(h.S(0, 0).real(), 1 / std::sqrt(2.0), 1e-12);

  for (double t : {0.2, 0.5, 0.8}) {
    const auto k22 = complete_bipartite(2, 2);
    const auto s = rep_sigma(k22, enumerate_k22(k22).front(), t);
    const auto hs = halmos_decompose(s);
    EXPECT_NEAR((hs.C * hs.C)(0, 0).real(), 1 - t, 1e-12);
    EXPECT_LE(hs.residual, 1e-12);
  }

  EXPECT_EQ(code_of([] {
              const auto g = complete_bipartite(2, 3);
              halmos_decompose(rep_pi(g, 0));
            }),
            ErrorCode::NotK22);
  Representation r{complete_bipartite(2, 2), 2, {}, {}};
  ComplexMatrix e1(2, 2), e2(2, 2);
  e1 << 1, 0, 0, 0;
  e2 << 0, 0, 0, 1;
  r.images = {e1, e2, e1, e2};
  EXPECT_EQ(code_of([&] { halmos_decompose(r); }), ErrorCode::NotGenericPosition);
}

TEST(GenposProperty, SynthesizedFamiliesSatisfyEverything) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
      const auto cf = synthesize(complete_bipartite(2, 2), {k, seed, 5000, kSynthTol});
      const auto res = condition_residuals(cf);
      ASSERT_LE(res.column, 1e-8);
      ASSERT_LE(res.row, 1e-8);
      ASSERT_GE(res.min_edge_singular_value, 1e-6);
      const auto pf = build_projection_family(cf);
      ASSERT_TRUE(all_pass(check_gp(pf.rep)));
      ASSERT_TRUE(check_generic_position(pf.rep).pass);
      const auto h = halmos_decompose(pf.rep);
      EXPECT_LE(h.residual, 1e-8);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> ec(h.C), es(h.S);
      EXPECT_GT(ec.eigenvalues().minCoeff(), 0.0);
      EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
    }
  }
}

TEST(GenposProperty, Deterministic) {
  const SynthesisOptions opt{2, 99, 5000, kSynthTol};
  const auto a = synthesize(complete_bipartite(2, 2), opt);
  const auto b = synthesize(complete_bipartite(2, 2), opt);
  for (std::size_t i = 0; i < a.blocks.size(); ++i) EXPECT_EQ(a.blocks[i], b.blocks[i]);
}

}  // namespace
}  // namespace bga
