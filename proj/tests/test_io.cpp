#include <gtest/gtest.h>

#include "bga/error.hpp"
#include "bga/io.hpp"
#include "corpus.hpp"

namespace bga {
namespace {

TEST(Io, GraphRoundTrip) {
  const auto j = parse_json(R"({"u": ["a", "b"], "v": ["x"], "e": [["x", "a"], ["b", "x"]]})");
  const auto g = graph_from_json(j);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_EQ(to_json(g)["e"][0], Json::array({"a", "x"}));
}

TEST(Io, ParseErrorCarriesPosition) {
  try {
    parse_json("{\n  \"u\": [1,\n  ]\n}");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_json("");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(Io, StructuralErrors) {
  EXPECT_THROW(graph_from_json(parse_json(R"({"u": []})")), ParseError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"u": [1], "v": [], "e": []})")), ParseError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"u": ["a"], "v": ["b"], "e": [["a"]]})")), ParseError);
  EXPECT_THROW(graph_from_json(parse_json(R"([1, 2])")), ParseError);
  try {
    graph_from_json(parse_json(R"({"u": ["a"], "v": ["b"], "e": [["a", "a"]]})"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CrossSideEdge);
  }
}

TEST(Io, HypergraphRoundTrip) {
  const auto h = hypergraph_from_json(
      parse_json(R"({"vertices": ["v1", "v2"], "hedges": ["e1"], "source": {"e1": ["v1", "v2"]}})"));
  EXPECT_EQ(h.source.at("e1").size(), 2u);
  const auto again = hypergraph_from_json(to_json(h));
  EXPECT_EQ(again.vertices, h.vertices);
  EXPECT_EQ(again.source, h.source);
}

TEST(Io, SkeletonJson) {
  const auto g = complete_bipartite(2, 2);
  const auto j = to_json(g, spec_skeleton(g));
  EXPECT_TRUE(j["clopen"].empty());
  ASSERT_EQ(j["components"].size(), 1u);
  EXPECT_EQ(j["components"][0]["pairing"][0], Json::parse(R"([["u1","v1"],["u2","v2"]])"));
  EXPECT_EQ(j["components"][0]["pairing"][1], Json::parse(R"([["u1","v2"],["u2","v1"]])"));
}

TEST(Io, RepresentationRoundTrip) {
  const auto g = complete_bipartite(2, 2);
  const std::vector<double> ts{0.3};
  const auto rep = standard_rep(g, ts);
  const auto back = representation_from_json(g, parse_json(to_json(rep).dump()));
  ASSERT_EQ(back.dim, rep.dim);
  for (std::size_t x = 0; x < g.vertex_count(); ++x) EXPECT_EQ(back.images[x], rep.images[x]);
  EXPECT_TRUE(all_pass(check_gp(back)));
}

TEST(Io, ContractionFamilyRoundTrip) {
  const auto cf = synthesize(complete_bipartite(2, 2), {2, 5, 5000, kSynthTol});
  const auto j = to_json(cf);
  EXPECT_TRUE(j["blocks"].contains("u1,v2"));
  const auto back = contraction_family_from_json(cf.graph, parse_json(j.dump()));
  for (std::size_t i = 0; i < cf.blocks.size(); ++i) EXPECT_EQ(back.blocks[i], cf.blocks[i]);
}

TEST(Io, VerdictJson) {
  const auto g = complete_bipartite(2, 2);
  const auto j = to_json(g, g, decide_iso(g, g));
  EXPECT_TRUE(j["isomorphic"].get<bool>());
  EXPECT_EQ(j["witness"].size(), 4u);
  EXPECT_TRUE(j["reason"].is_null());
  const auto n = to_json(g, complete_bipartite(1, 4), decide_iso(g, complete_bipartite(1, 4)));
  EXPECT_EQ(n["reason"], "count mismatch");
  EXPECT_TRUE(n["witness"].is_null());
}

TEST(Io, DotMarksSides) {
  const auto dot = to_dot(complete_bipartite(1, 1));
  EXPECT_NE(dot.find("\"u1\" [shape=circle, style=filled"), std::string::npos);
  EXPECT_NE(dot.find("\"v1\" [shape=circle];"), std::string::npos);
  EXPECT_NE(dot.find("\"u1\" -- \"v1\";"), std::string::npos);
}

}  // namespace
}  // namespace bga
