#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tiletopo/neighbor_graph.hpp"

using namespace tiletopo;
using tiletopo::testing::analysis;
using tiletopo::testing::test_system;

namespace {

const std::string kAll[] = {"A", "B", "C", "D", "E", "F", "G", "S"};

std::set<std::string> vector_set(const NeighborGraph& g) {
  std::set<std::string> out;
  for (std::size_t v = 1; v < g.size(); ++v) out.insert(format_vector(g.vector(v)));
  return out;
}

std::set<std::string> edge_set(const NeighborGraph& g) {
  std::set<std::string> out;
  for (const auto& e : g.edges())
    out.insert(format_vector(g.vector(e.from)) + ">" + format_vector(g.vector(e.to)) + ":" + std::to_string(e.label) +
               std::to_string(e.partner));
  return out;
}

}  // namespace

TEST(Bounds, SierpinskiAndInterval) {
  const auto s = attractor_bounds(test_system("S"), BoundsMethod::kRigorous);
  EXPECT_TRUE(s.contains(BoundsBox{{-1, -1}, {1, 1}, BoundsMethod::kRigorous, 0}));
  const auto i = attractor_bounds(test_system("I"), BoundsMethod::kRigorous);
  EXPECT_LE(i.lower[0], 0.0);
  EXPECT_GE(i.upper[0], 1.0);
  EXPECT_LE(i.upper[0] - i.lower[0], 1.1);
}

TEST(Bounds, SampledInsideRigorousForF) {
  const TileSystem ts = test_system("F");
  const auto rigorous = attractor_bounds(ts, BoundsMethod::kRigorous);
  const auto sampled = sampled_extrema(ts, 1000000, 5);
  EXPECT_TRUE(rigorous.contains(sampled));
}

TEST(NeighborGraph, SierpinskiVertices) {
  const auto& a = analysis("S");
  const std::set<std::string> expected{"(1,1)",  "(-1,-1)", "(-1,0)", "(1,0)",  "(0,-1)", "(0,1)",
                                       "(2,1)",  "(-2,-1)", "(1,2)",  "(-1,-2)", "(1,-1)", "(-1,1)"};
  EXPECT_EQ(vector_set(a.g), expected);
}

TEST(NeighborGraph, TwindragonCounts) {
  const std::pair<const char*, std::size_t> counts[] = {{"A", 26}, {"B", 18}, {"C", 20}, {"D", 34}, {"E", 34}};
  for (const auto& [key, n] : counts) EXPECT_EQ(analysis(key).g.neighbor_count(), n) << key;
}

// Rigorous windows give more neighbors for F and G than the published table.
TEST(NeighborGraph, RigorousCountsForFAndG) {
  EXPECT_EQ(analysis("F").g.neighbor_count(), 78u);
  EXPECT_EQ(analysis("G").g.neighbor_count(), 122u);
}

TEST(NeighborGraph, NegationSymmetry) {
  for (const auto& key : kAll) {
    const NeighborGraph& g = analysis(key).g;
    for (std::size_t v = 1; v < g.size(); ++v) {
      EXPECT_EQ(g.vector(g.negation(v)), negate(g.vector(v))) << key;
      EXPECT_EQ(g.negation(g.negation(v)), v);
    }
    const auto edges = edge_set(g);
    for (const auto& e : g.edges()) {
      const std::string mirrored = format_vector(negate(g.vector(e.from))) + ">" +
                                   format_vector(negate(g.vector(e.to))) + ":" + std::to_string(e.partner) +
                                   std::to_string(e.label);
      EXPECT_TRUE(e.from == 0 || edges.count(mirrored)) << key << " " << mirrored;
    }
  }
}

TEST(NeighborGraph, OppositeEdgeInvolution) {
  for (const auto& key : kAll) {
    const NeighborGraph& g = analysis(key).g;
    for (const auto& e : g.edges()) {
      if (e.from == NeighborGraph::kRoot) continue;
      const NeighborEdge o = opposite_edge(g, e);
      EXPECT_EQ(o.from, g.negation(e.from));
      EXPECT_EQ(o.to, g.negation(e.to));
      EXPECT_EQ(o.label, e.partner);
      EXPECT_EQ(o.partner, e.label);
      EXPECT_EQ(opposite_edge(g, o), e) << key;
      EXPECT_NE(std::find(g.edges().begin(), g.edges().end(), o), g.edges().end()) << key;
    }
  }
}

TEST(NeighborGraph, SierpinskiOppositeLabels) {
  const NeighborGraph& g = analysis("S").g;
  const auto from = *g.find(make_vector({0, -1}));
  const auto to = *g.find(make_vector({-1, -1}));
  bool seen = false;
  for (const auto& e : g.edges())
    if (e.from == from && e.to == to && e.label == 2) {
      const NeighborEdge o = opposite_edge(g, e);
      EXPECT_EQ(o.label, 3);
      EXPECT_EQ(o.from, *g.find(make_vector({0, 1})));
      EXPECT_EQ(o.to, *g.find(make_vector({1, 1})));
      seen = true;
    }
  EXPECT_TRUE(seen);
}

TEST(NeighborGraph, DoubleEdgesMapToDoubleEdges) {
  const NeighborGraph& g = analysis("C").g;
  for (const auto& e : g.edges())
    if (e.label == e.partner && e.from != 0) {
      const auto o = opposite_edge(g, e);
      EXPECT_EQ(o.label, o.partner);
      EXPECT_EQ(g.vector(e.to), g.system().M.apply(g.vector(e.from)));
    }
}

TEST(NeighborGraph, RootEdges) {
  for (const auto& key : kAll) {
    const NeighborGraph& g = analysis(key).g;
    const TileSystem& ts = g.system();
    std::set<std::pair<std::size_t, int>> expected, actual;
    for (int i = 1; i <= static_cast<int>(ts.m()); ++i)
      for (int j = 1; j <= static_cast<int>(ts.m()); ++j)
        if (i != j)
          if (auto v = g.find(subtract(ts.digit(j), ts.digit(i)))) expected.insert({*v, i});
    for (std::size_t id : g.out_edges(NeighborGraph::kRoot)) actual.insert({g.edges()[id].to, g.edges()[id].label});
    EXPECT_EQ(actual, expected) << key;
  }
}

TEST(NeighborGraph, WindowStability) {
  for (const auto& key : kAll) {
    const auto& a = analysis(key);
    const auto wide = attractor_bounds(a.ts, BoundsMethod::kRigorous).inflated(0.5);
    const NeighborGraph g2 = build_neighbor_graph(a.ts, wide);
    EXPECT_GE(g2.candidate_count(), a.g.candidate_count()) << key;
    EXPECT_EQ(vector_set(g2), vector_set(a.g)) << key;
    EXPECT_EQ(edge_set(g2), edge_set(a.g)) << key;
  }
}

TEST(NeighborGraph, Deterministic) {
  const TileSystem ts = test_system("D");
  const auto b = attractor_bounds(ts, BoundsMethod::kRigorous);
  EXPECT_EQ(to_dot(build_neighbor_graph(ts, b)), to_dot(build_neighbor_graph(ts, b)));
}

TEST(NeighborGraph, VertexCap) {
  const TileSystem ts = test_system("G");
  GraphParams p;
  p.max_vertices = 10;
  EXPECT_ANY_THROW(build_neighbor_graph(ts, attractor_bounds(ts, BoundsMethod::kRigorous), p));
}

TEST(TilingExistence, CatalogAndSquare) {
  for (const auto& key : kAll) EXPECT_TRUE(check_tiling_existence(analysis(key).g).ok) << key;
  TileSystem square;
  square.n = 2;
  square.M = IntMatrix{{2, 0}, {0, 2}};
  square.digits = {make_vector({0, 0}), make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})};
  const auto g = build_neighbor_graph(square, attractor_bounds(square, BoundsMethod::kRigorous));
  EXPECT_EQ(g.neighbor_count(), 8u);
  EXPECT_TRUE(check_tiling_existence(g).ok);
}

TEST(OpenSetCondition, CatalogAndNegativeBase) {
  for (const auto& key : kAll) EXPECT_TRUE(check_osc_flag(analysis(key).g)) << key;
  TileSystem ts;
  ts.n = 1;
  ts.M = IntMatrix{{-2}};
  ts.digits = {make_vector({0}), make_vector({1})};
  const auto g = build_neighbor_graph(ts, attractor_bounds(ts, BoundsMethod::kRigorous));
  EXPECT_EQ(g.neighbor_count(), 2u);
  EXPECT_TRUE(check_osc_flag(g));
}

TEST(PieceRelation, Examples) {
  const NeighborGraph& s = analysis("S").g;
  EXPECT_EQ(*piece_relation(s, {2}, {2}), make_vector({0, 0}));
  EXPECT_EQ(*piece_relation(s, {2}, {3}), make_vector({-1, 1}));
  const NeighborGraph& c = analysis("C").g;
  const auto rel = piece_relation(c, parse_word("1212122"), parse_word("2121121"));
  ASSERT_TRUE(rel);
  const auto faces = tiletopo::testing::with_faces("C").face_list;
  EXPECT_NE(std::find(faces.begin(), faces.end(), *c.find(*rel)), faces.end());
}

TEST(Dot, ReducedMergesPairs) {
  const NeighborGraph& g = analysis("E").g;
  const std::string dot = to_dot(g, {true, nullptr});
  std::size_t nodes = 0;
  std::size_t pos = 0;
  while ((pos = dot.find("\";\n", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  EXPECT_EQ(nodes, 18u);
}
