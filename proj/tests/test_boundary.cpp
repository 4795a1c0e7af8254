#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "support.hpp"
#include "tiletopo/boundary.hpp"
#include "tiletopo/intersections.hpp"

using namespace tiletopo;
using tiletopo::testing::analysis;
using tiletopo::testing::vertex_named;
using tiletopo::testing::with_faces;

namespace {

const std::string kAll[] = {"A", "B", "C", "D", "E", "F", "G", "S"};

std::vector<std::size_t> cyclic_sizes(const SCCDecomposition& scc) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < scc.components.size(); ++c)
    if (scc.is_cyclic(c)) out.push_back(scc.components[c].size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(StrongComponents, TwindragonE) {
  const auto& a = analysis("E");
  const auto& scc = a.classes.scc;
  EXPECT_EQ(cyclic_sizes(scc), (std::vector<std::size_t>{1, 1, 12, 16}));
}

TEST(StrongComponents, SierpinskiFacesIrreducible) {
  const auto& a = analysis("S");
  std::set<std::size_t> comps;
  for (std::size_t v : a.classes.with(Cardinality::kUncountable)) comps.insert(a.classes.scc.component_of[v]);
  EXPECT_EQ(comps.size(), 1u);
}

TEST(StrongComponents, SingleLoop) {
  LabeledDigraph g(1, 1);
  g.add_edge(0, 0, 1);
  const auto scc = strong_components(g, {true});
  ASSERT_EQ(scc.components.size(), 1u);
  EXPECT_TRUE(scc.is_cyclic(0));
}

TEST(StrongComponents, MatrixAndSearchOrdersAgree) {
  for (const auto& key : kAll) {
    const NeighborGraph& g = analysis(key).g;
    std::vector<std::size_t> verts;
    for (std::size_t v = 1; v < g.size(); ++v) verts.push_back(v);
    EXPECT_EQ(reachability_by_matrix(adjacency_matrix(g.digraph(), verts)), reachability_by_search(g.digraph(), verts))
        << key;
  }
}

TEST(Cardinality, TwindragonCounts) {
  const auto& c = analysis("C").classes;
  EXPECT_EQ(c.with(Cardinality::kSingleton).size(), 8u);
  EXPECT_EQ(c.with(Cardinality::kUncountable).size(), 12u);
  const auto& d = analysis("D").classes;
  EXPECT_EQ(d.with(Cardinality::kFinite).size(), 8u);
  EXPECT_EQ(d.with(Cardinality::kSingleton).size(), 12u);
  EXPECT_EQ(d.with(Cardinality::kUncountable).size(), 14u);
  const std::pair<const char*, std::size_t> uncountable[] = {{"A", 18}, {"B", 14}, {"E", 32}};
  for (const auto& [key, n] : uncountable) EXPECT_EQ(analysis(key).classes.with(Cardinality::kUncountable).size(), n);
}

TEST(Cardinality, TwindragonBPointNeighbors) {
  const auto& b = with_faces("B");
  const auto h = vertex_named(b, "h");
  const auto i = vertex_named(b, "i");
  EXPECT_EQ(b.classes.vertices[h].cardinality, Cardinality::kSingleton);
  EXPECT_EQ(b.classes.vertices[i].cardinality, Cardinality::kSingleton);
  EXPECT_EQ(path_addresses(b.g.digraph(), h), std::vector<Address>{Address::parse("1(2)w")});
  EXPECT_EQ(path_addresses(b.g.digraph(), i), std::vector<Address>{Address::parse("(2)w")});
}

TEST(Cardinality, NegationInvariant) {
  for (const auto& key : kAll) {
    const auto& a = analysis(key);
    for (std::size_t v = 1; v < a.g.size(); ++v)
      EXPECT_EQ(a.classes.vertices[v].cardinality, a.classes.vertices[a.g.negation(v)].cardinality) << key;
  }
}

TEST(PointNeighbors, MatrixTestMatchesCycleAnalysis) {
  for (const auto& key : kAll) {
    const auto& a = analysis(key);
    EXPECT_EQ(point_neighbor_matrix_test(a.g), a.classes.with(Cardinality::kSingleton)) << key;
  }
}

TEST(PointNeighbors, Examples) {
  const auto& s = analysis("S");
  std::set<std::string> vs;
  for (std::size_t v : point_neighbor_matrix_test(s.g)) vs.insert(format_vector(s.g.vector(v)));
  EXPECT_EQ(vs, (std::set<std::string>{"(2,1)", "(-2,-1)", "(1,2)", "(-1,-2)", "(1,-1)", "(-1,1)"}));
  EXPECT_EQ(point_neighbor_matrix_test(analysis("E").g).size(), 2u);
  EXPECT_EQ(point_neighbor_matrix_test(analysis("A").g).size(), 8u);
}

TEST(Equations, TwindragonC) {
  const auto& c = with_faces("C");
  const auto a = vertex_named(c, "a");
  std::set<std::pair<std::string, std::string>> terms;
  for (const auto& t : boundary_equation(c.g, a)) terms.insert({format_word(t.word), c.names[t.target]});
  EXPECT_EQ(terms, (std::set<std::pair<std::string, std::string>>{{"1", "b"}, {"2", "b"}, {"2", "c"}}));

  std::vector<bool> keep(c.g.size(), false);
  for (std::size_t v : c.face_list) keep[v] = true;
  EquationSystem sys(c.g, keep);
  const auto cc = vertex_named(c, "c");
  for (const char* x : {"f", "d", "b", "e"}) sys.eliminate(vertex_named(c, x));
  std::set<std::pair<std::string, std::string>> reduced;
  for (const auto& t : sys.terms(a)) reduced.insert({format_word(t.word), c.names[t.target]});
  EXPECT_EQ(reduced, (std::set<std::pair<std::string, std::string>>{
                         {"2", "c"}, {"1122", "a"}, {"1222", "a"}, {"2122", "a"}, {"2222", "a"}}));
  std::set<std::pair<std::string, std::string>> reduced_c;
  for (const auto& t : sys.terms(cc)) reduced_c.insert({format_word(t.word), c.names[t.target]});
  EXPECT_EQ(reduced_c, (std::set<std::pair<std::string, std::string>>{{"12", "a"}, {"12", "-c"}, {"22", "-c"}}));
  EXPECT_THROW(sys.eliminate(a), std::invalid_argument);
}

TEST(Equations, LoopVertex) {
  const auto& s = analysis("S");
  for (std::size_t v : s.classes.with(Cardinality::kSingleton)) {
    const auto terms = boundary_equation(s.g, v);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].target, v);
  }
}

TEST(Perron, TwindragonE) {
  const auto& e = analysis("E");
  const auto& scc = e.classes.scc;
  bool seen = false;
  for (std::size_t c = 0; c < scc.components.size(); ++c)
    if (scc.components[c].size() == 16) {
      const double lambda = e.dims.perron[c].value;
      EXPECT_NEAR(lambda, largest_real_root({1, 0, -1, 0, 0, -2, 0, -8}, 4.0), 1e-9);
      EXPECT_NEAR(lambda, 1.554, 1e-3);
      EXPECT_NEAR(e.dims.own[c], 1.908, 0.01);
      seen = true;
    }
  EXPECT_TRUE(seen);
}

TEST(Perron, CycleWithDoubleEdges) {
  LabeledDigraph g(10, 2);
  for (std::size_t v = 0; v < 10; ++v) {
    g.add_edge(v, (v + 1) % 10, 1);
    if (v < 6) g.add_edge(v, (v + 1) % 10, 2);
  }
  std::vector<std::size_t> all(10);
  for (std::size_t v = 0; v < 10; ++v) all[v] = v;
  EXPECT_NEAR(perron_root(g, all).value, std::pow(2.0, 0.6), 1e-12);
  LabeledDigraph loop(1, 1);
  loop.add_edge(0, 0, 1);
  EXPECT_NEAR(perron_root(loop, {0}).value, 1.0, 1e-12);
}

TEST(Dimensions, SelfSimilarCube) {
  const auto& a = with_faces("A");
  const auto spec = spectrum(a.ts.M);
  const auto& scc = a.classes.scc;
  for (std::size_t v : a.classes.with(Cardinality::kUncountable)) {
    const std::size_t c = scc.component_of[v];
    const auto dim = hausdorff_dimension_selfsimilar(a.ts, spec, a.dims.perron[c].value);
    ASSERT_TRUE(dim);
    const bool face = std::find(a.face_list.begin(), a.face_list.end(), v) != a.face_list.end();
    EXPECT_NEAR(*dim, face ? 2.0 : 1.0, 1e-6);
  }
  EXPECT_DOUBLE_EQ(*hausdorff_dimension_selfsimilar(a.ts, spec, 1.0), 0.0);
  const auto& cc = analysis("C");
  EXPECT_FALSE(hausdorff_dimension_selfsimilar(cc.ts, spectrum(cc.ts.M), 1.5));
}

TEST(Dimensions, TwindragonFCycles) {
  const auto& f = analysis("F");
  const auto& scc = f.classes.scc;
  std::vector<double> dims;
  for (std::size_t c = 0; c < scc.components.size(); ++c)
    if (scc.is_cyclic(c) && scc.components[c].size() == 10) dims.push_back(f.dims.own[c]);
  std::sort(dims.begin(), dims.end());
  ASSERT_EQ(dims.size(), 3u);
  EXPECT_NEAR(dims[0], 0.6, 1e-9);
  EXPECT_NEAR(dims[1], 0.6, 1e-9);
  EXPECT_NEAR(dims[2], 1.8, 1e-9);
}

TEST(Dimensions, OrderIsMonotone) {
  for (const auto& key : kAll) {
    const auto& a = analysis(key);
    const auto& scc = a.classes.scc;
    for (std::size_t u = 0; u < scc.components.size(); ++u)
      for (std::size_t v = 0; v < scc.components.size(); ++v)
        if (!std::isnan(a.dims.effective[v]) && scc.reaches[u][v]) EXPECT_GE(a.dims.effective[u], a.dims.effective[v] - 1e-9) << key;
  }
}
