#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "support.hpp"
#include "tiletopo/errors.hpp"
#include "tiletopo/numeric.hpp"
#include "tiletopo/render.hpp"

using namespace tiletopo;
using tiletopo::testing::analysis;
using tiletopo::testing::test_system;

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// One-sided Hausdorff distance from a to b.
double directed_hausdorff(const PointCloud& a, const PointCloud& b) {
  double worst = 0.0;
  for (const auto& p : a.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b.points) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST(Chaos, IntervalStaysInUnitInterval) {
  const auto cloud = chaos_points(test_system("I"), 10000, 1);
  ASSERT_EQ(cloud.points.size(), 10000u);
  for (const auto& p : cloud.points) {
    EXPECT_GE(p[0], -1e-12);
    EXPECT_LE(p[0], 1.0 + 1e-12);
  }
}

TEST(Chaos, InsideRigorousBounds) {
  for (const std::string key : {"S", "C", "F"}) {
    const auto& a = analysis(key);
    const auto box = attractor_bounds(a.ts, BoundsMethod::kRigorous);
    for (const auto& p : chaos_points(a.ts, 20000, 9).points) EXPECT_TRUE(box.contains(p, 1e-9)) << key;
  }
}

TEST(Chaos, DeterministicCsv) {
  const TileSystem ts = test_system("C");
  const std::string a = to_csv(chaos_points(ts, 500, 42));
  EXPECT_EQ(a, to_csv(chaos_points(ts, 500, 42)));
  EXPECT_NE(a, to_csv(chaos_points(ts, 500, 43)));
  EXPECT_EQ(a.rfind("# seed=42\nx,y,z\n", 0), 0u);
}

TEST(Subdivision, WordCountAndBounds) {
  const TileSystem ts = test_system("S");
  const auto cloud = subdivision_points(ts, 4);
  EXPECT_EQ(cloud.points.size(), 256u);
  const auto box = attractor_bounds(ts, BoundsMethod::kRigorous);
  for (const auto& p : cloud.points) EXPECT_TRUE(box.contains(p, 1e-9));
}

TEST(Lasso, PathIsReadable) {
  for (const std::string key : {"B", "C", "S"}) {
    const auto& a = analysis(key);
    for (std::size_t v = 1; v < a.g.size(); ++v) {
      const Address s = canonical_lasso(a.g, v);
      EXPECT_TRUE(word_readable(a.g.digraph(), v, s.prefix(3 * a.g.size()))) << key;
    }
  }
}

TEST(Boundary, SierpinskiPointNeighbor) {
  const auto& s = analysis("S");
  const auto k = *s.g.find(make_vector({2, 1}));
  const auto cloud = boundary_points(s.g, k, 6);
  ASSERT_FALSE(cloud.points.empty());
  for (const auto& p : cloud.points) EXPECT_LT(distance(p, {1.0, 0.0}), 1e-9);
}

TEST(Boundary, NegatedNeighborIsShifted) {
  const auto& c = analysis("C");
  for (std::size_t k = 1; k < c.g.size(); ++k) {
    const auto a = boundary_points(c.g, k, 6);
    const auto b = boundary_points(c.g, c.g.negation(k), 6);
    ASSERT_EQ(a.points.size(), b.points.size());
    // B_{-k} = B_k - k as sets.
    std::vector<double> shift(3);
    for (std::size_t i = 0; i < 3; ++i) shift[i] = c.g.vector(k)[i].convert_to<double>();
    for (const auto& p : b.points) {
      std::vector<double> moved(3);
      for (std::size_t i = 0; i < 3; ++i) moved[i] = p[i] + shift[i];
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : a.points) best = std::min(best, distance(moved, q));
      EXPECT_LT(best, 1e-6);
    }
  }
}

TEST(Boundary, InsideTileAndNeighbor) {
  for (const std::string key : {"C", "E"}) {
    const auto& a = analysis(key);
    const auto box = attractor_bounds(a.ts, BoundsMethod::kRigorous);
    for (std::size_t k = 1; k < a.g.size(); ++k)
      for (const auto& p : boundary_points(a.g, k, 8).points) EXPECT_TRUE(box.contains(p, 1e-6)) << key;
  }
}

TEST(Boundary, RefinementConverges) {
  const auto& c = analysis("C");
  const auto k = *c.g.find(subtract(c.ts.digit(2), c.ts.digit(1)));
  const auto coarse = boundary_points(c.g, k, 10);
  const auto fine = boundary_points(c.g, k, 13);
  const double bound = 2.0 * std::pow(1.0 / 1.22, 10) * 4.0;
  EXPECT_LT(directed_hausdorff(fine, coarse), bound);
  EXPECT_LT(directed_hausdorff(coarse, fine), bound);
}

TEST(Boundary, RootAndCap) {
  const auto& c = analysis("C");
  EXPECT_THROW(boundary_points(c.g, NeighborGraph::kRoot, 3), PreconditionError);
  BoundaryRenderParams p;
  p.max_points = 10;
  EXPECT_THROW(boundary_points(c.g, 1, 12, p), CapExceeded);
}

TEST(Csv, HeaderForHighDimension) {
  PointCloud cloud;
  cloud.dimension = 4;
  cloud.points = {{0.5, 1, 2, 3}};
  EXPECT_EQ(to_csv(cloud), "# seed=0\nx1,x2,x3,x4\n0.5,1,2,3\n");
}
