#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/tilespec.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

struct PointCloud {
  std::size_t dimension = 0;
  std::vector<std::vector<double>> points;
  std::string source;  // chaos, subdivision, boundary(k)
  std::uint64_t seed = 0;
};

constexpr std::size_t kChaosBurnIn = 100;

// Chaos game from 0 with uniform digit choice from mt19937_64.
PointCloud chaos_points(const TileSystem& ts, std::size_t count, std::uint64_t seed);

// f_w(0) for every word of the given length, in lexicographic order.
PointCloud subdivision_points(const TileSystem& ts, std::size_t depth);

// Label address of the shortest, then least, lasso from v.
Address canonical_lasso(const NeighborGraph& g, std::size_t v);

struct BoundaryRenderParams {
  std::size_t max_points = 5000000;
};

// f_w(a_r) for every label path w of the given length from k to r, in
// lexicographic order of (w, r). a_r is pi of the canonical lasso from the
// member of {r, -r} with the smaller index, and a_{-r} = a_r - r. Throws
// CapExceeded when the path count exceeds max_points.
PointCloud boundary_points(const NeighborGraph& g, std::size_t k, std::size_t depth,
                           const BoundaryRenderParams& params = {});

// "# seed=...", a header x,y,z (or x1,x2,... beyond three coordinates), one row
// per point, shortest round-trip decimal formatting.
std::string to_csv(const PointCloud& cloud);

}  // namespace tiletopo
