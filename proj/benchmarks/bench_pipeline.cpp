#include <benchmark/benchmark.h>

#include "tiletopo/boundary.hpp"
#include "tiletopo/faces.hpp"
#include "tiletopo/intersections.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/render.hpp"
#include "tiletopo/tilespec.hpp"

using namespace tiletopo;

namespace {

const char kLetters[] = "ABCDEFG";

TileSystem system_at(const benchmark::State& state) { return twindragon(kLetters[state.range(0)]); }

void BM_RigorousBounds(benchmark::State& state) {
  const TileSystem ts = system_at(state);
  for (auto _ : state) benchmark::DoNotOptimize(attractor_bounds(ts, BoundsMethod::kRigorous));
  state.SetLabel(std::string(1, kLetters[state.range(0)]));
}
BENCHMARK(BM_RigorousBounds)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_NeighborGraph(benchmark::State& state) {
  const TileSystem ts = system_at(state);
  const auto box = attractor_bounds(ts, BoundsMethod::kRigorous);
  for (auto _ : state) benchmark::DoNotOptimize(build_neighbor_graph(ts, box));
  state.SetLabel(std::string(1, kLetters[state.range(0)]));
}
BENCHMARK(BM_NeighborGraph)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_BoundaryClasses(benchmark::State& state) {
  const TileSystem ts = system_at(state);
  const auto g = build_neighbor_graph(ts, attractor_bounds(ts, BoundsMethod::kRigorous));
  for (auto _ : state) benchmark::DoNotOptimize(classify_cardinality(g));
  state.SetLabel(std::string(1, kLetters[state.range(0)]));
}
BENCHMARK(BM_BoundaryClasses)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

// A through E; F and G take seconds to minutes per run.
void BM_FaceReport(benchmark::State& state) {
  const TileSystem ts = system_at(state);
  const auto g = build_neighbor_graph(ts, attractor_bounds(ts, BoundsMethod::kRigorous));
  const auto classes = classify_cardinality(g);
  const auto dims = component_dimensions(ts, g.digraph(), classes.scc);
  for (auto _ : state) benchmark::DoNotOptimize(face_report(g, classes.scc, dims));
  state.SetLabel(std::string(1, kLetters[state.range(0)]));
}
BENCHMARK(BM_FaceReport)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IntersectionGraph(benchmark::State& state) {
  const TileSystem ts = system_at(state);
  const auto g = build_neighbor_graph(ts, attractor_bounds(ts, BoundsMethod::kRigorous));
  const auto level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_intersection_graph(g, level));
  state.SetLabel(std::string(1, kLetters[state.range(0)]) + " level " + std::to_string(level));
}
BENCHMARK(BM_IntersectionGraph)->ArgsProduct({{1, 2, 4}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_ChaosGame(benchmark::State& state) {
  const TileSystem ts = twindragon('C');
  for (auto _ : state) benchmark::DoNotOptimize(chaos_points(ts, static_cast<std::size_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ChaosGame)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BoundaryPoints(benchmark::State& state) {
  const TileSystem ts = twindragon('C');
  const auto g = build_neighbor_graph(ts, attractor_bounds(ts, BoundsMethod::kRigorous));
  const auto k = *g.find(subtract(ts.digit(2), ts.digit(1)));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_points(g, k, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BoundaryPoints)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
