#include "tiletopo/render.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "tiletopo/errors.hpp"
#include "tiletopo/numeric.hpp"

namespace tiletopo {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& x) { return {x.data(), x.data() + x.size()}; }

std::vector<std::vector<std::pair<int, std::size_t>>> sorted_out(const NeighborGraph& g) {
  std::vector<std::vector<std::pair<int, std::size_t>>> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t id : g.out_edges(v)) out[v].push_back({g.edges()[id].label, g.edges()[id].to});
    std::sort(out[v].begin(), out[v].end());
    out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
  }
  return out;
}

}  // namespace

PointCloud chaos_points(const TileSystem& ts, std::size_t count, std::uint64_t seed) {
  const AffineMaps maps(ts);
  std::mt19937_64 rng(seed);
  const auto m = static_cast<std::uint64_t>(ts.m());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ts.n));
  PointCloud cloud{ts.n, {}, "chaos", seed};
  cloud.points.reserve(count);
  for (std::size_t t = 0; t < kChaosBurnIn + count; ++t) {
    x = maps.apply(static_cast<int>(rng() % m) + 1, x);
    if (t >= kChaosBurnIn) cloud.points.push_back(to_std(x));
  }
  return cloud;
}

PointCloud subdivision_points(const TileSystem& ts, std::size_t depth) {
  const AffineMaps maps(ts);
  const int m = static_cast<int>(ts.m());
  PointCloud cloud{ts.n, {}, "subdivision", 0};
  Word w(depth, 1);
  while (true) {
    cloud.points.push_back(to_std(maps.apply_word(w, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ts.n)))));
    std::size_t pos = depth;
    while (pos > 0 && w[pos - 1] == m) w[--pos] = 1;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return cloud;
}

Address canonical_lasso(const NeighborGraph& g, std::size_t v) {
  if (v == NeighborGraph::kRoot) return Address({}, {1});
  const auto out = sorted_out(g);
  std::vector<std::size_t> path{v};
  Word labels;
  std::optional<Address> found;
  auto dfs = [&](auto&& self, std::size_t remaining) -> void {
    if (found) return;
    if (remaining == 0) return;
    for (const auto& [label, to] : out[path.back()]) {
      labels.push_back(label);
      const auto hit = std::find(path.begin(), path.end(), to);
      if (hit != path.end()) {
        if (remaining == 1) {
          const auto start = static_cast<std::size_t>(hit - path.begin());
          found = Address(Word(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(start)),
                          Word(labels.begin() + static_cast<std::ptrdiff_t>(start), labels.end()));
          return;
        }
      } else {
        path.push_back(to);
        self(self, remaining - 1);
        path.pop_back();
      }
      labels.pop_back();
      if (found) return;
    }
  };
  for (std::size_t len = 1; len <= g.size() && !found; ++len) dfs(dfs, len);
  if (!found) throw PreconditionError("vertex " + std::to_string(v) + " has no infinite path");
  return *found;
}

PointCloud boundary_points(const NeighborGraph& g, std::size_t k, std::size_t depth,
                           const BoundaryRenderParams& params) {
  if (k == NeighborGraph::kRoot || k >= g.size()) throw PreconditionError("boundary_points requires a non-root vertex");
  const TileSystem& ts = g.system();
  const AffineMaps maps(ts);
  const auto out = sorted_out(g);

  std::vector<std::optional<Eigen::VectorXd>> anchors(g.size());
  auto anchor = [&](std::size_t r) -> const Eigen::VectorXd& {
    if (!anchors[r]) {
      const std::size_t rep = std::min(r, g.negation(r));
      Eigen::VectorXd a = maps.address_point(canonical_lasso(g, rep));
      if (rep != r) {
        const auto shift = to_double(g.vector(rep));
        for (std::size_t i = 0; i < shift.size(); ++i) a(static_cast<Eigen::Index>(i)) -= shift[i];
      }
      anchors[r] = std::move(a);
    }
    return *anchors[r];
  };

  PointCloud cloud{ts.n, {}, "boundary(" + format_vector(g.vector(k)) + ")", 0};
  Word w;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (w.size() == depth) {
      if (cloud.points.size() >= params.max_points) throw CapExceeded("boundary points", params.max_points);
      cloud.points.push_back(to_std(maps.apply_word(w, anchor(v))));
      return;
    }
    for (const auto& [label, to] : out[v]) {
      w.push_back(label);
      self(self, to);
      w.pop_back();
    }
  };
  dfs(dfs, k);
  return cloud;
}

std::string to_csv(const PointCloud& cloud) {
  std::string s = "# seed=" + std::to_string(cloud.seed) + "\n";
  static const char* xyz[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < cloud.dimension; ++i) {
    if (i) s += ',';
    s += cloud.dimension <= 3 ? std::string(xyz[i]) : "x" + std::to_string(i + 1);
  }
  s += '\n';
  char buf[64];
  for (const auto& p : cloud.points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ',';
      const auto res = std::to_chars(buf, buf + sizeof buf, p[i]);
      s.append(buf, res.ptr);
    }
    s += '\n';
  }
  return s;
}

}  // namespace tiletopo
