#include "tiletopo/neighbor_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <sstream>

#include "tiletopo/errors.hpp"
#include "tiletopo/numeric.hpp"

namespace tiletopo {

namespace {

double norm_inf(const Eigen::MatrixXd& a) { return a.rowwise().lpNorm<1>().maxCoeff(); }

constexpr std::string_view kLetters = "abcdefghijkmnpqrstuvwxyz";

std::string letter(std::size_t index) {
  const std::size_t base = kLetters.size();
  std::string s(1, kLetters[index % base]);
  if (index >= base) s += std::to_string(index / base);
  return s;
}

}  // namespace

const char* to_string(BoundsMethod m) { return m == BoundsMethod::kSampled ? "sampled" : "rigorous"; }

BoundsMethod parse_bounds_method(const std::string& s) {
  if (s == "sampled") return BoundsMethod::kSampled;
  if (s == "rigorous") return BoundsMethod::kRigorous;
  throw std::invalid_argument("unknown bounds method: " + s);
}

bool BoundsBox::contains(const std::vector<double>& x, double slack) const {
  for (std::size_t q = 0; q < x.size(); ++q)
    if (x[q] < lower[q] - slack || x[q] > upper[q] + slack) return false;
  return true;
}

bool BoundsBox::contains(const BoundsBox& inner) const {
  for (std::size_t q = 0; q < lower.size(); ++q)
    if (inner.lower[q] < lower[q] || inner.upper[q] > upper[q]) return false;
  return true;
}

BoundsBox BoundsBox::inflated(double factor) const {
  BoundsBox r = *this;
  for (std::size_t q = 0; q < lower.size(); ++q) {
    const double pad = factor * (upper[q] - lower[q]) / 2.0;
    r.lower[q] -= pad;
    r.upper[q] += pad;
  }
  return r;
}

BoundsBox sampled_extrema(const TileSystem& ts, std::size_t samples, std::uint64_t seed) {
  const AffineMaps maps(ts);
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(ts.n);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int t = 0; t < 100; ++t) x = maps.apply(static_cast<int>(rng() % ts.m()) + 1, x);
  BoundsBox box;
  box.method = BoundsMethod::kSampled;
  box.seed = seed;
  box.lower.assign(ts.n, std::numeric_limits<double>::infinity());
  box.upper.assign(ts.n, -std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < samples; ++s) {
    x = maps.apply(static_cast<int>(rng() % ts.m()) + 1, x);
    for (Eigen::Index q = 0; q < n; ++q) {
      box.lower[static_cast<std::size_t>(q)] = std::min(box.lower[static_cast<std::size_t>(q)], x(q));
      box.upper[static_cast<std::size_t>(q)] = std::max(box.upper[static_cast<std::size_t>(q)], x(q));
    }
  }
  return box;
}

BoundsBox attractor_bounds(const TileSystem& ts, BoundsMethod method, const BoundsParams& params) {
  if (method == BoundsMethod::kSampled) return sampled_extrema(ts, params.samples, params.seed).inflated(params.inflation);

  const AffineMaps maps(ts);
  const auto n = static_cast<Eigen::Index>(ts.n);
  const Eigen::MatrixXd& inv = maps.inverse();

  // p with ||M^{-p}|| <= 1/2 gives ||x|| <= 2 * R * sum_{t<=p} ||M^{-t}|| on T.
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double partial = 0.0;
  std::size_t p = 0;
  do {
    power = inv * power;
    partial += norm_inf(power);
    ++p;
    if (p > params.max_depth) throw NumericalError("no power of M^{-1} with norm <= 1/2 found; raise max_depth");
  } while (norm_inf(power) > 0.5);
  double radius = 0.0;
  for (const auto& k : ts.digits)
    for (const auto& e : k) radius = std::max(radius, std::abs(e.convert_to<double>()));
  const double rho = 2.0 * partial * radius;

  std::vector<Eigen::VectorXd> digits;
  for (const auto& k : ts.digits) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = k[static_cast<std::size_t>(i)].convert_to<double>();
    digits.push_back(v);
  }
  Eigen::VectorXd lo = Eigen::VectorXd::Zero(n), hi = Eigen::VectorXd::Zero(n);
  power = Eigen::MatrixXd::Identity(n, n);
  double tail = rho;
  for (std::size_t t = 1; t <= params.max_depth; ++t) {
    power = inv * power;
    Eigen::VectorXd tmin = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
    Eigen::VectorXd tmax = -tmin;
    for (const auto& k : digits) {
      const Eigen::VectorXd v = power * k;
      tmin = tmin.cwiseMin(v);
      tmax = tmax.cwiseMax(v);
    }
    lo += tmin;
    hi += tmax;
    tail = norm_inf(power) * rho;
    if (tail < params.tail_tolerance) break;
  }
  if (tail >= params.tail_tolerance && tail > 1e-6) throw NumericalError("tail bound did not converge");

  BoundsBox box;
  box.method = BoundsMethod::kRigorous;
  for (Eigen::Index q = 0; q < n; ++q) {
    const double slack = tail + 1e-9 * (1.0 + std::abs(lo(q)) + std::abs(hi(q)));
    box.lower.push_back(lo(q) - slack);
    box.upper.push_back(hi(q) + slack);
  }
  return box;
}

std::optional<std::size_t> NeighborGraph::find(const IntVector& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> NeighborGraph::step(std::size_t v, int i, int j) const {
  if (v == kRoot && i == j) return kRoot;
  for (std::size_t id : out_[v]) {
    const auto& e = edges_[id];
    if (e.label == i && e.partner == j) return e.to;
  }
  return std::nullopt;
}

void NeighborGraph::index_edges() {
  out_.assign(vectors_.size(), {});
  in_.assign(vectors_.size(), {});
  digraph_ = LabeledDigraph(vectors_.size(), static_cast<int>(ts_.m()));
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    out_[edges_[id].from].push_back(id);
    in_[edges_[id].to].push_back(id);
    digraph_.add_edge(edges_[id].from, edges_[id].to, edges_[id].label);
  }
}

NeighborGraph build_neighbor_graph(const TileSystem& ts, const BoundsBox& bounds, const GraphParams& params) {
  const std::size_t n = ts.n;
  const int m = static_cast<int>(ts.m());
  std::vector<double> width(n);
  for (std::size_t q = 0; q < n; ++q) width[q] = bounds.upper[q] - bounds.lower[q];
  auto admissible = [&](const IntVector& k) {
    for (std::size_t q = 0; q < n; ++q) {
      const double c = std::abs(k[q].convert_to<double>());
      if (c > width[q]) return false;
    }
    return true;
  };

  struct RawEdge {
    std::size_t from, to;
    int label, partner;
  };
  std::vector<IntVector> cand;
  std::map<IntVector, std::size_t> index;
  std::vector<RawEdge> raw;
  std::deque<std::size_t> queue;

  IntVector zero(n, BigInt(0));
  cand.push_back(zero);
  index[zero] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const IntVector mk = ts.M.apply(cand[u]);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (u == 0 && i == j) continue;
        IntVector k = add(mk, subtract(ts.digit(j), ts.digit(i)));
        if (!admissible(k)) continue;
        auto [it, inserted] = index.try_emplace(k, cand.size());
        if (inserted) {
          if (cand.size() >= params.max_vertices) throw CapExceeded("neighbor graph vertex guard", params.max_vertices);
          cand.push_back(std::move(k));
          queue.push_back(cand.size() - 1);
        }
        raw.push_back({u, it->second, i, j});
      }
  }

  LabeledDigraph full(cand.size(), m);
  for (const auto& e : raw) full.add_edge(e.from, e.to, e.label);
  std::vector<bool> keep(cand.size(), false);
  keep[0] = true;
  const std::vector<bool> alive = prune_sinks(full, keep);

  NeighborGraph g;
  g.ts_ = ts;
  g.candidates_ = cand.size();
  std::vector<std::size_t> renum(cand.size(), SIZE_MAX);
  for (std::size_t v = 0; v < cand.size(); ++v) {
    if (!alive[v]) continue;
    renum[v] = g.vectors_.size();
    g.index_[cand[v]] = g.vectors_.size();
    g.vectors_.push_back(cand[v]);
  }
  for (const auto& e : raw)
    if (alive[e.from] && alive[e.to]) g.edges_.push_back({renum[e.from], renum[e.to], e.label, e.partner});
  g.negation_.resize(g.vectors_.size());
  for (std::size_t v = 0; v < g.vectors_.size(); ++v) {
    auto it = g.index_.find(negate(g.vectors_[v]));
    g.negation_[v] = it == g.index_.end() ? SIZE_MAX : it->second;
  }
  g.index_edges();
  return g;
}

NeighborEdge opposite_edge(const NeighborGraph& g, const NeighborEdge& e) {
  const auto& out = g.out_edges(e.from);
  const bool present = std::any_of(out.begin(), out.end(), [&](std::size_t id) { return g.edges()[id] == e; });
  if (!present) throw std::invalid_argument("opposite_edge: edge not in graph");
  const std::size_t nf = g.negation(e.from), nt = g.negation(e.to);
  for (std::size_t id : g.out_edges(nf)) {
    const auto& o = g.edges()[id];
    if (o.to == nt && o.label == e.partner && o.partner == e.label) return o;
  }
  throw std::logic_error("opposite_edge: graph is not closed under negation");
}

TilingCheck check_tiling_existence(const NeighborGraph& g) {
  TilingCheck out;
  const int m = static_cast<int>(g.system().m());
  for (std::size_t v = 1; v < g.size(); ++v) {
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (std::size_t id : g.in_edges(v)) seen[static_cast<std::size_t>(g.edges()[id].label)] = true;
    for (int j = 1; j <= m; ++j)
      if (!seen[static_cast<std::size_t>(j)]) out.missing.emplace_back(v, j);
  }
  out.ok = out.missing.empty();
  return out;
}

bool check_osc_flag(const NeighborGraph& g) { return g.in_edges(NeighborGraph::kRoot).empty(); }

std::optional<IntVector> piece_relation(const NeighborGraph& g, const Word& p, const Word& q) {
  if (p.size() != q.size()) throw std::invalid_argument("piece_relation: words differ in length");
  const TileSystem& ts = g.system();
  IntVector v(ts.n, BigInt(0));
  for (std::size_t t = 0; t < p.size(); ++t) v = add(ts.M.apply(v), subtract(ts.digit(q[t]), ts.digit(p[t])));
  if (is_zero(v) || g.find(v)) return v;
  return std::nullopt;
}

std::vector<std::string> letter_names(const NeighborGraph& g, const std::vector<int>& tier) {
  std::vector<std::size_t> reps;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t v = 1; v < g.size(); ++v) {
    if (seen[v]) continue;
    seen[v] = true;
    if (g.negation(v) != SIZE_MAX) seen[g.negation(v)] = true;
    reps.push_back(v);
  }
  std::stable_sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) { return tier[a] < tier[b]; });
  std::vector<std::string> names(g.size());
  names[0] = "0";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    names[reps[i]] = letter(i);
    if (g.negation(reps[i]) != SIZE_MAX && g.negation(reps[i]) != reps[i]) names[g.negation(reps[i])] = "-" + letter(i);
  }
  return names;
}

std::string to_dot(const NeighborGraph& g, const DotOptions& options) {
  auto node = [&](std::size_t v) { return v == 0 ? std::string("0") : "k=" + format_vector(g.vector(v)); };
  // Representative of each +-pair is whichever member was discovered first.
  auto rep = [&](std::size_t v) { return v == 0 ? v : std::min(v, g.negation(v)); };

  std::ostringstream out;
  out << "digraph neighbor_graph {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (options.reduced && rep(v) != v) continue;
    out << "  \"" << node(v) << "\"";
    if (options.names) out << " [xlabel=\"" << (*options.names)[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    if (options.reduced && rep(e.from) != e.from) continue;
    const std::size_t to = options.reduced ? rep(e.to) : e.to;
    out << "  \"" << node(e.from) << "\" -> \"" << node(to) << "\" [label=" << e.label;
    if (options.reduced && to != e.to) out << ", opp=true";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tiletopo
