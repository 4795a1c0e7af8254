#include "tiletopo/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "tiletopo/errors.hpp"

namespace tiletopo {

namespace {

constexpr std::size_t kMatrixCrossCheckLimit = 2000;

// Iterative Tarjan; returns component index per vertex (unordered).
std::vector<std::size_t> tarjan(const LabeledDigraph& g, const std::vector<bool>& include, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, kNoComponent);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  count = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge_pos;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!include[root] || index[root] != SIZE_MAX) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& out = g.out_edges(f.v);
      if (f.edge_pos < out.size()) {
        const std::size_t w = g.edge(out[f.edge_pos++]).to;
        if (!include[w]) continue;
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return comp;
}

}  // namespace

bool SCCDecomposition::precedes(std::size_t u, std::size_t v) const {
  const std::size_t cu = component_of[u], cv = component_of[v];
  if (cu == kNoComponent || cv == kNoComponent) return false;
  if (cu == cv) return is_cyclic(cu);
  return reaches[cu][cv];
}

AdjacencyMatrix adjacency_matrix(const LabeledDigraph& g, const std::vector<std::size_t>& vertices, int label) {
  AdjacencyMatrix h;
  h.vertices = vertices;
  h.entries.assign(vertices.size() * vertices.size(), 0);
  std::vector<std::size_t> row(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) row[vertices[i]] = i;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t id : g.out_edges(vertices[i])) {
      const auto& e = g.edge(id);
      if (row[e.to] == SIZE_MAX || (label != 0 && e.label != label)) continue;
      ++h(i, row[e.to]);
    }
  return h;
}

std::vector<std::vector<bool>> reachability_by_matrix(const AdjacencyMatrix& h) {
  const std::size_t n = h.size();
  std::vector<VertexSet> r(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j) > 0) r[i].insert(j);
  // R <- min(1, R + R*R) until stable; covers H + ... + H^q after log2(q) rounds.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<VertexSet> next = r;
    for (std::size_t i = 0; i < n; ++i) {
      r[i].for_each([&](std::size_t k) { next[i] |= r[k]; });
      changed = changed || !(next[i] == r[i]);
    }
    r = std::move(next);
  }
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i].for_each([&](std::size_t j) { out[i][j] = true; });
  return out;
}

std::vector<std::vector<bool>> reachability_by_search(const LabeledDigraph& g, const std::vector<std::size_t>& vertices) {
  const std::size_t n = vertices.size();
  std::vector<std::size_t> row(g.vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) row[vertices[i]] = i;
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack;
    for (std::size_t id : g.out_edges(vertices[s])) {
      const std::size_t w = row[g.edge(id).to];
      if (w != SIZE_MAX && !r[s][w]) {
        r[s][w] = true;
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t id : g.out_edges(vertices[u])) {
        const std::size_t w = row[g.edge(id).to];
        if (w != SIZE_MAX && !r[s][w]) {
          r[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

SCCDecomposition strong_components(const LabeledDigraph& g, const std::vector<bool>& include) {
  std::size_t count = 0;
  const std::vector<std::size_t> raw = tarjan(g, include, count);
  std::vector<std::vector<std::size_t>> groups(count);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (raw[v] != kNoComponent) groups[raw[v]].push_back(v);
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SCCDecomposition d;
  d.components = std::move(groups);
  d.component_of.assign(g.vertex_count(), kNoComponent);
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (std::size_t v : d.components[c]) d.component_of[v] = c;
  const std::size_t nc = d.components.size();
  d.internal_edges.assign(nc, 0);
  std::vector<std::set<std::size_t>> succ(nc);
  for (const auto& e : g.edges()) {
    const std::size_t a = d.component_of[e.from], b = d.component_of[e.to];
    if (a == kNoComponent || b == kNoComponent) continue;
    if (a == b) ++d.internal_edges[a];
    else succ[a].insert(b);
  }
  d.dag_successors.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) d.dag_successors[c].assign(succ[c].begin(), succ[c].end());

  d.reaches.assign(nc, std::vector<bool>(nc, false));
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<std::size_t> stack{c};
    d.reaches[c][c] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : d.dag_successors[x])
        if (!d.reaches[c][y]) {
          d.reaches[c][y] = true;
          stack.push_back(y);
        }
    }
  }

  std::vector<std::size_t> verts;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (include[v]) verts.push_back(v);
  if (verts.size() > kMatrixCrossCheckLimit) return d;
  const auto by_matrix = reachability_by_matrix(adjacency_matrix(g, verts));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (by_matrix[i][j] != d.precedes(verts[i], verts[j]))
        throw std::logic_error("strong_components: matrix and search reachability disagree");
  return d;
}

SCCDecomposition strong_components(const NeighborGraph& g) {
  std::vector<bool> include(g.size(), true);
  include[NeighborGraph::kRoot] = false;
  return strong_components(g.digraph(), include);
}

const char* to_string(Cardinality c) {
  switch (c) {
    case Cardinality::kSingleton: return "singleton";
    case Cardinality::kFinite: return "finite";
    case Cardinality::kCountablyInfinite: return "countably_infinite";
    case Cardinality::kUncountable: return "uncountable";
  }
  return "uncountable";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::kYes: return "yes";
    case Tri::kNo: return "no";
    case Tri::kUndecided: return "undecided";
  }
  return "undecided";
}

std::vector<std::size_t> BoundaryClassification::with(Cardinality c) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (scc.component_of[v] != kNoComponent && vertices[v].cardinality == c) out.push_back(v);
  return out;
}

BoundaryClassification classify_cardinality(const LabeledDigraph& g, const std::vector<bool>& include) {
  BoundaryClassification bc;
  bc.scc = strong_components(g, include);
  const auto& d = bc.scc;
  const std::size_t nc = d.components.size();

  std::vector<bool> rich(nc), rich_reach(nc, false);
  for (std::size_t c = 0; c < nc; ++c) rich[c] = d.internal_edges[c] > d.components[c].size();
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t e = 0; e < nc && !rich_reach[c]; ++e) rich_reach[c] = d.reaches[c][e] && rich[e];

  // Infinite path count per component; nullopt means infinitely many.
  std::vector<std::optional<BigInt>> paths(nc);
  std::vector<bool> done(nc, false);
  auto solve = [&](auto&& self, std::size_t c) -> void {
    if (done[c]) return;
    for (std::size_t s : d.dag_successors[c]) self(self, s);
    if (rich_reach[c]) {
      paths[c] = std::nullopt;
    } else if (d.is_cyclic(c)) {
      paths[c] = d.dag_successors[c].empty() ? std::optional<BigInt>(1) : std::nullopt;
    } else {
      BigInt sum = 0;
      bool infinite = false;
      for (std::size_t id : g.out_edges(d.components[c].front())) {
        const std::size_t t = d.component_of[g.edge(id).to];
        if (t == kNoComponent) continue;
        if (!paths[t]) infinite = true;
        else sum += *paths[t];
      }
      paths[c] = infinite ? std::nullopt : std::optional<BigInt>(sum);
    }
    done[c] = true;
  };
  for (std::size_t c = 0; c < nc; ++c) solve(solve, c);

  bc.vertices.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t c = d.component_of[v];
    if (c == kNoComponent) continue;
    auto& vc = bc.vertices[v];
    vc.scc = c;
    if (rich_reach[c]) {
      vc.cardinality = Cardinality::kUncountable;
    } else if (!paths[c]) {
      vc.cardinality = Cardinality::kCountablyInfinite;
    } else {
      vc.paths = *paths[c];
      vc.cardinality = vc.paths == 1 ? Cardinality::kSingleton : Cardinality::kFinite;
    }
  }
  return bc;
}

BoundaryClassification classify_cardinality(const NeighborGraph& g) {
  std::vector<bool> include(g.size(), true);
  include[NeighborGraph::kRoot] = false;
  return classify_cardinality(g.digraph(), include);
}

std::vector<std::size_t> point_neighbor_matrix_test(const AdjacencyMatrix& h, std::size_t q) {
  const std::size_t n = h.size();
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < n; ++r) {
    // Row r of H^t, stopped at the first power whose row sum differs from 1.
    std::vector<std::int64_t> row(n, 0);
    row[r] = 1;
    bool ok = true;
    for (std::size_t t = 1; t <= q && ok; ++t) {
      std::vector<std::int64_t> next(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (!row[i]) continue;
        for (std::size_t j = 0; j < n; ++j) next[j] += row[i] * h(i, j);
      }
      std::int64_t sum = 0;
      for (auto x : next) sum += x;
      ok = sum == 1;
      row = std::move(next);
    }
    if (ok) out.push_back(h.vertices[r]);
  }
  return out;
}

std::vector<std::size_t> point_neighbor_matrix_test(const NeighborGraph& g) {
  std::vector<std::size_t> verts;
  for (std::size_t v = 1; v < g.size(); ++v) verts.push_back(v);
  return point_neighbor_matrix_test(adjacency_matrix(g.digraph(), verts), verts.size());
}

std::vector<EquationTerm> boundary_equation(const NeighborGraph& g, std::size_t k) {
  if (k == NeighborGraph::kRoot) throw std::invalid_argument("boundary_equation: root has no boundary set");
  std::vector<EquationTerm> terms;
  for (std::size_t id : g.out_edges(k)) {
    const auto& e = g.edges()[id];
    EquationTerm t{{e.label}, e.to};
    if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
  }
  return terms;
}

EquationSystem::EquationSystem(const NeighborGraph& g, const std::vector<bool>& keep) : eq_(g.size()) {
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (!keep[k]) continue;
    std::vector<EquationTerm> terms;
    for (auto& t : boundary_equation(g, k))
      if (keep[t.target]) terms.push_back(t);
    eq_[k] = std::move(terms);
  }
}

bool EquationSystem::has(std::size_t k) const { return k < eq_.size() && eq_[k].has_value(); }

const std::vector<EquationTerm>& EquationSystem::terms(std::size_t k) const {
  if (!has(k)) throw std::invalid_argument("EquationSystem: no equation for vertex");
  return *eq_[k];
}

void EquationSystem::eliminate(std::size_t x) {
  const std::vector<EquationTerm> sub = terms(x);
  for (const auto& t : sub)
    if (t.target == x) throw std::invalid_argument("EquationSystem::eliminate: equation refers to itself");
  eq_[x].reset();
  for (auto& e : eq_) {
    if (!e) continue;
    std::vector<EquationTerm> next;
    for (const auto& t : *e) {
      if (t.target != x) {
        next.push_back(t);
        continue;
      }
      for (const auto& s : sub) next.push_back({concat(t.word, s.word), s.target});
    }
    std::vector<EquationTerm> unique;
    for (auto& t : next)
      if (std::find(unique.begin(), unique.end(), t) == unique.end()) unique.push_back(std::move(t));
    *e = std::move(unique);
  }
}

std::string EquationSystem::format(std::size_t k, const std::vector<std::string>& names) const {
  std::string s = "B_" + names[k] + " =";
  const auto& ts = terms(k);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    s += i ? " U " : " ";
    s += "f_" + format_word(ts[i].word) + "(B_" + names[ts[i].target] + ")";
  }
  return s;
}

double largest_real_root(const std::vector<BigInt>& poly, double upper) {
  std::vector<long double> c;
  for (const auto& x : poly) c.push_back(x.convert_to<long double>());
  auto eval = [&](long double x) {
    long double acc = 0;
    for (auto a : c) acc = acc * x + a;
    return acc;
  };
  const int steps = 20000;
  long double hi = static_cast<long double>(upper) + 1e-9L;
  long double fhi = eval(hi);
  if (fhi == 0) return static_cast<double>(hi);
  const long double h = hi / steps;
  for (int s = steps - 1; s >= 0; --s) {
    const long double lo = h * s;
    const long double flo = eval(lo);
    if (flo == 0) return static_cast<double>(lo);
    if ((flo < 0) != (fhi < 0)) {
      long double a = lo, b = hi, fa = flo;
      for (int it = 0; it < 200 && b - a > 0; ++it) {
        const long double mid = (a + b) / 2;
        const long double fm = eval(mid);
        if (fm == 0) return static_cast<double>(mid);
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return static_cast<double>((a + b) / 2);
    }
    hi = lo;
    fhi = flo;
  }
  return 0.0;
}

PerronResult perron_root(const AdjacencyMatrix& h, const PerronParams& params) {
  const std::size_t n = h.size();
  PerronResult res;
  bool any = false;
  for (auto x : h.entries) any = any || x != 0;
  if (n == 0 || !any) {
    res.method = "trivial";
    res.converged = true;
    return res;
  }

  auto power = [&](bool shifted, std::size_t& iters, bool& ok) {
    std::vector<double> x(n, 1.0), y(n);
    ok = false;
    double estimate = 0.0;
    for (iters = 1; iters <= params.max_iterations; ++iters) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0, top = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double s = shifted ? x[i] : 0.0;
        for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(h(i, j)) * x[j];
        y[i] = s;
        lo = std::min(lo, s / x[i]);
        hi = std::max(hi, s / x[i]);
        top = std::max(top, s);
      }
      estimate = (lo + hi) / 2.0;
      if (lo > 0 && hi - lo <= params.tolerance * hi) {
        ok = true;
        break;
      }
      if (top == 0.0) break;
      for (std::size_t i = 0; i < n; ++i) x[i] = std::max(y[i] / top, 1e-300);
    }
    return shifted ? estimate - 1.0 : estimate;
  };

  std::size_t iters = 0;
  bool ok = false;
  const double pv = power(false, iters, ok);
  res.iterations = iters;
  if (ok) res.power_value = pv;

  if (n <= params.exact_max_size) {
    IntMatrix m(n);
    double row_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double rs = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = h(i, j);
        rs += static_cast<double>(h(i, j));
      }
      row_max = std::max(row_max, rs);
    }
    res.exact_value = largest_real_root(characteristic_polynomial(m), row_max);
  }

  if (res.power_value && res.exact_value) {
    if (std::abs(*res.power_value - *res.exact_value) > 1e-9 * std::max(1.0, *res.exact_value))
      throw NumericalError("perron_root: power iteration and characteristic polynomial disagree");
    res.value = *res.exact_value;
    res.method = "power+exact";
    res.converged = true;
  } else if (res.power_value) {
    res.value = *res.power_value;
    res.method = "power";
    res.converged = true;
  } else if (res.exact_value) {
    res.value = *res.exact_value;
    res.method = "exact";
    res.converged = true;
  } else {
    std::size_t it2 = 0;
    bool ok2 = false;
    const double sv = power(true, it2, ok2);
    res.iterations += it2;
    if (!ok2) {
      throw NumericalError("perron_root: no convergence after " + std::to_string(res.iterations) + " iterations");
    }
    res.value = sv;
    res.power_value = sv;
    res.method = "shifted-power";
    res.converged = true;
  }
  return res;
}

PerronResult perron_root(const LabeledDigraph& g, const std::vector<std::size_t>& component,
                         const PerronParams& params) {
  return perron_root(adjacency_matrix(g, component), params);
}

double modified_dimension(const TileSystem& ts, double lambda) {
  if (lambda < 1.0 - 1e-12) throw std::domain_error("modified_dimension: lambda < 1");
  return static_cast<double>(ts.n) * std::log(std::max(lambda, 1.0)) / std::log(static_cast<double>(ts.m()));
}

std::optional<double> hausdorff_dimension_selfsimilar(const TileSystem& ts, const SpectrumReport& spec,
                                                      double lambda) {
  if (!spec.is_selfsimilar_conjugate) return std::nullopt;
  return modified_dimension(ts, lambda);
}

ComponentDimensions component_dimensions(const TileSystem& ts, const LabeledDigraph& g, const SCCDecomposition& scc,
                                         const PerronParams& params) {
  ComponentDimensions out;
  const std::size_t nc = scc.components.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t c = 0; c < nc; ++c) {
    out.perron.push_back(perron_root(g, scc.components[c], params));
    out.own.push_back(scc.is_cyclic(c) ? modified_dimension(ts, out.perron.back().value) : nan);
  }
  out.effective.assign(nc, nan);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t d = 0; d < nc; ++d) {
      if (!scc.reaches[c][d] || std::isnan(out.own[d])) continue;
      if (std::isnan(out.effective[c]) || out.own[d] > out.effective[c]) out.effective[c] = out.own[d];
    }
  return out;
}

}  // namespace tiletopo
