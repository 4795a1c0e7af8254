#include "tiletopo/faces.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "tiletopo/errors.hpp"

namespace tiletopo {

const char* to_string(Containment c) {
  switch (c) {
    case Containment::kContained: return "contained";
    case Containment::kNotContained: return "not_contained";
    case Containment::kUndecided: return "undecided";
  }
  return "undecided";
}

bool sufficient_face_test(const NeighborGraph& g, std::size_t k) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{k};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t id : g.out_edges(v)) {
      const std::size_t w = g.edges()[id].to;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t w = 1; w < g.size(); ++w) {
    if (w == k) continue;
    if (!seen[w] && !seen[g.negation(w)]) return false;
  }
  return true;
}

std::vector<VertexSet> simulation_preorder(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count();
  const int m = g.label_count();
  std::vector<std::vector<bool>> has(n, std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
  for (const auto& e : g.edges()) has[e.from][static_cast<std::size_t>(e.label)] = true;
  std::vector<VertexSet> sim(n, VertexSet(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      bool ok = true;
      for (int i = 1; i <= m && ok; ++i) ok = !has[y][static_cast<std::size_t>(i)] || has[z][static_cast<std::size_t>(i)];
      if (ok) sim[y].insert(z);
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z : sim[y].elements()) {
        bool ok = true;
        for (std::size_t id : g.out_edges(y)) {
          const auto& e = g.edge(id);
          bool matched = false;
          for (std::size_t jd : g.out_edges(z)) {
            const auto& f = g.edge(jd);
            if (f.label == e.label && sim[e.to].contains(f.to)) {
              matched = true;
              break;
            }
          }
          if (!matched) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          sim[y].erase(z);
          changed = true;
        }
      }
  }
  return sim;
}

ContainmentResult language_containment(const LabeledDigraph& g, std::size_t u, const std::vector<std::size_t>& S,
                                       const ContainmentParams& params) {
  const std::size_t n = g.vertex_count();
  const int m = g.label_count();
  for (std::size_t v : S)
    if (v == u) throw std::invalid_argument("language_containment: u must not be in S");

  // succ[v * m + (i - 1)] = label-i successors of v
  std::vector<VertexSet> succ(n * static_cast<std::size_t>(m), VertexSet(n));
  for (const auto& e : g.edges()) succ[e.from * static_cast<std::size_t>(m) + static_cast<std::size_t>(e.label - 1)].insert(e.to);
  auto step = [&](const VertexSet& from, int i) {
    VertexSet out(n);
    from.for_each([&](std::size_t y) { out |= succ[y * static_cast<std::size_t>(m) + static_cast<std::size_t>(i - 1)]; });
    return out;
  };

  const std::vector<VertexSet> sim = simulation_preorder(g);
  // dominators[y]: z != y simulating y, strictly or with a smaller index.
  std::vector<VertexSet> dominators(n, VertexSet(n));
  for (std::size_t y = 0; y < n; ++y)
    sim[y].for_each([&](std::size_t z) {
      if (z != y && (!sim[z].contains(y) || z < y)) dominators[y].insert(z);
    });
  // Drops members of x simulated by some member of p and returns whether x is
  // left empty; drops members of p simulated by another member of p.
  auto covered = [&](VertexSet& x, VertexSet& p) {
    x.for_each([&](std::size_t y) {
      if (sim[y].intersects(p)) x.erase(y);
    });
    p.for_each([&](std::size_t y) {
      if (dominators[y].intersects(p)) p.erase(y);
    });
    return x.empty();
  };

  // meets[x] holds every y with L_x and L_y sharing an infinite word: the pair
  // (x, y) survives sink pruning in the product graph.
  std::vector<VertexSet> meets(n, VertexSet(n));
  {
    std::vector<std::size_t> out(n * n, 0);
    std::vector<std::vector<std::size_t>> preds(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (int i = 1; i <= m; ++i) {
          const auto& xs = succ[x * static_cast<std::size_t>(m) + static_cast<std::size_t>(i - 1)];
          const auto& ys = succ[y * static_cast<std::size_t>(m) + static_cast<std::size_t>(i - 1)];
          xs.for_each([&](std::size_t x2) {
            ys.for_each([&](std::size_t y2) {
              ++out[x * n + y];
              preds[x2 * n + y2].push_back(x * n + y);
            });
          });
        }
    std::vector<bool> dead(n * n, false);
    std::vector<std::size_t> stack;
    for (std::size_t q = 0; q < n * n; ++q)
      if (out[q] == 0) {
        dead[q] = true;
        stack.push_back(q);
      }
    while (!stack.empty()) {
      const std::size_t q = stack.back();
      stack.pop_back();
      for (std::size_t r : preds[q])
        if (!dead[r] && --out[r] == 0) {
          dead[r] = true;
          stack.push_back(r);
        }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!dead[x * n + y]) meets[x].insert(y);
  }
  // Members of p whose language misses every language in x are irrelevant.
  auto relevant = [&](const VertexSet& x, VertexSet& p) {
    VertexSet keep(n);
    x.for_each([&](std::size_t y) { keep |= meets[y]; });
    p &= keep;
  };

  // Shortest, then least, z readable from x and from no member of p. Requires
  // that x and p share no infinite word, so the search is finite.
  auto separate = [&](const VertexSet& x, const VertexSet& p) {
    if (p.empty()) return Word{};
    struct Node {
      VertexSet x, p;
      std::size_t parent;
      int label;
    };
    std::vector<Node> nodes{{x, p, SIZE_MAX, 0}};
    auto h = [&](std::size_t id) { return nodes[id].x.hash() * 1000003u ^ nodes[id].p.hash(); };
    auto eq = [&](std::size_t a, std::size_t b) { return nodes[a].x == nodes[b].x && nodes[a].p == nodes[b].p; };
    std::unordered_set<std::size_t, decltype(h), decltype(eq)> visited(64, h, eq);
    visited.insert(0);
    for (std::size_t id = 0; id < nodes.size(); ++id)
      for (int i = 1; i <= m; ++i) {
        VertexSet x2 = step(nodes[id].x, i);
        if (x2.empty()) continue;
        VertexSet p2 = step(nodes[id].p, i);
        if (p2.empty()) {
          Word z{i};
          for (std::size_t k = id; nodes[k].parent != SIZE_MAX; k = nodes[k].parent) z.push_back(nodes[k].label);
          std::reverse(z.begin(), z.end());
          return z;
        }
        nodes.push_back({std::move(x2), std::move(p2), id, i});
        if (!visited.insert(nodes.size() - 1).second) nodes.pop_back();
      }
    throw std::logic_error("language_containment: separating word not found");
  };

  struct State {
    VertexSet x;
    VertexSet p;
    std::size_t parent;
    int label;
  };
  std::vector<State> states;
  auto key_hash = [&](std::size_t id) { return states[id].x.hash() * 1000003u ^ states[id].p.hash(); };
  auto key_eq = [&](std::size_t a, std::size_t b) { return states[a].x == states[b].x && states[a].p == states[b].p; };
  std::unordered_set<std::size_t, decltype(key_hash), decltype(key_eq)> seen(1024, key_hash, key_eq);

  auto witness_of = [&](std::size_t id, int last) {
    Word w{last};
    while (states[id].parent != SIZE_MAX) {
      w.push_back(states[id].label);
      id = states[id].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  ContainmentResult res;
  VertexSet x0(n), p0(n);
  x0.insert(u);
  for (std::size_t v : S) p0.insert(v);
  const VertexSet p0_full = p0;
  relevant(x0, p0);
  if (p0.empty()) {
    res.status = Containment::kNotContained;
    res.witness = separate(x0, p0_full);
    return res;
  }
  if (covered(x0, p0)) {
    res.status = Containment::kContained;
    return res;
  }
  states.push_back({x0, p0, SIZE_MAX, 0});
  seen.insert(0);
  // Breadth-first in label order, so the first witness is shortest and then
  // lexicographically least.
  for (std::size_t id = 0; id < states.size(); ++id) {
    for (int i = 1; i <= m; ++i) {
      VertexSet x = step(states[id].x, i);
      if (x.empty()) continue;
      VertexSet p = step(states[id].p, i);
      relevant(x, p);
      if (p.empty()) {
        res.status = Containment::kNotContained;
        res.witness = witness_of(id, i);
        VertexSet raw = p0_full;
        for (int s : res.witness) raw = step(raw, s);
        const Word tail = separate(x, raw);
        res.witness.insert(res.witness.end(), tail.begin(), tail.end());
        res.states = states.size();
        return res;
      }
      if (covered(x, p)) continue;
      if (states.size() >= params.state_cap) {
        res.status = Containment::kUndecided;
        res.states = states.size();
        return res;
      }
      states.push_back({std::move(x), std::move(p), id, i});
      if (!seen.insert(states.size() - 1).second) states.pop_back();
    }
  }
  res.status = Containment::kContained;
  res.states = states.size();
  return res;
}

FaceTestResult exact_face_test(const NeighborGraph& g, std::size_t k, const ContainmentParams& params) {
  if (!check_tiling_existence(g).ok)
    throw PreconditionError("exact_face_test requires every neighbor to be compatible (tiling check failed)");
  std::vector<std::size_t> others;
  for (std::size_t v = 1; v < g.size(); ++v)
    if (v != k) others.push_back(v);
  const auto r = language_containment(g.digraph(), k, others, params);
  FaceTestResult out;
  out.states = r.states;
  if (r.status == Containment::kNotContained) {
    out.is_face = Tri::kYes;
    out.witness = r.witness;
  } else if (r.status == Containment::kContained) {
    out.is_face = Tri::kNo;
  }
  return out;
}

std::vector<std::size_t> dimension_face_filter(const TileSystem& ts, const NeighborGraph& g,
                                               const SCCDecomposition& scc, const ComponentDimensions& dims) {
  std::vector<std::size_t> out;
  const double threshold = static_cast<double>(ts.n) - 1.0;
  for (std::size_t v = 1; v < g.size(); ++v) {
    const double d = dims.effective[scc.component_of[v]];
    if (!std::isnan(d) && d < threshold - 1e-9) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> FaceReport::faces() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries)
    if (e.verdict == Tri::kYes) out.push_back(e.vertex);
  return out;
}

bool FaceReport::complete() const {
  return std::all_of(entries.begin(), entries.end(), [](const FaceEntry& e) { return e.verdict != Tri::kUndecided; });
}

bool FaceReport::consistent() const {
  for (const auto& e : entries) {
    if (e.sufficient && e.exact == Tri::kNo) return false;
    if (e.dimension_excluded && e.exact == Tri::kYes) return false;
  }
  return true;
}

FaceReport face_report(const NeighborGraph& g, const SCCDecomposition& scc, const ComponentDimensions& dims,
                       const FaceParams& params) {
  FaceReport rep;
  const auto excluded = dimension_face_filter(g.system(), g, scc, dims);
  const bool tiling = check_tiling_existence(g).ok;
  for (std::size_t v = 1; v < g.size(); ++v) {
    FaceEntry e;
    e.vertex = v;
    e.sufficient = sufficient_face_test(g, v);
    e.dimension = dims.effective[scc.component_of[v]];
    e.dimension_excluded = std::find(excluded.begin(), excluded.end(), v) != excluded.end();
    if (params.run_exact && tiling) {
      const auto r = exact_face_test(g, v, params.containment);
      e.exact = r.is_face;
      e.witness = r.witness;
      e.states = r.states;
    }
    if (e.exact != Tri::kUndecided) e.verdict = e.exact;
    else if (e.sufficient) e.verdict = Tri::kYes;
    else if (e.dimension_excluded) e.verdict = Tri::kNo;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool word_readable(const LabeledDigraph& g, std::size_t v, const Word& w) {
  VertexSet cur(g.vertex_count());
  cur.insert(v);
  for (int s : w) {
    VertexSet next(g.vertex_count());
    cur.for_each([&](std::size_t x) {
      for (std::size_t id : g.out_edges(x))
        if (g.edge(id).label == s) next.insert(g.edge(id).to);
    });
    if (next.empty()) return false;
    cur = std::move(next);
  }
  return true;
}

}  // namespace tiletopo
