#include "tiletopo/intersections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "tiletopo/errors.hpp"

namespace tiletopo {

namespace {

std::uint64_t pack(const std::vector<std::size_t>& set) {
  std::uint64_t key = 0;
  for (std::size_t v : set) key = (key << 21) | static_cast<std::uint64_t>(v + 1);
  return key;
}

double binomial(std::size_t n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - static_cast<std::size_t>(i)) / (i + 1);
  return r;
}

}  // namespace

std::optional<std::size_t> IntersectionGraph::find(std::vector<std::size_t> set) const {
  std::sort(set.begin(), set.end());
  auto it = std::lower_bound(sets_.begin(), sets_.end(), set);
  if (it == sets_.end() || *it != set) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

IntersectionGraph build_intersection_graph(const NeighborGraph& g, int level, const std::vector<std::size_t>& allowed,
                                           const IntersectionParams& params) {
  if (level != 2 && level != 3) throw std::invalid_argument("build_intersection_graph: level must be 2 or 3");
  std::vector<std::size_t> verts = allowed;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (std::size_t v : verts)
    if (v == NeighborGraph::kRoot || v >= g.size())
      throw std::invalid_argument("build_intersection_graph: allowed vertices must be non-root vertices");
  if (binomial(verts.size(), level) > static_cast<double>(params.max_candidates))
    throw CapExceeded("intersection graph candidates", params.max_candidates);

  std::vector<bool> in_set(g.size(), false);
  for (std::size_t v : verts) in_set[v] = true;
  const int m = static_cast<int>(g.system().m());
  std::vector<std::vector<std::vector<std::size_t>>> succ(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    succ[static_cast<std::size_t>(i - 1)].assign(g.size(), {});
    for (const auto& e : g.edges())
      if (e.label == i && in_set[e.from] && in_set[e.to]) succ[static_cast<std::size_t>(i - 1)][e.from].push_back(e.to);
  }

  // Candidates in lexicographic order.
  std::vector<std::vector<std::size_t>> cand;
  const std::size_t u = verts.size();
  if (level == 2) {
    for (std::size_t a = 0; a < u; ++a)
      for (std::size_t b = a + 1; b < u; ++b) cand.push_back({verts[a], verts[b]});
  } else {
    for (std::size_t a = 0; a < u; ++a)
      for (std::size_t b = a + 1; b < u; ++b)
        for (std::size_t c = b + 1; c < u; ++c) cand.push_back({verts[a], verts[b], verts[c]});
  }
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(cand.size() * 2);
  for (std::size_t id = 0; id < cand.size(); ++id) index.emplace(pack(cand[id]), id);

  LabeledDigraph full(cand.size(), m);
  std::vector<IntersectionEdge> all_edges;
  std::vector<std::size_t> choice(static_cast<std::size_t>(level));
  for (std::size_t id = 0; id < cand.size(); ++id) {
    const auto& set = cand[id];
    for (int i = 1; i <= m; ++i) {
      const auto& s = succ[static_cast<std::size_t>(i - 1)];
      std::set<std::size_t> targets;
      std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == set.size()) {
          std::vector<std::size_t> image(choice.begin(), choice.end());
          std::sort(image.begin(), image.end());
          auto it = index.find(pack(image));
          if (it == index.end() || !targets.insert(it->second).second) return;
          IntersectionEdge e;
          e.from = id;
          e.to = it->second;
          e.label = i;
          for (std::size_t x : choice)
            e.phi.push_back(static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), x) - image.begin()));
          all_edges.push_back(std::move(e));
          full.add_edge(id, it->second, i);
          return;
        }
        for (std::size_t x : s[set[r]]) {
          if (std::find(choice.begin(), choice.begin() + static_cast<std::ptrdiff_t>(r), x) !=
              choice.begin() + static_cast<std::ptrdiff_t>(r))
            continue;
          choice[r] = x;
          rec(r + 1);
        }
      };
      rec(0);
    }
  }

  const auto alive = prune_sinks(full, std::vector<bool>(cand.size(), false));
  std::vector<std::size_t> renum(cand.size(), SIZE_MAX);
  IntersectionGraph out;
  out.level_ = level;
  for (std::size_t id = 0; id < cand.size(); ++id)
    if (alive[id]) {
      renum[id] = out.sets_.size();
      out.sets_.push_back(cand[id]);
    }
  out.digraph_ = LabeledDigraph(out.sets_.size(), m);
  for (auto& e : all_edges) {
    if (!alive[e.from] || !alive[e.to]) continue;
    e.from = renum[e.from];
    e.to = renum[e.to];
    out.digraph_.add_edge(e.from, e.to, e.label);
    out.edges_.push_back(std::move(e));
  }
  return out;
}

IntersectionGraph build_intersection_graph(const NeighborGraph& g, int level, const IntersectionParams& params) {
  std::vector<std::size_t> verts;
  for (std::size_t v = 1; v < g.size(); ++v) verts.push_back(v);
  return build_intersection_graph(g, level, verts, params);
}

std::vector<Address> path_addresses(const LabeledDigraph& g, std::size_t v) {
  std::set<Address> found;
  std::vector<std::size_t> path{v};
  Word labels;
  constexpr std::size_t kMaxAddresses = 100000;
  std::function<void()> rec = [&]() {
    for (std::size_t id : g.out_edges(path.back())) {
      const auto& e = g.edge(id);
      auto it = std::find(path.begin(), path.end(), e.to);
      labels.push_back(e.label);
      if (it != path.end()) {
        const auto t = static_cast<std::size_t>(it - path.begin());
        found.insert(Address(Word(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(t)),
                             Word(labels.begin() + static_cast<std::ptrdiff_t>(t), labels.end())));
        if (found.size() > kMaxAddresses) throw CapExceeded("path addresses", kMaxAddresses);
      } else {
        path.push_back(e.to);
        rec();
        path.pop_back();
      }
      labels.pop_back();
    }
  };
  rec();
  return {found.begin(), found.end()};
}

std::vector<IntersectionClass> classify_intersections(const IntersectionGraph& gl, const TileSystem& ts) {
  std::vector<bool> include(gl.size(), true);
  const auto bc = classify_cardinality(gl.digraph(), include);
  const auto dims = component_dimensions(ts, gl.digraph(), bc.scc);
  std::vector<IntersectionClass> out;
  for (std::size_t v = 0; v < gl.size(); ++v) {
    IntersectionClass c;
    c.vertex = v;
    c.cardinality = bc.vertices[v].cardinality;
    c.paths = bc.vertices[v].paths;
    c.dimension = dims.effective[bc.scc.component_of[v]];
    if (c.cardinality == Cardinality::kSingleton || c.cardinality == Cardinality::kFinite) {
      c.addresses = path_addresses(gl.digraph(), v);
      c.dimension = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<OnePoint> one_point_intersections(const IntersectionGraph& gl) {
  std::vector<bool> include(gl.size(), true);
  const auto bc = classify_cardinality(gl.digraph(), include);
  std::vector<OnePoint> out;
  for (std::size_t v = 0; v < gl.size(); ++v)
    if (bc.vertices[v].cardinality == Cardinality::kSingleton) out.push_back({v, path_addresses(gl.digraph(), v).front()});
  return out;
}

bool address_membership(const NeighborGraph& g, const Address& s, std::size_t k) {
  const int m = static_cast<int>(g.system().m());
  std::vector<std::vector<VertexSet>> succ(static_cast<std::size_t>(m) + 1, std::vector<VertexSet>(g.size(), VertexSet(g.size())));
  for (int i = 1; i <= m; ++i) succ[static_cast<std::size_t>(i)][NeighborGraph::kRoot].insert(NeighborGraph::kRoot);
  for (const auto& e : g.edges()) succ[static_cast<std::size_t>(e.label)][e.from].insert(e.to);

  VertexSet cur(g.size());
  cur.insert(k);
  const std::size_t pre = s.preperiod().size();
  const std::size_t per = s.period().size();
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  for (std::size_t n = 0;; ++n) {
    if (n >= pre && !seen.insert({(n - pre) % per, cur.elements()}).second) return true;
    VertexSet next(g.size());
    const int label = s.at(n);
    cur.for_each([&](std::size_t x) { next |= succ[static_cast<std::size_t>(label)][x]; });
    if (next.empty()) return false;
    cur = std::move(next);
  }
}

bool addresses_equivalent(const NeighborGraph& g, const Address& s, const Address& t) {
  const std::size_t start = std::max(s.preperiod().size(), t.preperiod().size());
  const std::size_t period = std::lcm(s.period().size(), t.period().size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t v = NeighborGraph::kRoot;
  for (std::size_t n = 0;; ++n) {
    if (n >= start && !seen.insert({v, (n - start) % period}).second) return true;
    const auto next = g.step(v, s.at(n), t.at(n));
    if (!next) return false;
    v = *next;
  }
}

std::optional<Address> center_address(const NeighborGraph& g) {
  if (g.system().m() != 2) throw PreconditionError("center_address requires m = 2");
  const std::size_t n = g.size();
  LabeledDigraph single(n, 2);
  for (const auto& e : g.edges())
    if (e.label != e.partner) single.add_edge(e.from, e.to, e.label);
  const auto alive = prune_sinks(single, std::vector<bool>(n, false));
  if (!alive[NeighborGraph::kRoot]) return std::nullopt;
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  for (const auto& e : single.edges())
    if (alive[e.from] && alive[e.to]) adj[e.from].push_back({e.label, e.to});
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::size_t> path{NeighborGraph::kRoot};
  Word labels;
  std::optional<Address> found;
  std::function<void(std::size_t)> rec = [&](std::size_t length) {
    for (const auto& [label, to] : adj[path.back()]) {
      if (found) return;
      auto it = std::find(path.begin(), path.end(), to);
      if (it != path.end()) {
        if (labels.size() + 1 != length) continue;
        labels.push_back(label);
        const auto t = static_cast<std::size_t>(it - path.begin());
        found = Address(Word(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(t)),
                        Word(labels.begin() + static_cast<std::ptrdiff_t>(t), labels.end()));
        labels.pop_back();
        return;
      }
      if (labels.size() + 1 >= length) continue;
      path.push_back(to);
      labels.push_back(label);
      rec(length);
      labels.pop_back();
      path.pop_back();
    }
  };
  for (std::size_t length = 1; length <= n && !found; ++length) rec(length);
  return found;
}

Obstruction simple_connectedness_obstruction(const NeighborGraph& g) {
  Obstruction out;
  out.center = center_address(g);
  if (!out.center) return out;
  for (std::size_t k = 1; k < g.size(); ++k)
    if (address_membership(g, *out.center, k)) out.vertices.push_back(k);
  out.obstructed = !out.vertices.empty();
  return out;
}

std::vector<OppositePair> opposite_face_pairs(const NeighborGraph& g, const IntersectionGraph& g2,
                                              const std::vector<IntersectionClass>& classes) {
  std::vector<OppositePair> out;
  for (std::size_t v = 0; v < g2.size(); ++v) {
    const auto& mem = g2.members(v);
    if (g.negation(mem[0]) != mem[1]) continue;
    out.push_back({mem[0], v, classes[v].cardinality, classes[v].dimension});
  }
  return out;
}

PolyhedralReport polyhedral_report(const NeighborGraph& g, const std::vector<std::size_t>& faces,
                                   const IntersectionGraph& g2, const IntersectionGraph& g3) {
  PolyhedralReport rep;
  rep.faces = faces;
  rep.pairs = classify_intersections(g2, g.system());
  rep.triples = classify_intersections(g3, g.system());
  rep.opposite = opposite_face_pairs(g, g2, rep.pairs);
  rep.face_count = faces.size();
  for (const auto& c : rep.pairs)
    if (c.cardinality == Cardinality::kUncountable || c.cardinality == Cardinality::kCountablyInfinite) ++rep.edge_count;

  auto add_point = [&](const Address& a, std::pair<int, std::size_t> source) {
    for (auto& p : rep.points) {
      if (p.address == a || addresses_equivalent(g, p.address, a)) {
        if (std::find(p.sources.begin(), p.sources.end(), source) == p.sources.end()) p.sources.push_back(source);
        if (p.address != a && std::find(p.merged.begin(), p.merged.end(), a) == p.merged.end()) p.merged.push_back(a);
        return;
      }
    }
    rep.points.push_back({a, {source}, {}});
  };
  for (const auto& c : rep.pairs)
    for (const auto& a : c.addresses) add_point(a, {2, c.vertex});
  for (const auto& c : rep.triples)
    for (const auto& a : c.addresses) add_point(a, {3, c.vertex});
  rep.vertex_count = rep.points.size();
  rep.euler = static_cast<long>(rep.face_count) - static_cast<long>(rep.edge_count) + static_cast<long>(rep.vertex_count);
  return rep;
}

}  // namespace tiletopo
