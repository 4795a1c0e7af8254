#include "tiletopo/digraph.hpp"

#include <deque>
#include <stdexcept>

namespace tiletopo {

LabeledDigraph::LabeledDigraph(std::size_t vertex_count, int label_count)
    : labels_(label_count), out_(vertex_count), in_(vertex_count) {}

std::size_t LabeledDigraph::add_edge(std::size_t from, std::size_t to, int label) {
  if (from >= out_.size() || to >= out_.size()) throw std::out_of_range("add_edge: vertex out of range");
  if (label < 1 || label > labels_) throw std::out_of_range("add_edge: label out of range");
  edges_.push_back({from, to, label});
  out_[from].push_back(edges_.size() - 1);
  in_[to].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

LabeledDigraph LabeledDigraph::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::size_t> index(vertex_count(), SIZE_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  LabeledDigraph sub(vertices.size(), labels_);
  for (std::size_t v : vertices)
    for (std::size_t id : out_[v]) {
      const auto& e = edges_[id];
      if (index[e.to] != SIZE_MAX) sub.add_edge(index[v], index[e.to], e.label);
    }
  return sub;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<std::size_t> VertexSet::elements() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<bool> prune_sinks(const LabeledDigraph& g, const std::vector<bool>& keep) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> outdeg(n, 0);
  for (const auto& e : g.edges()) ++outdeg[e.from];
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (outdeg[v] == 0 && !keep[v]) queue.push_back(v);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (std::size_t id : g.in_edges(v)) {
      const std::size_t u = g.edge(id).from;
      if (!alive[u] || keep[u]) continue;
      if (--outdeg[u] == 0) queue.push_back(u);
    }
  }
  return alive;
}

}  // namespace tiletopo
