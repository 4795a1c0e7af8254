#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tiletopo {

struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int label = 1;
};

// Edge-labeled multigraph over vertices 0..n-1 with labels 1..m.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  LabeledDigraph(std::size_t vertex_count, int label_count);

  std::size_t add_edge(std::size_t from, std::size_t to, int label);

  std::size_t vertex_count() const { return out_.size(); }
  int label_count() const { return labels_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const LabeledEdge& edge(std::size_t id) const { return edges_[id]; }
  // Edge ids in insertion order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

  // Subgraph induced on the given vertices, renumbered in the given order.
  LabeledDigraph induced(const std::vector<std::size_t>& vertices) const;

 private:
  int labels_ = 0;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Fixed-size bit set used as a set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}

  std::size_t universe() const { return universe_; }
  void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  bool empty() const;
  std::size_t count() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  bool operator==(const VertexSet& other) const { return words_ == other.words_; }
  std::vector<std::size_t> elements() const;
  std::size_t hash() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Repeatedly deletes vertices without outgoing edges among survivors. Vertices
// flagged in keep are never deleted.
std::vector<bool> prune_sinks(const LabeledDigraph& g, const std::vector<bool>& keep);

}  // namespace tiletopo
