#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiletopo/digraph.hpp"
#include "tiletopo/tilespec.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

enum class BoundsMethod { kSampled, kRigorous };
const char* to_string(BoundsMethod m);
BoundsMethod parse_bounds_method(const std::string& s);

struct BoundsBox {
  std::vector<double> lower;
  std::vector<double> upper;
  BoundsMethod method = BoundsMethod::kRigorous;
  std::uint64_t seed = 0;

  bool contains(const std::vector<double>& x, double slack = 0.0) const;
  bool contains(const BoundsBox& inner) const;
  BoundsBox inflated(double factor) const;
};

struct BoundsParams {
  // Sampled bounds.
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double inflation = 0.25;
  // Rigorous bounds.
  std::size_t max_depth = 100000;
  double tail_tolerance = 1e-12;
};

BoundsBox attractor_bounds(const TileSystem& ts, BoundsMethod method, const BoundsParams& params = {});

// Coordinate extrema of a chaos-game run without inflation.
BoundsBox sampled_extrema(const TileSystem& ts, std::size_t samples, std::uint64_t seed);

// k' = M k + k_partner - k_label.
struct NeighborEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int label = 1;
  int partner = 1;

  bool operator==(const NeighborEdge&) const = default;
};

struct GraphParams {
  std::size_t max_vertices = 100000;
};

class NeighborGraph {
 public:
  static constexpr std::size_t kRoot = 0;

  NeighborGraph() = default;

  const TileSystem& system() const { return ts_; }
  // Vertex count including the root.
  std::size_t size() const { return vectors_.size(); }
  std::size_t neighbor_count() const { return vectors_.size() - 1; }
  const IntVector& vector(std::size_t v) const { return vectors_[v]; }
  std::optional<std::size_t> find(const IntVector& k) const;
  std::size_t negation(std::size_t v) const { return negation_[v]; }

  // Edges without the implicit root loops.
  const std::vector<NeighborEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  std::size_t candidate_count() const { return candidates_; }

  // Same vertices and edges, labels kept, partner dropped.
  const LabeledDigraph& digraph() const { return digraph_; }

  // Vertex reached from v reading label i on the tile side and j on the
  // neighbor side; the root maps to itself when i == j.
  std::optional<std::size_t> step(std::size_t v, int i, int j) const;

  friend NeighborGraph build_neighbor_graph(const TileSystem&, const BoundsBox&, const GraphParams&);

 private:
  void index_edges();

  TileSystem ts_;
  std::vector<IntVector> vectors_;
  std::map<IntVector, std::size_t> index_;
  std::vector<std::size_t> negation_;
  std::vector<NeighborEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  LabeledDigraph digraph_;
  std::size_t candidates_ = 0;
};

// Breadth-first closure from the root differences inside the window
// |k_q| <= b_q - l_q, followed by iterated removal of sinks. Throws CapExceeded.
NeighborGraph build_neighbor_graph(const TileSystem& ts, const BoundsBox& bounds, const GraphParams& params = {});

NeighborEdge opposite_edge(const NeighborGraph& g, const NeighborEdge& e);

struct TilingCheck {
  bool ok = true;
  std::vector<std::pair<std::size_t, int>> missing;  // (vertex, label) without incoming edge
};
TilingCheck check_tiling_existence(const NeighborGraph& g);

// True when no edge enters the root.
bool check_osc_flag(const NeighborGraph& g);

// Vector v with f_p^{-1} f_q = translation by v, if v is 0 or a vertex.
std::optional<IntVector> piece_relation(const NeighborGraph& g, const Word& p, const Word& q);

// Letter names: tier 0 first, then 1, then 2; within a tier by discovery order
// of the first-discovered member of each +-pair. Root is named "0".
std::vector<std::string> letter_names(const NeighborGraph& g, const std::vector<int>& tier);

struct DotOptions {
  bool reduced = false;
  const std::vector<std::string>* names = nullptr;
};
std::string to_dot(const NeighborGraph& g, const DotOptions& options = {});

}  // namespace tiletopo
