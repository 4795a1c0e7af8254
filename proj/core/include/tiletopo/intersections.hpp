#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiletopo/boundary.hpp"
#include "tiletopo/digraph.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

struct IntersectionEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int label = 1;
  // phi[r]: position in members(to) of the image of members(from)[r].
  std::vector<std::size_t> phi;
};

struct IntersectionParams {
  std::size_t max_candidates = 5000000;
};

// Graph of l-intersections. Vertices are sorted l-sets of neighbor-graph
// vertices, numbered in lexicographic order of their member lists.
class IntersectionGraph {
 public:
  int level() const { return level_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<std::size_t>& members(std::size_t v) const { return sets_[v]; }
  std::optional<std::size_t> find(std::vector<std::size_t> set) const;
  const std::vector<IntersectionEdge>& edges() const { return edges_; }
  const LabeledDigraph& digraph() const { return digraph_; }

  friend IntersectionGraph build_intersection_graph(const NeighborGraph&, int, const std::vector<std::size_t>&,
                                                    const IntersectionParams&);

 private:
  int level_ = 2;
  std::vector<std::vector<std::size_t>> sets_;
  std::vector<IntersectionEdge> edges_;
  LabeledDigraph digraph_;
};

// Starts from all l-subsets of the allowed vertices, keeps (K, K', i) when a
// bijection phi with (k, phi(k), i) in E exists, then removes vertices without
// outgoing edges until none is left. Throws CapExceeded when the number of
// l-subsets exceeds max_candidates.
IntersectionGraph build_intersection_graph(const NeighborGraph& g, int level, const std::vector<std::size_t>& allowed,
                                           const IntersectionParams& params = {});
// All non-root vertices.
IntersectionGraph build_intersection_graph(const NeighborGraph& g, int level, const IntersectionParams& params = {});

struct IntersectionClass {
  std::size_t vertex = 0;
  Cardinality cardinality = Cardinality::kUncountable;
  BigInt paths = 0;
  // Label sequences of all infinite paths, when finitely many.
  std::vector<Address> addresses;
  double dimension = 0.0;  // effective modified dimension, NaN for finite sets
};

std::vector<IntersectionClass> classify_intersections(const IntersectionGraph& gl, const TileSystem& ts);

// Addresses of every infinite path from v, sorted; requires finitely many.
std::vector<Address> path_addresses(const LabeledDigraph& g, std::size_t v);

struct OnePoint {
  std::size_t vertex = 0;
  Address address;
};
// Vertices of the intersection graph with exactly one infinite path.
std::vector<OnePoint> one_point_intersections(const IntersectionGraph& gl);

// Some path from k carries the labels of s.
bool address_membership(const NeighborGraph& g, const Address& s, std::size_t k);

// s and t address the same point of T: the walk v <- M v + k_{t_n} - k_{s_n}
// from the root never leaves the vertex set.
bool addresses_equivalent(const NeighborGraph& g, const Address& s, const Address& t);

// Label address of the shortest, then least, lasso from the root using only
// edges with label != partner. Requires m = 2.
std::optional<Address> center_address(const NeighborGraph& g);

struct Obstruction {
  bool obstructed = false;
  std::optional<Address> center;
  std::vector<std::size_t> vertices;  // k != 0 with the center address in L_k
};

Obstruction simple_connectedness_obstruction(const NeighborGraph& g);

struct OppositePair {
  std::size_t face = 0;  // the member with the smaller index
  std::size_t vertex = 0;
  Cardinality cardinality = Cardinality::kUncountable;
  double dimension = 0.0;
};

std::vector<OppositePair> opposite_face_pairs(const NeighborGraph& g, const IntersectionGraph& g2,
                                              const std::vector<IntersectionClass>& classes);

struct PolyhedralPoint {
  Address address;
  std::vector<std::pair<int, std::size_t>> sources;  // (level, intersection vertex)
  std::vector<Address> merged;  // equivalent addresses folded into this point
};

struct PolyhedralReport {
  std::vector<std::size_t> faces;
  std::vector<IntersectionClass> pairs;    // faces-only level 2
  std::vector<IntersectionClass> triples;  // faces-only level 3
  std::vector<OppositePair> opposite;
  std::vector<PolyhedralPoint> points;
  std::size_t face_count = 0;
  std::size_t edge_count = 0;
  std::size_t vertex_count = 0;
  long euler = 0;
};

PolyhedralReport polyhedral_report(const NeighborGraph& g, const std::vector<std::size_t>& faces,
                                   const IntersectionGraph& g2, const IntersectionGraph& g3);

}  // namespace tiletopo
