#pragma once

#include <cstddef>
#include <vector>

#include "tiletopo/boundary.hpp"
#include "tiletopo/digraph.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

// A directed path from k reaches k' or -k' for every other neighbor k'.
bool sufficient_face_test(const NeighborGraph& g, std::size_t k);

// sim[y] holds every z that simulates y: each labeled move of y can be matched
// by z so that the targets are again related. Implies L_y subset of L_z.
std::vector<VertexSet> simulation_preorder(const LabeledDigraph& g);

enum class Containment { kContained, kNotContained, kUndecided };
const char* to_string(Containment c);

struct ContainmentParams {
  std::size_t state_cap = 4000000;
};

struct ContainmentResult {
  Containment status = Containment::kUndecided;
  // A word readable from u but from no v in S. Breadth-first in label order up
  // to the point where no remaining v shares an infinite word with u, then the
  // shortest separating extension.
  Word witness;
  std::size_t states = 0;
};

// Decides L_u subset of union_{v in S} L_v, where L_x is the set of label
// sequences of infinite paths from x. Every vertex of g must have an outgoing
// edge. Breadth-first over pairs (delta(u, w), delta(S, w)) of reachable
// subsets. S-side vertices sharing no infinite word with the u-side are
// dropped, and a pair is dropped once every u-side vertex is simulated by an
// S-side vertex.
ContainmentResult language_containment(const LabeledDigraph& g, std::size_t u, const std::vector<std::size_t>& S,
                                       const ContainmentParams& params = {});

struct FaceTestResult {
  Tri is_face = Tri::kUndecided;
  Word witness;
  std::size_t states = 0;
};

// Face iff L_k is not covered by the languages of all other neighbors.
// Throws PreconditionError when the neighbors are not all compatible.
FaceTestResult exact_face_test(const NeighborGraph& g, std::size_t k, const ContainmentParams& params = {});

// Vertices whose boundary set has modified dimension below n - 1.
std::vector<std::size_t> dimension_face_filter(const TileSystem& ts, const NeighborGraph& g,
                                               const SCCDecomposition& scc, const ComponentDimensions& dims);

struct FaceEntry {
  std::size_t vertex = 0;
  bool sufficient = false;
  Tri exact = Tri::kUndecided;
  double dimension = 0.0;
  bool dimension_excluded = false;
  Tri verdict = Tri::kUndecided;
  Word witness;
  std::size_t states = 0;
};

struct FaceParams {
  ContainmentParams containment;
  bool run_exact = true;
};

struct FaceReport {
  std::vector<FaceEntry> entries;  // one per non-root vertex, in vertex order
  std::vector<std::size_t> faces() const;
  bool complete() const;
  bool consistent() const;
};

FaceReport face_report(const NeighborGraph& g, const SCCDecomposition& scc, const ComponentDimensions& dims,
                       const FaceParams& params = {});

// Replays w from v: true iff some path from v is labeled w.
bool word_readable(const LabeledDigraph& g, std::size_t v, const Word& w);

}  // namespace tiletopo
