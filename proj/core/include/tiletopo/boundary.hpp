#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiletopo/digraph.hpp"
#include "tiletopo/integer.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/tilespec.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

constexpr std::size_t kNoComponent = SIZE_MAX;

struct SCCDecomposition {
  // Sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;  // kNoComponent for excluded vertices
  std::vector<std::size_t> internal_edges;
  std::vector<std::vector<std::size_t>> dag_successors;
  // reaches[c][d]: a path leads from c to d (reflexive).
  std::vector<std::vector<bool>> reaches;

  bool is_cyclic(std::size_t c) const { return internal_edges[c] > 0; }
  // u > v in the partial order: a directed path of positive length from u to v.
  bool precedes(std::size_t u, std::size_t v) const;
};

// Components of the subgraph induced on vertices with include[v] set. The
// partial order is computed by graph search and cross-checked against
// min(1, H + ... + H^q); a mismatch throws std::logic_error.
SCCDecomposition strong_components(const LabeledDigraph& g, const std::vector<bool>& include);
// Over V \ {0}.
SCCDecomposition strong_components(const NeighborGraph& g);

struct AdjacencyMatrix {
  std::vector<std::size_t> vertices;  // graph vertex for each row
  std::vector<std::int64_t> entries;  // row-major

  std::size_t size() const { return vertices.size(); }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries[r * size() + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries[r * size() + c]; }
};

// Edge counts between the listed vertices; label 0 sums all labels.
AdjacencyMatrix adjacency_matrix(const LabeledDigraph& g, const std::vector<std::size_t>& vertices, int label = 0);

// N = min(1, H + H^2 + ... + H^q) by boolean closure.
std::vector<std::vector<bool>> reachability_by_matrix(const AdjacencyMatrix& h);
std::vector<std::vector<bool>> reachability_by_search(const LabeledDigraph& g, const std::vector<std::size_t>& vertices);

enum class Cardinality { kSingleton, kFinite, kCountablyInfinite, kUncountable };
const char* to_string(Cardinality c);

enum class Tri { kYes, kNo, kUndecided };
const char* to_string(Tri t);

struct VertexClass {
  Cardinality cardinality = Cardinality::kUncountable;
  // Number of infinite label paths when finite; an upper bound on the point count.
  BigInt paths = 0;
  std::size_t scc = kNoComponent;
  Tri is_face = Tri::kUndecided;
};

struct BoundaryClassification {
  std::vector<VertexClass> vertices;  // indexed by graph vertex; excluded entries unused
  SCCDecomposition scc;

  std::vector<std::size_t> with(Cardinality c) const;
};

BoundaryClassification classify_cardinality(const LabeledDigraph& g, const std::vector<bool>& include);
BoundaryClassification classify_cardinality(const NeighborGraph& g);

// Vertices whose row sums in H, H^2, ..., H^q all equal 1 (graph vertex ids).
std::vector<std::size_t> point_neighbor_matrix_test(const AdjacencyMatrix& h, std::size_t q);
std::vector<std::size_t> point_neighbor_matrix_test(const NeighborGraph& g);

struct EquationTerm {
  Word word;
  std::size_t target = 0;
  auto operator<=>(const EquationTerm&) const = default;
};

// Graph-directed equations B_k = U f_w(B_t).
class EquationSystem {
 public:
  // One equation per vertex with keep[v] set, using edges between kept vertices.
  EquationSystem(const NeighborGraph& g, const std::vector<bool>& keep);

  bool has(std::size_t k) const;
  const std::vector<EquationTerm>& terms(std::size_t k) const;
  // Substitutes the equation of x into every other equation and drops it.
  void eliminate(std::size_t x);
  std::string format(std::size_t k, const std::vector<std::string>& names) const;

 private:
  std::vector<std::optional<std::vector<EquationTerm>>> eq_;
};

std::vector<EquationTerm> boundary_equation(const NeighborGraph& g, std::size_t k);

struct PerronParams {
  double tolerance = 1e-12;
  std::size_t max_iterations = 20000;
  std::size_t exact_max_size = 12;
};

struct PerronResult {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::string method;  // power, exact, shifted-power, trivial
  std::optional<double> power_value;
  std::optional<double> exact_value;
};

PerronResult perron_root(const AdjacencyMatrix& h, const PerronParams& params = {});
PerronResult perron_root(const LabeledDigraph& g, const std::vector<std::size_t>& component,
                         const PerronParams& params = {});

// Largest real root of a monic integer polynomial inside [0, upper].
double largest_real_root(const std::vector<BigInt>& poly, double upper);

// n log(lambda) / log(m)
double modified_dimension(const TileSystem& ts, double lambda);
std::optional<double> hausdorff_dimension_selfsimilar(const TileSystem& ts, const SpectrumReport& spec,
                                                      double lambda);

struct ComponentDimensions {
  std::vector<PerronResult> perron;
  // n log(lambda)/log(m) for cyclic components, NaN for trivial ones.
  std::vector<double> own;
  // Maximum of own over all reachable cyclic components.
  std::vector<double> effective;
};

ComponentDimensions component_dimensions(const TileSystem& ts, const LabeledDigraph& g, const SCCDecomposition& scc,
                                         const PerronParams& params = {});

}  // namespace tiletopo
