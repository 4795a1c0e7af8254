#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiletopo/boundary.hpp"
#include "tiletopo/faces.hpp"
#include "tiletopo/interior.hpp"
#include "tiletopo/intersections.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/tilespec.hpp"

namespace tiletopo {

struct AnalysisParams {
  BoundsMethod bounds = BoundsMethod::kRigorous;
  BoundsParams bounds_params;
  GraphParams graph;
  FaceParams faces;
  IntersectionParams intersections;
  CertificateParams certificate;
};

struct AnalysisReport {
  TileSystem system;
  SpectrumReport spectrum;
  std::optional<BoundsBox> bounds;
  std::optional<NeighborGraph> graph;
  std::vector<std::string> names;  // letter per vertex, "0" for the root
  std::optional<TilingCheck> tiling;
  std::optional<Word> tiling_witness;
  bool osc = false;
  std::optional<BoundaryClassification> classes;
  std::vector<std::size_t> point_neighbors;  // by the matrix test
  std::optional<ComponentDimensions> dimensions;
  std::optional<FaceReport> faces;
  std::optional<IntersectionGraph> pairs;    // faces-only level 2
  std::optional<IntersectionGraph> triples;  // faces-only level 3
  std::optional<PolyhedralReport> polyhedral;
  std::optional<Obstruction> obstruction;
  std::optional<ConnectivityCertificate> certificate;
  // Set when a cap stopped the pipeline; later sections are absent.
  std::string cap_exceeded;

  bool complete() const { return cap_exceeded.empty(); }
};

// Runs every stage in order. A CapExceeded stops the pipeline and is recorded;
// a SpecError from validation propagates.
AnalysisReport analyze(const TileSystem& ts, const AnalysisParams& params = {});

// Names by tier: faces, other infinite boundary sets, finite boundary sets.
std::vector<std::string> report_names(const NeighborGraph& g, const BoundaryClassification& classes,
                                      const std::vector<std::size_t>& faces);

// Sections SYSTEM, SPECTRUM, NEIGHBOR GRAPH, TILING EXISTENCE, BOUNDARY CLASSES,
// DIMENSIONS, FACES, INTERSECTIONS, POLYHEDRAL STRUCTURE, CENTER/OBSTRUCTION,
// INTERIOR.
std::string format_text(const AnalysisReport& report);
std::string format_json(const AnalysisReport& report, int indent = 2);

// Shortest round-trip decimal; "nan" and "inf" for non-finite values.
std::string format_double(double x);

}  // namespace tiletopo
