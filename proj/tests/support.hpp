#pragma once

#include <map>
#include <memory>
#include <string>

#include "tiletopo/boundary.hpp"
#include "tiletopo/faces.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/tilespec.hpp"

namespace tiletopo::testing {

// Twindragon letters plus "S" (Sierpinski) and "I" (unit interval).
TileSystem test_system(const std::string& key);

struct Analysis {
  TileSystem ts;
  NeighborGraph g;
  BoundaryClassification classes;
  ComponentDimensions dims;
  std::unique_ptr<FaceReport> faces;  // filled by with_faces
  std::vector<std::size_t> face_list;
  std::vector<std::string> names;
};

// Cached per key.
const Analysis& analysis(const std::string& key);
const Analysis& with_faces(const std::string& key);

// Vertex of g with the given name under the report naming.
std::size_t vertex_named(const Analysis& a, const std::string& name);

}  // namespace tiletopo::testing
