#include "support.hpp"

#include <algorithm>
#include <stdexcept>

#include "tiletopo/report.hpp"

namespace tiletopo::testing {

TileSystem test_system(const std::string& key) {
  if (key == "S") {
    TileSystem ts;
    ts.n = 2;
    ts.M = IntMatrix{{2, 0}, {0, 2}};
    ts.digits = {make_vector({0, 0}), make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})};
    ts.name = "sierpinski";
    return ts;
  }
  if (key == "I") {
    TileSystem ts;
    ts.n = 1;
    ts.M = IntMatrix{{2}};
    ts.digits = {make_vector({0}), make_vector({1})};
    ts.name = "interval";
    return ts;
  }
  return twindragon(key.at(0));
}

namespace {
std::map<std::string, std::unique_ptr<Analysis>>& cache() {
  static std::map<std::string, std::unique_ptr<Analysis>> c;
  return c;
}
}  // namespace

const Analysis& analysis(const std::string& key) {
  auto& slot = cache()[key];
  if (!slot) {
    slot = std::make_unique<Analysis>();
    slot->ts = test_system(key);
    slot->g = build_neighbor_graph(slot->ts, attractor_bounds(slot->ts, BoundsMethod::kRigorous));
    slot->classes = classify_cardinality(slot->g);
    slot->dims = component_dimensions(slot->ts, slot->g.digraph(), slot->classes.scc);
    slot->names = report_names(slot->g, slot->classes, {});
  }
  return *slot;
}

const Analysis& with_faces(const std::string& key) {
  const Analysis& a = analysis(key);
  auto& m = const_cast<Analysis&>(a);
  if (!m.faces) {
    m.faces = std::make_unique<FaceReport>(face_report(m.g, m.classes.scc, m.dims));
    m.face_list = m.faces->faces();
    m.names = report_names(m.g, m.classes, m.face_list);
  }
  return a;
}

std::size_t vertex_named(const Analysis& a, const std::string& name) {
  const auto it = std::find(a.names.begin(), a.names.end(), name);
  if (it == a.names.end()) throw std::out_of_range("no vertex named " + name);
  return static_cast<std::size_t>(it - a.names.begin());
}

}  // namespace tiletopo::testing
