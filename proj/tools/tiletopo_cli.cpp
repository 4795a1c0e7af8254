#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiletopo/errors.hpp"
#include "tiletopo/render.hpp"
#include "tiletopo/report.hpp"

using namespace tiletopo;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

struct Common {
  std::string spec_path;
  std::string twindragon;
  std::string out;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_vertices = GraphParams{}.max_vertices;
  std::size_t max_word_len = WordSearchParams{}.max_len;
  std::size_t containment_cap = ContainmentParams{}.state_cap;
  std::string bounds = "rigorous";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("spec", c.spec_path, "Tile specification JSON file");
  cmd->add_option("--twindragon", c.twindragon, "Catalog twindragon A..G")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_flag("--json", c.json, "Emit JSON");
  cmd->add_option("--seed", c.seed, "Seed for sampled bounds and rendering");
  cmd->add_option("--max-vertices", c.max_vertices, "Neighbor graph vertex cap");
  cmd->add_option("--max-word-len", c.max_word_len, "Maximal length of interior witness words");
  cmd->add_option("--containment-cap", c.containment_cap, "State cap of the exact face test");
  cmd->add_option("--bounds", c.bounds, "Attractor bounds: rigorous or sampled")->check(CLI::IsMember({"rigorous", "sampled"}));
}

TileSystem load(const Common& c) {
  if (!c.twindragon.empty()) return twindragon(c.twindragon[0]);
  if (c.spec_path.empty()) throw SpecError(SpecErrorKind::kSyntax, "give a spec file or --twindragon");
  std::ifstream in(c.spec_path);
  if (!in) throw SpecError(SpecErrorKind::kSyntax, "cannot read " + c.spec_path);
  std::stringstream buf;
  buf << in.rdbuf();
  TileSystem ts = parse_tile_system(buf.str());
  if (ts.name.empty()) ts.name = c.spec_path;
  return ts;
}

AnalysisParams params_from(const Common& c) {
  AnalysisParams p;
  p.bounds = parse_bounds_method(c.bounds);
  p.bounds_params.seed = c.seed;
  p.graph.max_vertices = c.max_vertices;
  p.faces.containment.state_cap = c.containment_cap;
  p.certificate.search.max_len = c.max_word_len;
  return p;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + c.out);
  out << text;
}

NeighborGraph graph_for(const TileSystem& ts, const AnalysisParams& p) {
  return build_neighbor_graph(ts, attractor_bounds(ts, p.bounds, p.bounds_params), p.graph);
}

struct Context {
  NeighborGraph g;
  BoundaryClassification classes;
  ComponentDimensions dims;
  FaceReport faces;
  std::vector<std::string> names;
};

Context face_context(const TileSystem& ts, const AnalysisParams& p) {
  Context ctx{graph_for(ts, p), {}, {}, {}, {}};
  ctx.classes = classify_cardinality(ctx.g);
  ctx.dims = component_dimensions(ts, ctx.g.digraph(), ctx.classes.scc);
  ctx.faces = face_report(ctx.g, ctx.classes.scc, ctx.dims, p.faces);
  ctx.names = report_names(ctx.g, ctx.classes, ctx.faces.faces());
  return ctx;
}

int cmd_analyze(const Common& c) {
  const TileSystem ts = load(c);
  const AnalysisReport r = analyze(ts, params_from(c));
  emit(c, c.json ? format_json(r) : format_text(r));
  if (!r.complete()) {
    std::cerr << "cap exceeded: " << r.cap_exceeded << "\n";
    return kExitCap;
  }
  return 0;
}

int cmd_graph(const Common& c, const std::string& dot, bool reduced) {
  const TileSystem ts = load(c);
  const NeighborGraph g = graph_for(ts, params_from(c));
  std::ostringstream s;
  const std::size_t shown = reduced ? (g.neighbor_count() + 1) / 2 : g.neighbor_count();
  s << "neighbors: " << g.neighbor_count() << "\n";
  s << "vertices: " << shown + 1 << (reduced ? " (reduced)" : "") << "\n";
  s << "edges: " << g.edges().size() << "\n";
  const std::string text = to_dot(g, {reduced, nullptr});
  if (!dot.empty()) {
    std::ofstream out(dot, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + dot);
    out << text;
    emit(c, s.str());
  } else {
    emit(c, text);
  }
  return 0;
}

int cmd_faces(const Common& c) {
  const TileSystem ts = load(c);
  Context ctx = face_context(ts, params_from(c));
  std::ostringstream s;
  const auto faces = ctx.faces.faces();
  if (c.json) {
    nlohmann::json doc;
    doc["faces"] = nlohmann::json::array();
    for (std::size_t v : faces) doc["faces"].push_back({{"name", ctx.names[v]}, {"vector", format_vector(ctx.g.vector(v))}});
    doc["complete"] = ctx.faces.complete();
    doc["consistent"] = ctx.faces.consistent();
    doc["entries"] = nlohmann::json::array();
    for (const auto& e : ctx.faces.entries)
      doc["entries"].push_back({{"name", ctx.names[e.vertex]},
                                {"verdict", to_string(e.verdict)},
                                {"sufficient", e.sufficient},
                                {"exact", to_string(e.exact)},
                                {"dimension_excluded", e.dimension_excluded},
                                {"witness", e.exact == Tri::kYes ? format_word(e.witness) : ""}});
    s << doc.dump(2) << "\n";
  } else {
    s << "faces: " << faces.size() << "\n";
    for (const auto& e : ctx.faces.entries)
      s << ctx.names[e.vertex] << " " << format_vector(ctx.g.vector(e.vertex)) << " " << to_string(e.verdict)
        << (e.exact == Tri::kYes ? " witness " + format_word(e.witness) : "") << "\n";
  }
  emit(c, s.str());
  return ctx.faces.complete() ? 0 : kExitCap;
}

int cmd_intersections(const Common& c, int level, bool faces_only) {
  const TileSystem ts = load(c);
  Context ctx = face_context(ts, params_from(c));
  const auto gl = faces_only ? build_intersection_graph(ctx.g, level, ctx.faces.faces())
                             : build_intersection_graph(ctx.g, level);
  const auto classes = classify_intersections(gl, ts);
  std::ostringstream s;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& k : classes) {
    std::vector<std::string> members;
    for (std::size_t v : gl.members(k.vertex)) members.push_back(ctx.names[v]);
    std::vector<std::string> addrs;
    for (const auto& a : k.addresses) addrs.push_back(a.str());
    if (c.json) {
      doc.push_back({{"members", members}, {"cardinality", to_string(k.cardinality)}, {"addresses", addrs}});
      continue;
    }
    for (std::size_t i = 0; i < members.size(); ++i) s << (i ? "&" : "") << members[i];
    s << ": " << to_string(k.cardinality);
    for (const auto& a : addrs) s << " " << a;
    s << "\n";
  }
  if (c.json) s << doc.dump(2) << "\n";
  emit(c, s.str());
  return 0;
}

int cmd_interior(const Common& c) {
  const TileSystem ts = load(c);
  const AnalysisParams p = params_from(c);
  Context ctx = face_context(ts, p);
  const auto cert = interior_connectedness_certificate(ctx.g, ctx.faces.faces(), p.certificate);
  std::ostringstream s;
  s << "verdict: " << to_string(cert.verdict) << "\n";
  if (!cert.reason.empty()) s << "reason: " << cert.reason << "\n";
  for (const auto& w : cert.words) s << "word: " << format_word(w) << "\n";
  for (const auto& l : cert.face_links)
    s << "link " << format_word(l.p) << " " << format_word(l.q) << ": " << ctx.names[l.vertex] << "\n";
  for (const auto& h : cert.fixed_point_hits) s << "fixed point " << h.address.str() << " in " << format_word(h.piece) << "\n";
  emit(c, s.str());
  return 0;
}

int cmd_render(const Common& c, std::size_t points, const std::string& boundary, std::size_t depth) {
  const TileSystem ts = load(c);
  PointCloud cloud;
  if (boundary.empty()) {
    cloud = chaos_points(ts, points, c.seed);
  } else {
    const NeighborGraph g = graph_for(ts, params_from(c));
    std::optional<std::size_t> k;
    for (std::size_t v = 1; v < g.size() && !k; ++v)
      if (format_vector(g.vector(v)) == boundary) k = v;
    if (!k) throw SpecError(SpecErrorKind::kSyntax, boundary + " is not a neighbor");
    cloud = boundary_points(g, *k, depth);
    cloud.seed = c.seed;
  }
  emit(c, to_csv(cloud));
  return 0;
}

int cmd_catalog(const Common& c) {
  std::ostringstream s;
  nlohmann::json doc = nlohmann::json::array();
  for (char letter : kTwindragonLetters) {
    const auto [a, b] = twindragon_parameters(letter);
    const auto rep = spectrum(twindragon(letter).M);
    if (c.json) {
      doc.push_back({{"name", std::string(1, letter)}, {"a", a}, {"b", b}, {"moduli", rep.root_moduli}});
      continue;
    }
    s << letter << ": a=" << a << " b=" << b << " moduli";
    for (double x : rep.root_moduli) s << " " << format_double(x);
    s << "\n";
  }
  if (c.json) s << doc.dump(2) << "\n";
  emit(c, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology of self-affine lattice tiles"};
  app.require_subcommand(1);
  Common c;

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  add_common(analyze, c);

  auto* graph = app.add_subcommand("graph", "Neighbor graph");
  add_common(graph, c);
  std::string dot;
  bool reduced = false;
  graph->add_option("--dot", dot, "Write DOT to this file");
  graph->add_flag("--reduced", reduced, "Merge each vertex with its negative");

  auto* faces = app.add_subcommand("faces", "Face tests");
  add_common(faces, c);

  auto* inter = app.add_subcommand("intersections", "Intersection graph classes");
  add_common(inter, c);
  int level = 2;
  bool faces_only = false;
  inter->add_option("--level", level, "Number of neighbors per vertex")->check(CLI::Range(2, 8));
  inter->add_flag("--faces-only", faces_only, "Use faces only");

  auto* interior = app.add_subcommand("interior", "Interior connectedness certificate");
  add_common(interior, c);

  auto* render = app.add_subcommand("render", "Point clouds as CSV");
  add_common(render, c);
  std::size_t points = 100000;
  std::string boundary;
  std::size_t depth = 12;
  render->add_option("--points", points, "Chaos game points");
  render->add_option("--boundary", boundary, "Neighbor vector such as (1,0,0); renders its boundary set");
  render->add_option("--depth", depth, "Path length for boundary rendering");

  auto* catalog = app.add_subcommand("catalog", "List the twindragon catalog");
  catalog->add_flag("--json", c.json, "Emit JSON");
  catalog->add_option("--out", c.out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze) return cmd_analyze(c);
    if (*graph) return cmd_graph(c, dot, reduced);
    if (*faces) return cmd_faces(c);
    if (*inter) return cmd_intersections(c, level, faces_only);
    if (*interior) return cmd_interior(c);
    if (*render) return cmd_render(c, points, boundary, depth);
    if (*catalog) return cmd_catalog(c);
  } catch (const SpecError& e) {
    std::cerr << "invalid specification (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
