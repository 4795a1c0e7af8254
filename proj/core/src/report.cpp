#include "tiletopo/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "tiletopo/errors.hpp"

namespace tiletopo {

namespace {

using nlohmann::json;

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json vec(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> member_names(const AnalysisReport& r, const IntersectionGraph& gl, std::size_t v) {
  std::vector<std::string> out;
  for (std::size_t k : gl.members(v)) out.push_back(r.names[k]);
  return out;
}

std::vector<std::string> address_strings(const std::vector<Address>& a) {
  std::vector<std::string> out;
  for (const auto& s : a) out.push_back(s.str());
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> report_names(const NeighborGraph& g, const BoundaryClassification& classes,
                                      const std::vector<std::size_t>& faces) {
  std::vector<int> tier(g.size(), 0);
  for (std::size_t v = 1; v < g.size(); ++v) {
    const auto c = classes.vertices[v].cardinality;
    tier[v] = contains(faces, v) ? 0 : (c == Cardinality::kSingleton || c == Cardinality::kFinite) ? 2 : 1;
  }
  return letter_names(g, tier);
}

AnalysisReport analyze(const TileSystem& ts, const AnalysisParams& params) {
  validate_tile_system(ts);
  AnalysisReport r;
  r.system = ts;
  r.spectrum = spectrum(ts.M);
  try {
    r.bounds = attractor_bounds(ts, params.bounds, params.bounds_params);
    r.graph = build_neighbor_graph(ts, *r.bounds, params.graph);
    const NeighborGraph& g = *r.graph;
    r.tiling = check_tiling_existence(g);
    if (r.tiling->ok) r.tiling_witness = tiling_witness_word(g);
    r.osc = check_osc_flag(g);
    r.classes = classify_cardinality(g);
    r.point_neighbors = point_neighbor_matrix_test(g);
    r.dimensions = component_dimensions(ts, g.digraph(), r.classes->scc);
    r.names = report_names(g, *r.classes, {});
    r.faces = face_report(g, r.classes->scc, *r.dimensions, params.faces);
    const auto faces = r.faces->faces();
    r.names = report_names(g, *r.classes, faces);
    r.pairs = build_intersection_graph(g, 2, faces, params.intersections);
    r.triples = build_intersection_graph(g, 3, faces, params.intersections);
    r.polyhedral = polyhedral_report(g, faces, *r.pairs, *r.triples);
    if (ts.m() == 2) r.obstruction = simple_connectedness_obstruction(g);
    r.certificate = interior_connectedness_certificate(g, faces, params.certificate);
  } catch (const CapExceeded& e) {
    r.cap_exceeded = e.what();
  }
  return r;
}

std::string format_text(const AnalysisReport& r) {
  std::ostringstream out;
  const TileSystem& ts = r.system;
  auto section = [&](const char* title) { out << (out.tellp() > 0 ? "\n" : "") << "== " << title << "\n"; };

  section("SYSTEM");
  out << "name: " << (ts.name.empty() ? "unnamed" : ts.name) << "\n";
  out << "dimension: " << ts.n << "\n";
  out << "digits: " << ts.m() << "\n";
  for (std::size_t i = 0; i < ts.n; ++i) {
    out << "M row " << i + 1 << ":";
    for (std::size_t j = 0; j < ts.n; ++j) out << " " << ts.M(i, j);
    out << "\n";
  }
  for (int j = 1; j <= static_cast<int>(ts.m()); ++j) out << "k_" << j << ": " << format_vector(ts.digit(j)) << "\n";

  section("SPECTRUM");
  out << "charpoly:";
  for (const auto& c : r.spectrum.charpoly) out << " " << c;
  out << "\nmoduli:";
  for (double x : r.spectrum.root_moduli) out << " " << format_double(x);
  out << "\nexpanding: " << (r.spectrum.is_expanding ? "yes" : "no") << "\n";
  out << "self-similar: " << (r.spectrum.is_selfsimilar_conjugate ? "yes" : "no") << "\n";
  out << "cubic case: " << to_string(r.spectrum.thm23_case) << "\n";

  if (!r.complete()) out << "\ncap exceeded: " << r.cap_exceeded << "\n";
  if (!r.graph) return out.str();
  const NeighborGraph& g = *r.graph;

  section("NEIGHBOR GRAPH");
  out << "bounds: " << to_string(r.bounds->method) << "\n";
  for (std::size_t i = 0; i < ts.n; ++i)
    out << "bounds " << i + 1 << ": " << format_double(r.bounds->lower[i]) << " " << format_double(r.bounds->upper[i])
        << "\n";
  out << "neighbors: " << g.neighbor_count() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  out << "open set condition: " << (r.osc ? "yes" : "no") << "\n";
  for (std::size_t v = 1; v < g.size(); ++v)
    out << "vertex " << (r.names.empty() ? std::to_string(v) : r.names[v]) << " = " << format_vector(g.vector(v))
        << "\n";

  if (r.tiling) {
    section("TILING EXISTENCE");
    out << "lattice tiling: " << (r.tiling->ok ? "yes" : "no") << "\n";
    for (const auto& [v, label] : r.tiling->missing) out << "missing: " << r.names[v] << " label " << label << "\n";
    if (r.tiling_witness) out << "witness: " << format_word(*r.tiling_witness) << "\n";
  }

  if (r.classes) {
    section("BOUNDARY CLASSES");
    for (auto c : {Cardinality::kUncountable, Cardinality::kCountablyInfinite, Cardinality::kFinite,
                   Cardinality::kSingleton})
      out << to_string(c) << ": " << r.classes->with(c).size() << "\n";
    std::vector<std::string> pn;
    for (std::size_t v : r.point_neighbors) pn.push_back(r.names[v]);
    out << "point neighbors (matrix test): " << pn.size() << (pn.empty() ? "" : " ") << join(pn) << "\n";
    for (std::size_t v = 1; v < g.size(); ++v) {
      const auto& vc = r.classes->vertices[v];
      out << "class " << r.names[v] << ": " << to_string(vc.cardinality);
      if (vc.cardinality != Cardinality::kUncountable && vc.cardinality != Cardinality::kCountablyInfinite)
        out << " paths " << vc.paths;
      out << "\n";
    }
  }

  if (r.dimensions) {
    section("DIMENSIONS");
    const auto& scc = r.classes->scc;
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
      if (!scc.is_cyclic(c)) continue;
      std::vector<std::string> members;
      for (std::size_t v : scc.components[c]) members.push_back(r.names[v]);
      out << "component " << c << ": size " << members.size() << " lambda " << format_double(r.dimensions->perron[c].value)
          << " (" << r.dimensions->perron[c].method << ") dimension " << format_double(r.dimensions->own[c])
          << " effective " << format_double(r.dimensions->effective[c]) << " members " << join(members) << "\n";
    }
  }

  if (r.faces) {
    section("FACES");
    const auto faces = r.faces->faces();
    std::vector<std::string> fn;
    for (std::size_t v : faces) fn.push_back(r.names[v]);
    out << "faces: " << faces.size() << "\n";
    out << "complete: " << (r.faces->complete() ? "yes" : "no") << "\n";
    out << "consistent: " << (r.faces->consistent() ? "yes" : "no") << "\n";
    out << "face list: " << join(fn) << "\n";
    for (const auto& e : r.faces->entries) {
      out << "face test " << r.names[e.vertex] << ": " << to_string(e.verdict) << " sufficient "
          << (e.sufficient ? "yes" : "no") << " exact " << to_string(e.exact) << " dimension "
          << format_double(e.dimension) << (e.dimension_excluded ? " excluded" : "");
      if (e.exact == Tri::kNo || e.exact == Tri::kYes) out << " states " << e.states;
      if (e.exact == Tri::kYes) out << " witness " << format_word(e.witness);
      out << "\n";
    }
  }

  auto print_level = [&](const IntersectionGraph& gl, const std::vector<IntersectionClass>& classes) {
    for (const auto& c : classes) {
      out << "level " << gl.level() << " " << join(member_names(r, gl, c.vertex), "&") << ": " << to_string(c.cardinality);
      if (!c.addresses.empty()) out << " " << join(address_strings(c.addresses));
      else out << " dimension " << format_double(c.dimension);
      out << "\n";
    }
  };
  if (r.polyhedral) {
    section("INTERSECTIONS");
    out << "pairs: " << r.polyhedral->pairs.size() << "\n";
    out << "triples: " << r.polyhedral->triples.size() << "\n";
    print_level(*r.pairs, r.polyhedral->pairs);
    print_level(*r.triples, r.polyhedral->triples);

    section("POLYHEDRAL STRUCTURE");
    const auto& p = *r.polyhedral;
    out << "faces: " << p.face_count << "\n";
    out << "edges: " << p.edge_count << "\n";
    out << "vertices: " << p.vertex_count << "\n";
    out << "euler: " << (r.system.n == 3 ? std::to_string(p.euler) : "n/a") << "\n";
    for (const auto& pt : p.points) {
      out << "point " << pt.address.str();
      for (const auto& a : pt.merged) out << " = " << a.str();
      out << "\n";
    }
    out << "opposite face pairs: " << p.opposite.size() << "\n";
    for (const auto& o : p.opposite)
      out << "opposite " << r.names[o.face] << "&-: " << to_string(o.cardinality) << " dimension "
          << format_double(o.dimension) << "\n";
  }

  if (r.faces && r.complete()) {
    section("CENTER/OBSTRUCTION");
    if (!r.obstruction) {
      out << "center: not applicable (requires two digits)\n";
    } else {
      out << "center: " << (r.obstruction->center ? r.obstruction->center->str() : "none") << "\n";
      out << "obstructed: " << (r.obstruction->obstructed ? "yes" : "no") << "\n";
      std::vector<std::string> vs;
      for (std::size_t v : r.obstruction->vertices) vs.push_back(r.names[v]);
      if (!vs.empty()) out << "via: " << join(vs) << "\n";
    }
  }

  if (r.certificate) {
    section("INTERIOR");
    const auto& c = *r.certificate;
    out << "verdict: " << to_string(c.verdict) << "\n";
    if (!c.reason.empty()) out << "reason: " << c.reason << "\n";
    std::vector<std::string> ws;
    for (const auto& w : c.words) ws.push_back(format_word(w));
    if (!ws.empty()) out << "words: " << join(ws) << "\n";
    for (const auto& l : c.face_links)
      out << "link " << format_word(l.p) << " " << format_word(l.q) << ": " << r.names[l.vertex] << "\n";
    for (const auto& h : c.fixed_point_hits) out << "fixed point " << h.address.str() << " in " << format_word(h.piece) << "\n";
    for (const auto& ch : c.checks)
      out << "check " << ch.name << ": " << (ch.passed ? "pass" : "fail") << " " << ch.detail << "\n";
  }
  return out.str();
}

std::string format_json(const AnalysisReport& r, int indent) {
  const TileSystem& ts = r.system;
  json doc;
  json sys;
  sys["name"] = ts.name;
  sys["dimension"] = ts.n;
  sys["matrix"] = json::array();
  for (std::size_t i = 0; i < ts.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < ts.n; ++j) row.push_back(big(ts.M(i, j)));
    sys["matrix"].push_back(row);
  }
  sys["digits"] = json::array();
  for (const auto& k : ts.digits) sys["digits"].push_back(vec(k));
  doc["system"] = sys;

  json spec;
  spec["charpoly"] = json::array();
  for (const auto& c : r.spectrum.charpoly) spec["charpoly"].push_back(big(c));
  spec["moduli"] = json::array();
  for (double x : r.spectrum.root_moduli) spec["moduli"].push_back(num(x));
  spec["expanding"] = r.spectrum.is_expanding;
  spec["self_similar"] = r.spectrum.is_selfsimilar_conjugate;
  spec["cubic_case"] = to_string(r.spectrum.thm23_case);
  doc["spectrum"] = spec;
  doc["complete"] = r.complete();
  doc["cap_exceeded"] = r.cap_exceeded.empty() ? json(nullptr) : json(r.cap_exceeded);

  if (r.graph) {
    const NeighborGraph& g = *r.graph;
    json ng;
    ng["bounds"] = {{"method", to_string(r.bounds->method)}, {"lower", r.bounds->lower}, {"upper", r.bounds->upper}};
    ng["neighbors"] = g.neighbor_count();
    ng["edge_count"] = g.edges().size();
    ng["open_set_condition"] = r.osc;
    ng["vertices"] = json::array();
    for (std::size_t v = 1; v < g.size(); ++v)
      ng["vertices"].push_back({{"name", r.names[v]}, {"vector", vec(g.vector(v))}});
    ng["edges"] = json::array();
    for (const auto& e : g.edges())
      ng["edges"].push_back({{"from", r.names[e.from]}, {"to", r.names[e.to]}, {"label", e.label}, {"partner", e.partner}});
    doc["neighbor_graph"] = ng;
  }
  if (r.tiling) {
    json t;
    t["lattice_tiling"] = r.tiling->ok;
    t["missing"] = json::array();
    for (const auto& [v, label] : r.tiling->missing) t["missing"].push_back({{"vertex", r.names[v]}, {"label", label}});
    t["witness"] = r.tiling_witness ? json(format_word(*r.tiling_witness)) : json(nullptr);
    doc["tiling_existence"] = t;
  }
  if (r.classes) {
    json b;
    json counts;
    for (auto c : {Cardinality::kUncountable, Cardinality::kCountablyInfinite, Cardinality::kFinite,
                   Cardinality::kSingleton})
      counts[to_string(c)] = r.classes->with(c).size();
    b["counts"] = counts;
    b["point_neighbors"] = json::array();
    for (std::size_t v : r.point_neighbors) b["point_neighbors"].push_back(r.names[v]);
    b["vertices"] = json::array();
    for (std::size_t v = 1; v < r.graph->size(); ++v) {
      const auto& vc = r.classes->vertices[v];
      json e{{"name", r.names[v]}, {"cardinality", to_string(vc.cardinality)}};
      if (vc.cardinality != Cardinality::kUncountable && vc.cardinality != Cardinality::kCountablyInfinite)
        e["paths"] = big(vc.paths);
      b["vertices"].push_back(e);
    }
    doc["boundary_classes"] = b;
  }
  if (r.dimensions) {
    json comps = json::array();
    const auto& scc = r.classes->scc;
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
      if (!scc.is_cyclic(c)) continue;
      json members = json::array();
      for (std::size_t v : scc.components[c]) members.push_back(r.names[v]);
      comps.push_back({{"component", c},
                       {"members", members},
                       {"lambda", num(r.dimensions->perron[c].value)},
                       {"method", r.dimensions->perron[c].method},
                       {"dimension", num(r.dimensions->own[c])},
                       {"effective", num(r.dimensions->effective[c])}});
    }
    doc["dimensions"] = {{"components", comps}};
  }
  if (r.faces) {
    json f;
    const auto faces = r.faces->faces();
    f["count"] = faces.size();
    f["complete"] = r.faces->complete();
    f["consistent"] = r.faces->consistent();
    f["faces"] = json::array();
    for (std::size_t v : faces) f["faces"].push_back(r.names[v]);
    f["entries"] = json::array();
    for (const auto& e : r.faces->entries)
      f["entries"].push_back({{"name", r.names[e.vertex]},
                              {"verdict", to_string(e.verdict)},
                              {"sufficient", e.sufficient},
                              {"exact", to_string(e.exact)},
                              {"dimension", num(e.dimension)},
                              {"dimension_excluded", e.dimension_excluded},
                              {"witness", e.exact == Tri::kYes ? json(format_word(e.witness)) : json(nullptr)},
                              {"states", e.states}});
    doc["faces"] = f;
  }
  if (r.polyhedral) {
    auto level = [&](const IntersectionGraph& gl, const std::vector<IntersectionClass>& classes) {
      json out = json::array();
      for (const auto& c : classes)
        out.push_back({{"members", member_names(r, gl, c.vertex)},
                       {"cardinality", to_string(c.cardinality)},
                       {"addresses", address_strings(c.addresses)},
                       {"dimension", num(c.dimension)}});
      return out;
    };
    const auto& p = *r.polyhedral;
    doc["intersections"] = {{"pairs", level(*r.pairs, p.pairs)}, {"triples", level(*r.triples, p.triples)}};
    json ph{{"faces", p.face_count}, {"edges", p.edge_count}, {"vertices", p.vertex_count}, {"euler", r.system.n == 3 ? json(p.euler) : json(nullptr)}};
    ph["points"] = json::array();
    for (const auto& pt : p.points) ph["points"].push_back({{"address", pt.address.str()}, {"merged", address_strings(pt.merged)}});
    ph["opposite"] = json::array();
    for (const auto& o : p.opposite)
      ph["opposite"].push_back(
          {{"face", r.names[o.face]}, {"cardinality", to_string(o.cardinality)}, {"dimension", num(o.dimension)}});
    doc["polyhedral_structure"] = ph;
  }
  if (r.faces && r.complete()) {
    json c;
    c["applicable"] = r.obstruction.has_value();
    if (r.obstruction) {
      c["center"] = r.obstruction->center ? json(r.obstruction->center->str()) : json(nullptr);
      c["obstructed"] = r.obstruction->obstructed;
      c["via"] = json::array();
      for (std::size_t v : r.obstruction->vertices) c["via"].push_back(r.names[v]);
    }
    doc["center_obstruction"] = c;
  }
  if (r.certificate) {
    const auto& c = *r.certificate;
    json in;
    in["verdict"] = to_string(c.verdict);
    in["reason"] = c.reason;
    in["words"] = json::array();
    for (const auto& w : c.words) in["words"].push_back(format_word(w));
    in["face_links"] = json::array();
    for (const auto& l : c.face_links)
      in["face_links"].push_back({{"p", format_word(l.p)}, {"q", format_word(l.q)}, {"face", r.names[l.vertex]}});
    in["fixed_point_hits"] = json::array();
    for (const auto& h : c.fixed_point_hits)
      in["fixed_point_hits"].push_back({{"address", h.address.str()}, {"piece", format_word(h.piece)}});
    in["checks"] = json::array();
    for (const auto& ch : c.checks) in["checks"].push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    doc["interior"] = in;
  }
  return doc.dump(indent) + "\n";
}

}  // namespace tiletopo
