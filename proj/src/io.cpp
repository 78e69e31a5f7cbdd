#include "polyassoc/io.hpp"

#include <algorithm>

namespace polyassoc::io {

namespace {

const Integer max_exact_integer = (Integer(1) << 53) - 1;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

std::vector<Point> parse_loop(const Json& loop, const char* what) {
  if (!loop.is_array()) bad(std::string(what) + " must be an array of points");
  std::vector<Point> out;
  out.reserve(loop.size());
  for (const Json& p : loop) out.push_back(parse_point(p));
  return out;
}

Json label_pairs(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational(v));
  return out;
}

Json event_time(const EventTime& t) {
  if (t.exact()) return rational(t.lo);
  return {{"lo", rational(t.lo)}, {"hi", rational(t.hi)}};
}

}  // namespace

Rational parse_number(const Json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) {
    throw Error(ErrorCode::InvalidNumber, "floating-point coordinate " + value.dump() + "; pass it as a string");
  }
  throw Error(ErrorCode::InvalidNumber, "expected a number, got " + value.dump());
}

Point parse_point(const Json& value) {
  if (!value.is_array() || value.size() != 2) bad("a point must be [x, y], got " + value.dump());
  return Point{parse_number(value[0]), parse_number(value[1])};
}

Polygon parse_polygon(const Json& document, ValidationOptions options) {
  if (!document.is_object()) bad("polygon must be a JSON object");
  auto it = document.find("vertices");
  if (it == document.end()) bad("polygon needs \"vertices\"");
  std::vector<Point> outer = parse_loop(*it, "vertices");
  std::vector<std::vector<Point>> holes;
  if (auto h = document.find("holes"); h != document.end() && !h->is_null()) {
    if (!h->is_array()) bad("\"holes\" must be an array of loops");
    for (const Json& loop : *h) holes.push_back(parse_loop(loop, "hole"));
  }
  if (holes.empty()) return validate_polygon(std::move(outer), options);
  return validate_region(std::move(outer), std::move(holes), options);
}

Json integer(const Integer& value) {
  if (abs(value) <= max_exact_integer) return value.convert_to<std::int64_t>();
  return to_string(value);
}

Json rational(const Rational& value) { return to_string(value); }

Json coordinate(const Rational& value) {
  if (denominator(value) == 1) return integer(numerator(value));
  return to_string(value);
}

Json point(const Point& p) { return {coordinate(p.x), coordinate(p.y)}; }

Json polygon(const std::vector<Point>& vertices) {
  Json vs = Json::array();
  for (const Point& p : vertices) vs.push_back(point(p));
  return {{"vertices", vs}};
}

Json polygon(const Polygon& poly) {
  auto loops = poly.loops_in_label_order();
  Json out = polygon(loops.front());
  if (loops.size() > 1) {
    Json holes = Json::array();
    for (std::size_t i = 1; i < loops.size(); ++i) holes.push_back(polygon(loops[i])["vertices"]);
    out["holes"] = holes;
  }
  return out;
}

Json labels(const Polygon& poly, Diagonal d) {
  int a = poly.label(d.a);
  int b = poly.label(d.b);
  if (a > b) std::swap(a, b);
  return {a, b};
}

Json diagonals(const Polygon& poly, const Diagonalization& d) {
  std::vector<std::pair<int, int>> pairs;
  for (const Diagonal& x : d.diagonals) {
    int a = poly.label(x.a);
    int b = poly.label(x.b);
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  return label_pairs(pairs);
}

Json visibility(const Polygon& poly, const VisibilityGraph& graph) {
  return {{"n", graph.n}, {"edges", label_pairs(labeled_edges(poly, graph))}};
}

Json complex(const Polygon& poly, const ComplexKP& k) {
  Json faces = Json::array();
  for (const Face& f : k.faces) {
    faces.push_back({{"diagonals", diagonals(poly, f.diagonalization)}, {"dim", f.dim}, {"maximal", f.maximal}});
  }
  Json covers = Json::array();
  for (auto [a, b] : k.covers) covers.push_back({a, b});
  return {{"n", k.n},         {"h", k.h},           {"dim", k.dim},
          {"dP", k.dP},       {"faces", faces},     {"covers", covers},
          {"fVector", k.f_vector()}, {"euler", k.euler_characteristic()}};
}

Json flip_graph(const Polygon& poly, const FlipGraph& graph) {
  Json nodes = Json::array();
  for (const Diagonalization& t : graph.nodes) nodes.push_back(diagonals(poly, t));
  Json arcs = Json::array();
  for (auto [a, b] : graph.arcs) arcs.push_back({a, b});
  return {{"nodes", nodes}, {"arcs", arcs}, {"components", graph.components}};
}

Json triangulations(const Polygon& poly, const std::vector<Diagonalization>& all) {
  Json list = Json::array();
  for (const Diagonalization& t : all) list.push_back(diagonals(poly, t));
  return {{"count", all.size()}, {"triangulations", list}};
}

Json theta(const Polygon& poly, const ThetaComplex& t) {
  Json vertices = Json::array();
  for (const Diagonal& d : t.vertices) vertices.push_back(labels(poly, d));
  Json homology = Json::array();
  for (const HomologyGroup& g : t.homology) {
    Json torsion = Json::array();
    for (const Integer& x : g.torsion) torsion.push_back(integer(x));
    homology.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", torsion}});
  }
  return {{"vertices", vertices},
          {"simplices", t.complex.simplices.size()},
          {"facetSize", t.facet_size},
          {"facetCount", t.facet_count},
          {"pure", t.pure},
          {"convexInput", t.convex_input},
          {"reducedHomology", homology},
          {"acyclic", homology_vanishes(t.homology)}};
}

Json realization(const Polygon& poly, const Realization& r) {
  Json coordinate_labels = Json::array();
  for (std::size_t v : r.coordinate_vertices) coordinate_labels.push_back(poly.label(v));
  Json points = Json::array();
  for (const RealizationPoint& p : r.points) {
    Json coords = Json::array();
    for (const Integer& c : p.coords) coords.push_back(integer(c));
    points.push_back({{"triangulation", diagonals(poly, p.triangulation)}, {"coords", coords}});
  }
  return {{"rootEdge", labels(poly, r.root_edge)}, {"coordinateVertices", coordinate_labels}, {"points", points}};
}

Json secondary(const Polygon& poly, const SecondarySummary& s) {
  Json vectors = Json::array();
  for (std::size_t i = 0; i < s.triangulations.size(); ++i) {
    const HeightCertificate& c = s.certificates[i];
    vectors.push_back({{"triangulation", diagonals(poly, s.triangulations[i])},
                       {"phi", rationals(s.area_vectors[i])},
                       {"certificate",
                        {{"w", rationals(c.w)},
                         {"base", integer(c.base)},
                         {"value", rational(c.value)},
                         {"runnerUp", rational(c.runner_up)}}}});
  }
  return {{"area", rational(s.area)},
          {"sumsMatch", s.sums_match},
          {"distinct", s.distinct},
          {"affineRank", s.affine_rank},
          {"areaVectors", vectors}};
}

Json rank(const RankReport& r) {
  return {{"n", r.n}, {"rank", r.rank}, {"minRank", r.min_rank}, {"maxRank", r.max_rank}, {"height", r.height}};
}

Json event(const DeformationEvent& e) {
  Json out = {{"t", event_time(e.t)}, {"kind", std::string(to_string(e.kind))}};
  if (e.edge.first != 0) out["edge"] = {e.edge.first, e.edge.second};
  out["witness"] = e.witness;
  return out;
}

Json event_log(const std::vector<Trajectory>& moves) {
  Json list = Json::array();
  bool truncated = false;
  for (const Trajectory& m : moves) {
    Json events = Json::array();
    for (const DeformationEvent& e : m.events) events.push_back(event(e));
    Json entry = {{"vertex", m.vertex},
                  {"from", point(m.start[static_cast<std::size_t>(m.vertex - 1)])},
                  {"to", point(m.to)},
                  {"events", events},
                  {"rankStart", m.edges_start.size()},
                  {"rankEnd", m.edges_end.size()}};
    if (m.truncated_at) {
      entry["truncatedAt"] = rational(*m.truncated_at);
      truncated = true;
    }
    list.push_back(std::move(entry));
  }
  Json out = {{"moves", list}};
  if (moves.empty()) {
    out["monotone"] = true;
    out["rankStart"] = nullptr;
    out["rankEnd"] = nullptr;
    return out;
  }
  if (truncated) {
    out["monotone"] = false;
    out["truncated"] = true;
  } else {
    const ChainReport report = is_monotone_chain(moves);
    out["monotone"] = report.monotone;
    out["increasing"] = report.increasing;
    out["singleEdgeSteps"] = report.single_edge_steps;
    if (report.first_loss) out["firstLoss"] = {report.first_loss->first, report.first_loss->second};
  }
  out["rankStart"] = moves.front().edges_start.size();
  out["rankEnd"] = moves.back().edges_end.size();
  out["final"] = polygon(moves.back().finish());
  return out;
}

Json star_report(const StarDeformation& star) {
  Json events = Json::array();
  for (const DeformationEvent& e : star.events) events.push_back(event(e));
  Json critical = Json::array();
  for (const EventTime& t : star.critical) critical.push_back(event_time(t));
  Json samples = Json::array();
  for (std::size_t i = 0; i < star.samples.size(); ++i) {
    samples.push_back({{"t", rational(star.samples[i])},
                       {"rank", star.sample_edges[i].size()},
                       {"polygon", polygon(star.at(star.samples[i]))}});
  }
  return {{"path", star.path == StarPath::InverseRadius ? "inverse-radius" : "linear"},
          {"center", point(star.center)},
          {"epsilon", rational(star.epsilon)},
          {"degenerateKernel", star.degenerate_kernel},
          {"monotone", star.monotone},
          {"finalConvex", star.final_convex},
          {"rankStart", star.sample_edges.front().size()},
          {"rankEnd", star.sample_edges.back().size()},
          {"events", events},
          {"critical", critical},
          {"samples", samples}};
}

Json error(const Error& e) {
  Json out = {{"error", e.name()}, {"message", e.what()}};
  if (const auto* big = dynamic_cast<const RegionTooLarge*>(&e)) {
    out["cap"] = big->cap();
    out["reached"] = big->reached();
  }
  return out;
}

}  // namespace polyassoc::io
