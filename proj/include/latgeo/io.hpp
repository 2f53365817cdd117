#ifndef LATGEO_IO_HPP
#define LATGEO_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "latgeo/critical.hpp"
#include "latgeo/descent.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/flat_torus.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/invariants.hpp"
#include "latgeo/lattice.hpp"
#include "latgeo/simplex.hpp"

namespace latgeo {

using Json = nlohmann::ordered_json;

struct BodyFile {
  std::variant<ConvexPolygon, SimplexN> body;
  std::optional<Lattice2> lattice;
  Json meta = Json::object();

  bool is_polygon() const { return std::holds_alternative<ConvexPolygon>(body); }
  const ConvexPolygon& polygon() const {
    if (!is_polygon()) throw ParseError("expected a planar body, got a " + std::to_string(simplex().dim()) + "-simplex");
    return std::get<ConvexPolygon>(body);
  }
  const SimplexN& simplex() const {
    if (is_polygon()) throw ParseError("expected a simplex, got a polygon");
    return std::get<SimplexN>(body);
  }
};

namespace detail {

inline Scalar scalar_field(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  throw ParseError(where + ": expected a rational string such as \"3/2\"");
}

inline std::vector<Scalar> row_field(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    throw ParseError(where + ": expected an array of " + std::to_string(len) + " coordinates");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < len; ++k) out.push_back(scalar_field(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

}  // namespace detail

/// Reads {"dim": n, "vertices": [[...], ...], "lattice"?: [[..],[..]], "meta"?: {...}}.
inline BodyFile parse_body(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("line " + std::to_string(detail::line_of(text, e.byte)) + ": malformed body file");
  }
  if (!j.is_object()) throw ParseError("body file must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw ParseError("dim: expected a positive integer");
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("vertices: expected an array");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i)
    rows.push_back(detail::row_field(j["vertices"][i], dim, "vertices[" + std::to_string(i) + "]"));

  std::optional<Lattice2> lattice;
  if (j.contains("lattice")) {
    const Json& l = j["lattice"];
    if (dim != 2 || !l.is_array() || l.size() != 2) throw ParseError("lattice: expected two planar basis vectors");
    auto b1 = detail::row_field(l[0], 2, "lattice[0]");
    auto b2 = detail::row_field(l[1], 2, "lattice[1]");
    lattice = Lattice2(Vec2{b1[0], b1[1]}, Vec2{b2[0], b2[1]});
  }
  Json meta = j.contains("meta") ? j["meta"] : Json::object();
  if (!meta.is_object()) throw ParseError("meta: expected an object");

  if (dim == 2) {
    std::vector<Point2> pts;
    for (const auto& r : rows) pts.push_back(Vec2{r[0], r[1]});
    return BodyFile{ConvexPolygon::from_vertices(std::move(pts)), lattice, meta};
  }
  return BodyFile{SimplexN(dim, rows), lattice, meta};
}

inline BodyFile read_body_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_body(ss.str());
}

inline Json to_json(const Vec2& v) { return Json::array({to_string(v.x), to_string(v.y)}); }
inline Json to_json(const IntVec2& v) { return Json::array({v.x, v.y}); }

inline Json to_json(const ConvexPolygon& p) {
  Json a = Json::array();
  for (const auto& v : p.vertices()) a.push_back(to_json(v));
  return a;
}

inline Json body_json(const BodyFile& b) {
  Json j = Json::object();
  Json verts = Json::array();
  if (b.is_polygon()) {
    j["dim"] = 2;
    verts = to_json(b.polygon());
  } else {
    j["dim"] = b.simplex().dim();
    for (const auto& v : b.simplex().vertices()) {
      Json row = Json::array();
      for (const auto& c : v) row.push_back(to_string(c));
      verts.push_back(row);
    }
  }
  j["vertices"] = verts;
  if (b.lattice) j["lattice"] = Json::array({to_json(b.lattice->b1()), to_json(b.lattice->b2())});
  if (!b.meta.empty()) j["meta"] = b.meta;
  return j;
}

/// Two-space indented JSON with one coordinate row per line.
inline std::string serialize_body(const BodyFile& b) {
  Json j = body_json(b);
  auto rows = [](const Json& a) {
    std::string s = "[\n";
    for (std::size_t i = 0; i < a.size(); ++i) s += "    " + a[i].dump(-1, ' ', false) + (i + 1 < a.size() ? ",\n" : "\n");
    return s + "  ]";
  };
  std::string out = "{\n  \"dim\": " + j["dim"].dump() + ",\n  \"vertices\": " + rows(j["vertices"]);
  if (j.contains("lattice")) out += ",\n  \"lattice\": " + rows(j["lattice"]);
  if (j.contains("meta")) out += ",\n  \"meta\": " + j["meta"].dump();
  return out + "\n}\n";
}
inline std::string serialize_body(const ConvexPolygon& p) { return serialize_body(BodyFile{p, std::nullopt}); }
inline std::string serialize_body(const SimplexN& s) { return serialize_body(BodyFile{s, std::nullopt}); }

inline Json to_json(const AvoidanceCertificate& c) {
  Json j = Json::object();
  j["unavoidable"] = c.unavoidable;
  j["witness"] = c.witness ? to_json(c.witness->w) : Json(nullptr);
  Json pts = Json::array();
  for (const auto& z : c.dual_interior_points) pts.push_back(to_json(z));
  j["dual_interior_points"] = pts;
  return j;
}

inline Json to_json(const DeformationStep& s) {
  auto opt = [](const std::optional<Scalar>& t) { return t ? Json(to_string(*t)) : Json("inf"); };
  Json j = Json::object();
  j["vertex"] = to_json(s.start[s.vd.vertex_index]);
  j["kind"] = to_string(s.vd.kind);
  j["direction"] = to_json(s.vd.direction);
  j["slope"] = to_string(s.vd.slope);
  j["tau_plus"] = opt(s.tau_plus);
  j["t_origin"] = opt(s.t_origin);
  j["T"] = to_string(s.T);
  j["event"] = to_string(s.event);
  Json cov = Json::array();
  for (const auto& w : s.event_covectors) cov.push_back(to_json(w));
  j["event_covectors"] = cov;
  j["start"] = to_json(s.start);
  j["end"] = to_json(s.end);
  j["start_area"] = to_string(s.start_area);
  j["end_area"] = to_string(s.end_area);
  return j;
}

inline Json to_json(const DescentCertificate& c) {
  Json j = Json::object();
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  Json types = Json::array();
  for (const auto& t : c.types) types.push_back(Json::array({t.n, t.m, t.k}));
  j["types"] = types;
  j["terminal"] = to_json(c.terminal);
  j["terminal_area"] = to_string(c.terminal_area);
  j["is_minimal"] = c.is_minimal;
  j["strategy_log"] = c.strategy_log;
  return j;
}

inline Json to_json(const ReportEntry& e) {
  Json j = Json::object();
  j["name"] = e.name;
  j["value"] = value_string(e);
  j["exact"] = e.exact.has_value();
  j["bound"] = e.bound;
  j["status"] = to_string(e.status);
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline Json to_json(const InvariantReport& r) {
  Json j = Json::object();
  j["body_digest"] = r.body_digest;
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  j["entries"] = entries;
  j["all_pass"] = r.all_pass();
  return j;
}

inline Json to_json(const SystolicReport& r) {
  Json j = Json::object();
  j["systole"] = to_string(r.systole);
  j["ht_area_times_pi"] = to_string(r.ht_area_times_pi);
  j["ht_area"] = format_double(r.ht_area_times_pi.get_d() / std::numbers::pi);
  if (r.bh_area_over_pi) {
    j["bh_area_over_pi"] = to_string(*r.bh_area_over_pi);
    j["bh_area"] = format_double(r.bh_area_over_pi->get_d() * std::numbers::pi);
  }
  j["general_defect"] = to_string(r.general_defect);
  j["general_holds"] = r.general_holds;
  j["general_equality"] = r.general_equality;
  if (r.reversible_defect) {
    j["reversible_defect"] = to_string(*r.reversible_defect);
    j["reversible_holds"] = r.reversible_holds;
    j["reversible_equality"] = r.reversible_equality;
  }
  j["zoll"] = r.zoll ? Json(*r.zoll) : Json(nullptr);
  return j;
}

inline Json to_json(const CriticalLattice& c) {
  Json j = Json::object();
  j["basis"] = Json::array({to_json(c.lattice.b1()), to_json(c.lattice.b2())});
  j["det"] = format_double(c.delta);
  j["det_exact"] = to_string(c.lattice.det());
  return j;
}

}  // namespace latgeo

#endif  // LATGEO_IO_HPP
