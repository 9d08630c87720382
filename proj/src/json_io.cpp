#include "taxicab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace taxicab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw geometry_error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Triple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected a triple");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json line_json(const Line2& g) {
  return Json::array({rational_json(g.c1), rational_json(g.c2), rational_json(g.c0)});
}

Line2 line_from_json(const Json& j) {
  Triple c = triple_from_json(j);
  return Line2::make(c[0], c[1], c[2]);
}

Json extended_json(Json obj, const ExtendedPoint& p) {
  if (p.is_finite()) {
    obj["at"] = point_json(p.point());
  } else {
    obj["at_infinity"] = point_json(p.direction());
  }
  return obj;
}

ExtendedPoint extended_from_json(const Json& j) {
  if (j.contains("at")) return ExtendedPoint::finite(point_from_json(j.at("at")));
  return ExtendedPoint::at_infinity(point_from_json(field(j, "at_infinity")));
}

ConicClass class_from_string(const std::string& s) {
  if (s == "ellipse") return ConicClass::kEllipse;
  if (s == "parabola") return ConicClass::kParabola;
  if (s == "hyperbola") return ConicClass::kHyperbola;
  bad("unknown class '" + s + "'");
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  bad("rational must be a \"p/q\" string or an integer");
}

Json point_json(const Point2& p) { return Json::array({rational_json(p.x1), rational_json(p.x2)}); }

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected a point pair");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Triple parse_triple(const std::string& text) {
  std::vector<Rational> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    vals.push_back(parse_rational(item));
  }
  if (vals.size() != 3) bad("expected three comma-separated rationals: '" + text + "'");
  return {vals[0], vals[1], vals[2]};
}

ConeSpec cone_from_json(const Json& j) {
  return make_cone(triple_from_json(field(j, "A")), triple_from_json(field(j, "a")),
                   rational_from_json(field(j, "kappa")));
}

Json cone_json(const ConeSpec& cone) {
  Json j;
  j["A"] = Json::array({rational_json(cone.plane.A1), rational_json(cone.plane.A2),
                        rational_json(cone.plane.delta)});
  j["a"] = Json::array({rational_json(cone.line.a1), rational_json(cone.line.a2),
                        rational_json(cone.line.a3)});
  j["kappa"] = rational_json(cone.kappa);
  return j;
}

ConeSpec load_cone(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  return cone_from_json(j);
}

Json section_json(const ConicSection& s) {
  Json j;
  j["class"] = to_string(s.klass);
  Json pieces = Json::array();
  for (const Piece& p : s.pieces) {
    Json e;
    if (p.is_segment()) {
      e["kind"] = "segment";
      e["a"] = point_json(p.as_segment().a);
      e["b"] = point_json(p.as_segment().b);
    } else {
      e["kind"] = "ray";
      e["base"] = point_json(p.as_ray().base);
      e["dir"] = point_json(p.as_ray().direction);
    }
    pieces.push_back(e);
  }
  j["pieces"] = pieces;
  Json verts = Json::array();
  for (const Vertex& v : s.vertices) {
    Json e;
    e["label"] = v.label();
    e["ref"] = v.ref_index;
    e["sign"] = v.sign;
    verts.push_back(extended_json(e, v.location));
  }
  j["vertices"] = verts;
  Json aux = Json::array();
  for (const AuxPoint& w : s.aux_points) {
    Json e;
    e["label"] = w.label();
    e["active"] = w.active;
    aux.push_back(extended_json(e, w.location));
  }
  j["aux"] = aux;
  j["warnings"] = s.warnings;
  j["trace"] = s.trace ? line_json(*s.trace) : Json(nullptr);
  Json refs = Json::array();
  for (const RefLine& r : s.ref_lines) {
    refs.push_back({{"index", r.index}, {"line", line_json(r.line)}, {"active", r.active}});
  }
  j["ref_lines"] = refs;
  return j;
}

ConicSection section_from_json(const Json& j) {
  ConicSection s;
  s.klass = class_from_string(field(j, "class").get<std::string>());
  for (const Json& e : field(j, "pieces")) {
    std::string kind = field(e, "kind").get<std::string>();
    if (kind == "segment") {
      s.pieces.push_back(Piece::segment(point_from_json(field(e, "a")), point_from_json(field(e, "b"))));
    } else if (kind == "ray") {
      s.pieces.push_back(Piece::ray(point_from_json(field(e, "base")), point_from_json(field(e, "dir"))));
    } else {
      bad("unknown piece kind '" + kind + "'");
    }
  }
  if (j.contains("vertices")) {
    for (const Json& e : j.at("vertices")) {
      s.vertices.push_back({field(e, "ref").get<int>(), field(e, "sign").get<int>(),
                            extended_from_json(e)});
    }
  }
  if (j.contains("aux")) {
    for (const Json& e : j.at("aux")) {
      std::string label = field(e, "label").get<std::string>();
      AuxPoint w{AuxPoint::Family::kPair, 0, 0, label.back() == '+' ? 1 : -1,
                 extended_from_json(e), field(e, "active").get<bool>()};
      if (label.rfind("wII", 0) == 0) {
        w.family = AuxPoint::Family::kII;
      } else if (label.rfind("wI", 0) == 0) {
        w.family = AuxPoint::Family::kI;
      } else if (label.size() == 4) {
        w.i = label[1] - '0';
        w.j = label[2] - '0';
      }
      s.aux_points.push_back(w);
    }
  }
  if (j.contains("warnings")) s.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("trace") && !j.at("trace").is_null()) s.trace = line_from_json(j.at("trace"));
  if (j.contains("ref_lines")) {
    for (const Json& e : j.at("ref_lines")) {
      s.ref_lines.push_back({field(e, "index").get<int>(), line_from_json(field(e, "line")),
                             e.value("active", true)});
    }
  }
  return s;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["grid_points"] = r.grid_points;
  j["grid_zero_points"] = r.grid_zero_points;
  j["sampled_points"] = r.sampled_points;
  j["transects"] = r.transects;
  j["vertices_checked"] = r.vertices_checked;
  j["max_abs_residual_on_pieces"] = rational_json(r.max_abs_residual_on_pieces);
  j["min_abs_residual_off_section"] =
      r.min_abs_residual_off_section ? rational_json(*r.min_abs_residual_off_section) : Json(nullptr);
  Json v = Json::array();
  for (const Violation& x : r.violations) {
    v.push_back({{"kind", x.kind}, {"at", point_json(x.where)}, {"detail", x.detail}});
  }
  j["violations"] = v;
  return j;
}

}  // namespace taxicab
