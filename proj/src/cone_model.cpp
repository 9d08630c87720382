#include "taxicab/cone_model.hpp"

#include <algorithm>
#include <tuple>

namespace taxicab {

const char* to_string(PlaneSteepness s) {
  switch (s) {
    case PlaneSteepness::kShallow: return "shallow";
    case PlaneSteepness::kTransitional: return "transitional";
    case PlaneSteepness::kSteep: return "steep";
    case PlaneSteepness::kVertical: return "vertical";
    case PlaneSteepness::kHorizontal: return "horizontal";
  }
  return "?";
}

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::kSteep: return "steep";
    case LineClass::kShallow: return "shallow";
    case LineClass::kIntermediate: return "intermediate";
    case LineClass::kTransitional: return "transitional";
    case LineClass::kHorizontal: return "horizontal";
  }
  return "?";
}

const char* to_string(StripPosition p) {
  switch (p) {
    case StripPosition::kInside: return "inside";
    case StripPosition::kBoundary: return "boundary";
    case StripPosition::kOutside: return "outside";
  }
  return "?";
}

namespace {

// Scales (x, y) != 0 to a primitive integer pair with first nonzero positive.
std::pair<Rational, Rational> canonical_pair(const Rational& x, const Rational& y) {
  Point2 p = canonical_axis({x, y});
  return {p.x1, p.x2};
}

void require_nonzero(const Triple& raw, const char* what) {
  if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) {
    throw geometry_error(ErrorCode::kZeroVector, what);
  }
}

}  // namespace

PlaneParams normalize_plane(const Triple& raw) {
  require_nonzero(raw, "plane parameters");
  PlaneParams p;
  if (raw[2] != 0) {
    p.A1 = raw[0] / raw[2];
    p.A2 = raw[1] / raw[2];
    p.delta = 1;
  } else {
    std::tie(p.A1, p.A2) = canonical_pair(raw[0], raw[1]);
    p.delta = 0;
  }
  Rational m12 = max_of(abs(p.A1), abs(p.A2));
  p.M = max_of(m12, Rational(p.delta));
  if (p.delta == 0) {
    p.steepness = PlaneSteepness::kVertical;
  } else if (m12 == 0) {
    p.steepness = PlaneSteepness::kHorizontal;
  } else if (m12 < 1) {
    p.steepness = PlaneSteepness::kShallow;
  } else if (m12 == 1) {
    p.steepness = PlaneSteepness::kTransitional;
  } else {
    p.steepness = PlaneSteepness::kSteep;
  }
  return p;
}

LineParams normalize_line(const Triple& raw) {
  require_nonzero(raw, "line parameters");
  LineParams l;
  if (raw[2] != 0) {
    l.a1 = raw[0] / raw[2];
    l.a2 = raw[1] / raw[2];
    l.a3 = 1;
  } else {
    std::tie(l.a1, l.a2) = canonical_pair(raw[0], raw[1]);
    l.a3 = 0;
  }
  l.dominance = dominance_class(l.coeffs());
  using Tag = DominanceClass::Tag;
  if (l.a3 == 0) {
    l.klass = LineClass::kHorizontal;
  } else if (l.dominance.tag == Tag::kTransitionallyDominant) {
    l.klass = LineClass::kTransitional;
  } else if (l.dominance.tag == Tag::kNone) {
    l.klass = LineClass::kIntermediate;
  } else {
    l.klass = l.dominance.index == 3 ? LineClass::kSteep : LineClass::kShallow;
  }
  return l;
}

Rational ConeSpec::N() const {
  return plane.A1 * line.a1 + plane.A2 * line.a2 + plane.delta * line.a3;
}

ConeSpec make_cone(const PlaneParams& plane, const LineParams& line, const Rational& kappa) {
  if (kappa <= 0) throw geometry_error(ErrorCode::kNonPositiveKappa, to_string(kappa));
  ConeSpec cone{plane, line, kappa};
  if (cone.N() == 0) {
    throw geometry_error(ErrorCode::kDegenerateCone, "the line lies in the plane");
  }
  return cone;
}

ConeSpec make_cone(const Triple& A, const Triple& a, const Rational& kappa) {
  return make_cone(normalize_plane(A), normalize_line(a), kappa);
}

std::optional<Line2> trace_line_PS(const PlaneParams& plane) {
  if (plane.A1 == 0 && plane.A2 == 0) return std::nullopt;
  return Line2::make(plane.A1, plane.A2, Rational(plane.delta));
}

std::vector<int> active_reference_indices(const LineParams& line) {
  if (line.horizontal()) return {3};
  if (line.klass == LineClass::kIntermediate) return {1, 2, 3};
  switch (line.dominance.index) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    default: return {1, 2};
  }
}

Point2 reference_direction(const LineParams& line, int i) {
  if (i == 1) return {1, 0};
  if (i == 2) return {0, 1};
  return line.base();
}

std::vector<RefLine> reference_lines(const LineParams& line) {
  std::vector<int> active = active_reference_indices(line);
  auto is_active = [&](int i) {
    return std::find(active.begin(), active.end(), i) != active.end();
  };
  std::vector<RefLine> out;
  if (!line.horizontal()) {
    out.push_back({1, Line2::make(0, 1, -line.a2), is_active(1)});
    out.push_back({2, Line2::make(1, 0, -line.a1), is_active(2)});
  }
  if (line.a1 != 0 || line.a2 != 0) {
    out.push_back({3, Line2::make(line.a2, -line.a1, 0), is_active(3)});
  }
  return out;
}

CharStrip characterizing_strip(const ConeSpec& cone) {
  return {cone.plane.A1, cone.plane.A2, cone.m_over_kappa()};
}

StripPosition strip_position(const CharStrip& strip, const Point2& p) {
  int c = cmp(abs(strip.A1 * p.x1 + strip.A2 * p.x2), strip.half_width);
  if (c < 0) return StripPosition::kInside;
  return c == 0 ? StripPosition::kBoundary : StripPosition::kOutside;
}

Rational dist_to_plane(const Point3& x, const PlaneParams& A) {
  return dist_to_plane(x, A.coeffs());
}

Rational dist_to_line(const Point3& x, const LineParams& a) {
  return dist_to_line(x, a.coeffs());
}

Rational residual(const ConeSpec& cone, const Point2& p) {
  Point3 x = Point3::lift(p);
  return dist_to_line(x, cone.line) - cone.kappa * dist_to_plane(x, cone.plane);
}

}  // namespace taxicab
