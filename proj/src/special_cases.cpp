#include "taxicab/special_cases.hpp"

namespace taxicab {

const char* to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::kCircle: return "circle";
    case ShapeTag::kRhombus: return "rhombus";
    case ShapeTag::kParallelogram: return "parallelogram";
    case ShapeTag::kHexagon: return "hexagon";
  }
  return "?";
}

HorizontalPlaneSection horizontal_plane_section(const LineParams& line, const Rational& kappa) {
  if (line.horizontal()) {
    throw geometry_error(ErrorCode::kHorizontalLineWithHorizontalPlane,
                         "line parallel to the defining plane");
  }
  ConeSpec cone = make_cone(normalize_plane({0, 0, 1}), line, kappa);
  ShapeTag tag;
  switch (line.klass) {
    case LineClass::kSteep: tag = ShapeTag::kCircle; break;
    case LineClass::kIntermediate: tag = ShapeTag::kHexagon; break;
    case LineClass::kShallow:
      tag = (line.a1 == 0 || line.a2 == 0) ? ShapeTag::kRhombus : ShapeTag::kParallelogram;
      break;
    default: tag = ShapeTag::kParallelogram; break;
  }
  return {build_section(cone), tag};
}

namespace {

Rational sq(const Rational& x) { return x * x; }

// -1 strictly inside, 0 on the boundary, +1 outside: sign of lhs - rhs.
int compare(const Rational& lhs, const Rational& rhs) { return cmp(lhs, rhs); }

StripPosition combine_union(const std::vector<int>& signs) {
  bool inside = false, closure = false;
  for (int s : signs) {
    inside |= s < 0;
    closure |= s <= 0;
  }
  if (inside) return StripPosition::kInside;
  return closure ? StripPosition::kBoundary : StripPosition::kOutside;
}

StripPosition combine_intersection(const std::vector<int>& signs) {
  bool inside = true, closure = true;
  for (int s : signs) {
    inside &= s < 0;
    closure &= s <= 0;
  }
  if (inside) return StripPosition::kInside;
  return closure ? StripPosition::kBoundary : StripPosition::kOutside;
}

}  // namespace

StripPosition u_kappa_position(const Rational& kappa, const Point2& A12) {
  if (kappa <= 0) throw geometry_error(ErrorCode::kNonPositiveKappa, to_string(kappa));
  const Rational &x = A12.x1, &y = A12.x2;
  Rational r2 = sq(x) + sq(y);
  Rational inv = 1 / kappa;
  if (kappa < 1) {
    Rational rho = inv / 2;
    Rational rho2 = sq(rho);
    return combine_union({compare(sq(x - rho) + sq(y), rho2), compare(sq(x + rho) + sq(y), rho2),
                          compare(sq(x) + sq(y - rho), rho2), compare(sq(x) + sq(y + rho), rho2),
                          compare(r2, inv)});
  }
  return combine_intersection({compare(abs(x), inv), compare(abs(y), inv), compare(r2, inv)});
}

UKappaCheck u_kappa_classify_check(const Rational& kappa, const Point2& A12) {
  Triple v = {A12.x1, A12.x2, 1};
  ConicClass k = classify(make_cone(v, v, kappa));
  StripPosition pos = u_kappa_position(kappa, A12);
  ConicClass expected = pos == StripPosition::kInside     ? ConicClass::kEllipse
                        : pos == StripPosition::kBoundary ? ConicClass::kParabola
                                                          : ConicClass::kHyperbola;
  return {pos, k, k == expected};
}

std::optional<Rational> vertex_deviation(const ConeSpec& cone, const Vertex& v) {
  if (!v.location.is_finite()) return std::nullopt;
  const Point2& p = v.location.point();
  const LineParams& l = cone.line;
  if (l.horizontal()) return l.a1 != 0 ? p.x1 / l.a1 : p.x2 / l.a2;
  Point2 u = p - l.base();
  if (v.ref_index == 1) return u.x1;
  if (v.ref_index == 2) return u.x2;
  return l.a1 != 0 ? u.x1 / l.a1 : u.x2 / l.a2;
}

namespace {

bool transitionally_steep(const LineParams& l) {
  return !l.horizontal() && l.dominance.index == 3;
}

}  // namespace

SimilarityReport steep_line_similarity(const PlaneParams& A, const Rational& kappa,
                                       const LineParams& a, const LineParams& b) {
  if (!transitionally_steep(a) || !transitionally_steep(b)) {
    throw geometry_error(ErrorCode::kNotSteep, "both lines must be steep");
  }
  ConeSpec ca = make_cone(A, a, kappa), cb = make_cone(A, b, kappa);
  SimilarityReport rep;
  rep.ratio = ca.N() / cb.N();
  rep.rotated = rep.ratio < 0;
  rep.similar = true;
  std::vector<Vertex> va = vertices(ca), vb = vertices(cb);
  for (size_t k = 0; k < va.size(); ++k) {
    auto da = vertex_deviation(ca, va[k]), db = vertex_deviation(cb, vb[k]);
    if (da.has_value() != db.has_value() || (da && *da != rep.ratio * *db)) {
      rep.similar = false;
    }
  }
  return rep;
}

namespace {

void require_parallel_pair(const PlaneParams& A, const PlaneParams& B) {
  if (A.steepness == PlaneSteepness::kHorizontal || B.steepness == PlaneSteepness::kHorizontal) {
    throw geometry_error(ErrorCode::kHorizontalPlane, "parallel_plane_kappa");
  }
  if (A.A1 * B.A2 != A.A2 * B.A1) {
    throw geometry_error(ErrorCode::kNotParallel, "traces are not parallel");
  }
}

bool steep_or_transitional(const PlaneParams& P) {
  return P.steep_like() || P.steepness == PlaneSteepness::kTransitional;
}

bool shallow_or_transitional(const PlaneParams& P) {
  return P.shallow_like() || P.steepness == PlaneSteepness::kTransitional;
}

// |A1/B1|, or |A2/B2| when the first coordinates vanish.
Rational coefficient_ratio(const PlaneParams& A, const PlaneParams& B) {
  return A.A1 != 0 ? abs(A.A1 / B.A1) : abs(A.A2 / B.A2);
}

// The transitional plane with the same trace direction as P.
PlaneParams transitional_on_pencil(const PlaneParams& P) {
  Rational t = 1 / max_of(abs(P.A1), abs(P.A2));
  return normalize_plane({t * P.A1, t * P.A2, 1});
}

}  // namespace

Rational parallel_plane_kappa(const PlaneParams& A, const PlaneParams& B,
                              const Rational& kappa_A) {
  require_parallel_pair(A, B);
  if (steep_or_transitional(A) && steep_or_transitional(B)) return kappa_A;
  if (shallow_or_transitional(A) && shallow_or_transitional(B)) {
    return coefficient_ratio(A, B) * kappa_A;
  }
  PlaneParams T = transitional_on_pencil(A);
  return parallel_plane_kappa(T, B, parallel_plane_kappa(A, T, kappa_A));
}

Rational parallel_plane_deviation_ratio(const PlaneParams& A, const PlaneParams& B,
                                        const LineParams& a) {
  require_parallel_pair(A, B);
  Rational na = A.A1 * a.a1 + A.A2 * a.a2 + A.delta * a.a3;
  Rational nb = B.A1 * a.a1 + B.A2 * a.a2 + B.delta * a.a3;
  Rational coeff = A.A1 != 0 ? B.A1 / A.A1 : B.A2 / A.A2;
  return na / nb * coeff;
}

Rational taxicab_dist_to_line2(const Point2& p, const Line2& g) {
  return abs(g.eval(p)) / max_of(abs(g.c1), abs(g.c2));
}

Rational focus_directrix_residual(const Point2& focus, const Line2& directrix,
                                  const Rational& kappa, const Point2& p) {
  return taxicab_dist(p, focus) - kappa * taxicab_dist_to_line2(p, directrix);
}

std::optional<Rational> parabola_slope_gap(const ConicSection& section) {
  if (section.klass != ConicClass::kParabola) return std::nullopt;
  std::vector<Point2> ray_dirs, seg_dirs;
  for (const Piece& p : section.pieces) {
    (p.is_ray() ? ray_dirs : seg_dirs).push_back(p.direction());
  }
  if (ray_dirs.size() != 2 || seg_dirs.size() != 2) return std::nullopt;
  bool along_x2 = ray_dirs[0].x1 == 0 && ray_dirs[1].x1 == 0;
  bool along_x1 = ray_dirs[0].x2 == 0 && ray_dirs[1].x2 == 0;
  if (!along_x1 && !along_x2) return std::nullopt;
  std::vector<Rational> slopes;
  for (const Point2& d : seg_dirs) {
    const Rational& run = along_x2 ? d.x1 : d.x2;
    const Rational& rise = along_x2 ? d.x2 : d.x1;
    if (run == 0) return std::nullopt;
    slopes.push_back(rise / run);
  }
  return abs(slopes[0] - slopes[1]);
}

}  // namespace taxicab
