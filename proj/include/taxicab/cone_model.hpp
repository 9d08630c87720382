#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxicab/exact_geometry.hpp"
#include "taxicab/taxicab_metric.hpp"

namespace taxicab {

enum class PlaneSteepness { kShallow, kTransitional, kSteep, kVertical, kHorizontal };
enum class LineClass { kSteep, kShallow, kIntermediate, kTransitional, kHorizontal };
enum class StripPosition { kInside, kBoundary, kOutside };

const char* to_string(PlaneSteepness s);
const char* to_string(LineClass c);
const char* to_string(StripPosition p);

struct PlaneParams {
  Rational A1;
  Rational A2;
  int delta = 1;
  Rational M;
  PlaneSteepness steepness = PlaneSteepness::kHorizontal;

  Triple coeffs() const { return {A1, A2, Rational(delta)}; }
  // A1*x1 + A2*x2 + delta, the plane equation restricted to x3 = 1.
  Rational h(const Point2& p) const { return A1 * p.x1 + A2 * p.x2 + delta; }
  bool steep_like() const {
    return steepness == PlaneSteepness::kSteep || steepness == PlaneSteepness::kVertical;
  }
  bool shallow_like() const {
    return steepness == PlaneSteepness::kShallow ||
           steepness == PlaneSteepness::kHorizontal;
  }
};

struct LineParams {
  Rational a1;
  Rational a2;
  int a3 = 1;
  DominanceClass dominance;
  LineClass klass = LineClass::kSteep;

  Triple coeffs() const { return {a1, a2, Rational(a3)}; }
  Point2 base() const { return {a1, a2}; }
  bool horizontal() const { return a3 == 0; }
};

struct ConeSpec {
  PlaneParams plane;
  LineParams line;
  Rational kappa;

  // A1*a1 + A2*a2 + delta*a3.
  Rational N() const;
  // M / kappa.
  Rational m_over_kappa() const { return plane.M / kappa; }
};

struct CharStrip {
  Rational A1;
  Rational A2;
  Rational half_width;
};

struct RefLine {
  int index;
  Line2 line;
  bool active;
};

PlaneParams normalize_plane(const Triple& raw);
LineParams normalize_line(const Triple& raw);
ConeSpec make_cone(const PlaneParams& plane, const LineParams& line, const Rational& kappa);
ConeSpec make_cone(const Triple& A, const Triple& a, const Rational& kappa);

std::optional<Line2> trace_line_PS(const PlaneParams& plane);
std::vector<RefLine> reference_lines(const LineParams& line);
std::vector<int> active_reference_indices(const LineParams& line);
// Direction of rho^i; (a1, a2) for i = 3.
Point2 reference_direction(const LineParams& line, int i);

CharStrip characterizing_strip(const ConeSpec& cone);
StripPosition strip_position(const CharStrip& strip, const Point2& p);

Rational dist_to_plane(const Point3& x, const PlaneParams& A);
Rational dist_to_line(const Point3& x, const LineParams& a);
// d(x, l) - kappa * d(x, P) at the lift of p to x3 = 1.
Rational residual(const ConeSpec& cone, const Point2& p);

}  // namespace taxicab
