#pragma once

#include <optional>

#include "taxicab/cone_model.hpp"
#include "taxicab/section_builder.hpp"

namespace taxicab {

enum class ShapeTag { kCircle, kRhombus, kParallelogram, kHexagon };
const char* to_string(ShapeTag t);

struct HorizontalPlaneSection {
  ConicSection section;
  ShapeTag shape;
};

HorizontalPlaneSection horizontal_plane_section(const LineParams& line, const Rational& kappa);

// Position of (A1, A2) relative to the region where the cone with A = a
// slices to an ellipse. Every comparison is on squared radii.
StripPosition u_kappa_position(const Rational& kappa, const Point2& A12);

struct UKappaCheck {
  StripPosition position;
  ConicClass klass;
  bool consistent;
};

UKappaCheck u_kappa_classify_check(const Rational& kappa, const Point2& A12);

struct SimilarityReport {
  bool similar = false;
  Rational ratio;
  bool rotated = false;  // ratio < 0: the sections differ by a half turn
};

// Signed scalar t with v = a + t * dir(rho^i) for non-horizontal lines, or
// v = t * (a1, a2) for horizontal ones; empty at infinity.
std::optional<Rational> vertex_deviation(const ConeSpec& cone, const Vertex& v);

SimilarityReport steep_line_similarity(const PlaneParams& A, const Rational& kappa,
                                       const LineParams& a, const LineParams& b);

Rational parallel_plane_kappa(const PlaneParams& A, const PlaneParams& B,
                              const Rational& kappa_A);
// (A.a + delta_A) / (B.a + delta_B) * (B1 / A1), with B2/A2 when A1 = 0.
Rational parallel_plane_deviation_ratio(const PlaneParams& A, const PlaneParams& B,
                                        const LineParams& a);

// |c1 p1 + c2 p2 + c0| / max(|c1|, |c2|).
Rational taxicab_dist_to_line2(const Point2& p, const Line2& g);
Rational focus_directrix_residual(const Point2& focus, const Line2& directrix,
                                  const Rational& kappa, const Point2& p);

// |slope difference| of the two bounded edges of a parabola whose two rays
// are parallel to one coordinate axis; empty when that shape is absent.
std::optional<Rational> parabola_slope_gap(const ConicSection& section);

}  // namespace taxicab
