#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taxicab/cone_model.hpp"
#include "taxicab/section_builder.hpp"

namespace taxicab {

struct OracleConfig {
  int grid_n = 201;
  Rational t_scan_range = 100;
  int t_scan_steps = 10001;
  int refine_iters = 200;
  double tol = 1e-9;

  void validate() const;
};

// Scan plus ternary refinement of the convex t -> sum |x_i - a_i t|.
double numeric_dist_to_line(const Point3& x, const LineParams& a, const OracleConfig& cfg = {});
// Minimum over the axis-parallel distances to the plane.
double numeric_dist_to_plane(const Point3& x, const PlaneParams& A);
double numeric_residual(const ConeSpec& cone, double x1, double x2, const OracleConfig& cfg = {});

// Parametrizations along rho^i: x1 = t on rho^1, x2 = t on rho^2,
// a + t(a1, a2) on rho^3, and t(a1, a2) for horizontal lines.
std::pair<double, double> reference_point(const ConeSpec& cone, int ref_index, double t);
std::optional<Rational> reference_parameter(const ConeSpec& cone, int ref_index,
                                            const Point2& p);

double vertex_bisection(const ConeSpec& cone, int ref_index, double lo, double hi,
                        const OracleConfig& cfg = {});
// Every sign change of the residual on a uniform scan of [lo, hi], bisected.
std::vector<double> scan_roots(const ConeSpec& cone, int ref_index, double lo, double hi,
                               int steps, const OracleConfig& cfg = {});

struct Bbox {
  Rational x0, y0, x1, y1;
};

// Integer-rounded box around every finite point of the section, padded by 1.
Bbox section_bbox(const ConicSection& section);

struct GridSample {
  Point2 p;
  Rational residual;
};

std::vector<GridSample> grid_residual_scan(const ConeSpec& cone, const Bbox& box,
                                           const OracleConfig& cfg = {});

struct TransectZeros {
  std::vector<Point2> points;
  std::vector<std::pair<Point2, Point2>> intervals;
};

// Exact zero set of the residual on {p0 + t d : |t| <= range}.
TransectZeros transect_zeros(const ConeSpec& cone, const Point2& p0, const Point2& d,
                             const Rational& range);
// Transversal crossings of the pieces with the same segment of line.
std::vector<Point2> transect_piece_hits(const std::vector<Piece>& pieces, const Point2& p0,
                                        const Point2& d, const Rational& range);

struct Violation {
  std::string kind;
  Point2 where;
  std::string detail;
};

struct VerificationReport {
  long grid_points = 0;
  long grid_zero_points = 0;
  long sampled_points = 0;
  long transects = 0;
  int vertices_checked = 0;
  Rational max_abs_residual_on_pieces = 0;
  std::optional<Rational> min_abs_residual_off_section;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  std::optional<Bbox> box;  // default: section_bbox
  int samples_per_piece = 50;
  int transects = 40;
  bool bisect_vertices = true;
  std::uint64_t seed = 1;
};

VerificationReport verify_section(const ConeSpec& cone, const ConicSection& section,
                                  const VerifyOptions& opts = {}, const OracleConfig& cfg = {});

}  // namespace taxicab
