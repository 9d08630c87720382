#include "taxicab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace taxicab {

void OracleConfig::validate() const {
  if (grid_n < 3 || grid_n % 2 == 0) {
    throw geometry_error(ErrorCode::kInvalidArgument, "grid_n must be odd and >= 3");
  }
  if (!(tol > 0)) throw geometry_error(ErrorCode::kInvalidArgument, "tol must be positive");
  if (t_scan_steps < 3 || refine_iters < 1 || t_scan_range <= 0) {
    throw geometry_error(ErrorCode::kInvalidArgument, "scan parameters");
  }
}

double numeric_dist_to_line(const Point3& x, const LineParams& a, const OracleConfig& cfg) {
  const double xs[3] = {x.x1.get_d(), x.x2.get_d(), x.x3.get_d()};
  const double as[3] = {a.a1.get_d(), a.a2.get_d(), static_cast<double>(a.a3)};
  auto f = [&](double t) {
    return std::fabs(xs[0] - as[0] * t) + std::fabs(xs[1] - as[1] * t) +
           std::fabs(xs[2] - as[2] * t);
  };
  double range = cfg.t_scan_range.get_d();
  int n = cfg.t_scan_steps;
  double step = 2 * range / (n - 1);
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    double v = f(-range + k * step);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  double lo = -range + std::max(best - 1, 0) * step;
  double hi = -range + std::min(best + 1, n - 1) * step;
  for (int it = 0; it < cfg.refine_iters; ++it) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) <= f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return std::min(best_val, f((lo + hi) / 2));
}

double numeric_dist_to_plane(const Point3& x, const PlaneParams& A) {
  const double c[3] = {A.A1.get_d(), A.A2.get_d(), static_cast<double>(A.delta)};
  double value = c[0] * x.x1.get_d() + c[1] * x.x2.get_d() + c[2] * x.x3.get_d();
  double best = std::numeric_limits<double>::infinity();
  for (double ci : c) {
    if (ci != 0) best = std::min(best, std::fabs(value / ci));
  }
  return best;
}

double numeric_residual(const ConeSpec& cone, double x1, double x2, const OracleConfig& cfg) {
  Point3 x{Rational(x1), Rational(x2), Rational(1)};
  return numeric_dist_to_line(x, cone.line, cfg) -
         cone.kappa.get_d() * numeric_dist_to_plane(x, cone.plane);
}

std::pair<double, double> reference_point(const ConeSpec& cone, int ref_index, double t) {
  double a1 = cone.line.a1.get_d(), a2 = cone.line.a2.get_d();
  if (cone.line.horizontal()) return {t * a1, t * a2};
  if (ref_index == 1) return {t, a2};
  if (ref_index == 2) return {a1, t};
  return {a1 + t * a1, a2 + t * a2};
}

std::optional<Rational> reference_parameter(const ConeSpec& cone, int ref_index,
                                            const Point2& p) {
  const LineParams& l = cone.line;
  if (l.horizontal()) return l.a1 != 0 ? p.x1 / l.a1 : p.x2 / l.a2;
  if (ref_index == 1) return p.x1;
  if (ref_index == 2) return p.x2;
  if (l.a1 == 0 && l.a2 == 0) return std::nullopt;
  return l.a1 != 0 ? (p.x1 - l.a1) / l.a1 : (p.x2 - l.a2) / l.a2;
}

namespace {

double residual_on_ref(const ConeSpec& cone, int ref_index, double t, const OracleConfig& cfg) {
  auto [x1, x2] = reference_point(cone, ref_index, t);
  return numeric_residual(cone, x1, x2, cfg);
}

double bisect(const ConeSpec& cone, int ref_index, double lo, double hi, double glo,
              const OracleConfig& cfg) {
  for (int it = 0; it < cfg.refine_iters && hi - lo > 0; ++it) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    double gm = residual_on_ref(cone, ref_index, mid, cfg);
    if (gm == 0) return mid;
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

double vertex_bisection(const ConeSpec& cone, int ref_index, double lo, double hi,
                        const OracleConfig& cfg) {
  double glo = residual_on_ref(cone, ref_index, lo, cfg);
  double ghi = residual_on_ref(cone, ref_index, hi, cfg);
  if (glo == 0) return lo;
  if (ghi == 0) return hi;
  if ((glo < 0) == (ghi < 0)) {
    throw geometry_error(ErrorCode::kNoSignChange, "residual keeps its sign on the interval");
  }
  return bisect(cone, ref_index, lo, hi, glo, cfg);
}

std::vector<double> scan_roots(const ConeSpec& cone, int ref_index, double lo, double hi,
                               int steps, const OracleConfig& cfg) {
  std::vector<double> roots;
  double step = (hi - lo) / steps;
  double t0 = lo, g0 = residual_on_ref(cone, ref_index, lo, cfg);
  if (g0 == 0) roots.push_back(lo);
  for (int k = 1; k <= steps; ++k) {
    double t1 = lo + k * step;
    double g1 = residual_on_ref(cone, ref_index, t1, cfg);
    if (g1 == 0) {
      roots.push_back(t1);
    } else if (g0 != 0 && (g0 < 0) != (g1 < 0)) {
      roots.push_back(bisect(cone, ref_index, t0, t1, g0, cfg));
    }
    t0 = t1;
    g0 = g1;
  }
  return roots;
}

namespace {

std::vector<Point2> finite_points(const ConicSection& section) {
  std::vector<Point2> pts;
  for (const Vertex& v : section.vertices) {
    if (v.location.is_finite()) pts.push_back(v.location.point());
  }
  for (const Piece& p : section.pieces) {
    if (p.is_segment()) {
      pts.push_back(p.as_segment().a);
      pts.push_back(p.as_segment().b);
    } else {
      pts.push_back(p.as_ray().base);
    }
  }
  return pts;
}

Rational floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational ceil_q(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

bool on_any_piece(const std::vector<Piece>& pieces, const Point2& p) {
  return std::any_of(pieces.begin(), pieces.end(), [&](const Piece& pc) { return pc.contains(p); });
}

}  // namespace

Bbox section_bbox(const ConicSection& section) {
  std::vector<Point2> pts = finite_points(section);
  if (pts.empty()) return {-1, -1, 1, 1};
  Bbox b{pts[0].x1, pts[0].x2, pts[0].x1, pts[0].x2};
  for (const Point2& p : pts) {
    b.x0 = std::min(b.x0, p.x1);
    b.y0 = std::min(b.y0, p.x2);
    b.x1 = std::max(b.x1, p.x1);
    b.y1 = std::max(b.y1, p.x2);
  }
  return {floor_q(b.x0) - 1, floor_q(b.y0) - 1, ceil_q(b.x1) + 1, ceil_q(b.y1) + 1};
}

std::vector<GridSample> grid_residual_scan(const ConeSpec& cone, const Bbox& box,
                                           const OracleConfig& cfg) {
  cfg.validate();
  int n = cfg.grid_n;
  Rational sx = (box.x1 - box.x0) / (n - 1), sy = (box.y1 - box.y0) / (n - 1);
  std::vector<GridSample> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Point2 p{box.x0 + c * sx, box.y0 + r * sy};
      Rational g = residual(cone, p);
      out.push_back({std::move(p), std::move(g)});
    }
  }
  return out;
}

namespace {

// Zeros of these affine forms on S are where some absolute value in the
// residual switches branch.
std::vector<std::array<Rational, 3>> breakpoint_forms(const ConeSpec& cone) {
  std::vector<std::array<Rational, 3>> forms;
  if (cone.plane.A1 != 0 || cone.plane.A2 != 0) {
    forms.push_back({cone.plane.A1, cone.plane.A2, Rational(cone.plane.delta)});
  }
  Triple a = cone.line.coeffs();
  for (int i = 0; i < 3; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      std::array<Rational, 3> c = {0, 0, 0};
      c[j] += 1;
      c[i] -= a[j] / a[i];
      forms.push_back(c);
    }
  }
  return forms;
}

std::vector<Rational> partials(const Point2& p, const Triple& a) {
  std::vector<Rational> out;
  Point3 x = Point3::lift(p);
  for (int i = 1; i <= 3; ++i) {
    if (auto d = line_partial_dist(x, a, i)) out.push_back(*d);
  }
  return out;
}

}  // namespace

TransectZeros transect_zeros(const ConeSpec& cone, const Point2& p0, const Point2& d,
                             const Rational& range) {
  std::set<Rational> bps = {-range, range};
  for (const auto& c : breakpoint_forms(cone)) {
    Rational rate = c[0] * d.x1 + c[1] * d.x2;
    if (rate == 0) continue;
    Rational t = -(c[0] * p0.x1 + c[1] * p0.x2 + c[2]) / rate;
    if (-range < t && t < range) bps.insert(t);
  }
  auto P = [&](const Rational& t) { return p0 + t * d; };
  Triple a = cone.line.coeffs();
  std::vector<Rational> sorted(bps.begin(), bps.end());
  for (size_t k = 0; k + 1 < sorted.size(); ++k) {
    std::vector<Rational> f0 = partials(P(sorted[k]), a), f1 = partials(P(sorted[k + 1]), a);
    for (size_t i = 0; i < f0.size(); ++i) {
      for (size_t j = i + 1; j < f0.size(); ++j) {
        Rational d0 = f0[i] - f0[j], d1 = f1[i] - f1[j];
        if (sign(d0) * sign(d1) < 0) bps.insert(sorted[k] + (sorted[k + 1] - sorted[k]) * d0 / (d0 - d1));
      }
    }
  }
  sorted.assign(bps.begin(), bps.end());
  std::vector<Rational> g;
  for (const Rational& t : sorted) g.push_back(residual(cone, P(t)));
  TransectZeros out;
  std::vector<bool> in_interval(sorted.size(), false);
  for (size_t k = 0; k + 1 < sorted.size(); ++k) {
    if (g[k] == 0 && g[k + 1] == 0) {
      out.intervals.push_back({P(sorted[k]), P(sorted[k + 1])});
      in_interval[k] = in_interval[k + 1] = true;
    }
  }
  for (size_t k = 0; k < sorted.size(); ++k) {
    if (g[k] == 0 && !in_interval[k]) out.points.push_back(P(sorted[k]));
    if (k + 1 < sorted.size() && sign(g[k]) * sign(g[k + 1]) < 0) {
      out.points.push_back(P(sorted[k] + (sorted[k + 1] - sorted[k]) * g[k] / (g[k] - g[k + 1])));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<Point2> transect_piece_hits(const std::vector<Piece>& pieces, const Point2& p0,
                                        const Point2& d, const Rational& range) {
  std::vector<Point2> hits;
  for (const Piece& pc : pieces) {
    Point2 base = pc.is_segment() ? pc.as_segment().a : pc.as_ray().base;
    Point2 u = pc.direction();
    Rational den = cross(d, u);
    if (den == 0) continue;
    Point2 w = base - p0;
    Rational t = cross(w, u) / den, s = cross(w, d) / den;
    bool within = pc.is_segment() ? (s >= 0 && s <= 1) : s >= 0;
    if (within && abs(t) <= range) hits.push_back(p0 + t * d);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

namespace {

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, int den) {
  std::uniform_int_distribution<int> dist(0, den);
  return lo + (hi - lo) * Rational(dist(rng), den);
}

void check_grid(const ConeSpec& cone, const ConicSection& sec, const Bbox& box,
                const OracleConfig& cfg, VerificationReport& rep) {
  for (const GridSample& s : grid_residual_scan(cone, box, cfg)) {
    ++rep.grid_points;
    bool on = on_any_piece(sec.pieces, s.p);
    if (s.residual == 0) {
      ++rep.grid_zero_points;
      if (!on) rep.violations.push_back({"uncovered_grid_zero", s.p, "residual 0 off the pieces"});
    } else if (on) {
      rep.violations.push_back({"nonzero_on_piece", s.p, to_string(s.residual)});
    } else if (!rep.min_abs_residual_off_section || abs(s.residual) < *rep.min_abs_residual_off_section) {
      rep.min_abs_residual_off_section = abs(s.residual);
    }
  }
}

void check_samples(const ConeSpec& cone, const ConicSection& sec, const VerifyOptions& opts,
                   std::mt19937_64& rng, VerificationReport& rep) {
  for (const Piece& pc : sec.pieces) {
    Point2 normal{-pc.direction().x2, pc.direction().x1};
    for (int k = 0; k < opts.samples_per_piece; ++k) {
      Rational t = random_rational(rng, 0, pc.is_segment() ? 1 : 20, 997);
      Point2 p = pc.at(t);
      Rational g = abs(residual(cone, p));
      ++rep.sampled_points;
      rep.max_abs_residual_on_pieces = max_of(rep.max_abs_residual_on_pieces, g);
      if (g != 0) rep.violations.push_back({"nonzero_on_piece", p, to_string(g)});
      Rational eps = Rational(1, 64 + k);
      Point2 off = p + eps * normal;
      if (!on_any_piece(sec.pieces, off) && residual(cone, off) == 0) {
        rep.violations.push_back({"zero_off_section", off, "perturbed sample"});
      }
    }
  }
}

void check_transects(const ConeSpec& cone, const ConicSection& sec, const Bbox& box,
                     const VerifyOptions& opts, std::mt19937_64& rng, VerificationReport& rep) {
  std::uniform_int_distribution<int> dir(-3, 3);
  Rational range = (box.x1 - box.x0) + (box.y1 - box.y0);
  for (int k = 0; k < opts.transects; ++k) {
    Point2 d{dir(rng), dir(rng)};
    if (is_zero(d)) d = {1, 2};
    Point2 p0{random_rational(rng, box.x0, box.x1, 1009), random_rational(rng, box.y0, box.y1, 1013)};
    TransectZeros z = transect_zeros(cone, p0, d, range);
    std::vector<Point2> hits = transect_piece_hits(sec.pieces, p0, d, range);
    ++rep.transects;
    auto in_intervals = [&](const Point2& p) {
      for (const auto& [u, v] : z.intervals) {
        if (Piece::segment(u, v).contains(p)) return true;
      }
      return false;
    };
    for (const auto& [u, v] : z.intervals) {
      Point2 mid = Rational(1, 2) * (u + v);
      if (!on_any_piece(sec.pieces, mid)) {
        rep.violations.push_back({"uncovered_zero_interval", mid, "transect"});
      }
    }
    for (const Point2& p : z.points) {
      if (!std::binary_search(hits.begin(), hits.end(), p) && !on_any_piece(sec.pieces, p)) {
        rep.violations.push_back({"uncovered_transect_zero", p, "transect"});
      }
    }
    for (const Point2& p : hits) {
      if (!in_intervals(p) && !std::binary_search(z.points.begin(), z.points.end(), p)) {
        rep.violations.push_back({"piece_hit_not_zero", p, "transect"});
      }
    }
  }
}

void check_vertices(const ConeSpec& cone, const ConicSection& sec, const OracleConfig& cfg,
                    VerificationReport& rep) {
  std::set<int> lines;
  for (const Vertex& v : sec.vertices) lines.insert(v.ref_index);
  for (int i : lines) {
    std::vector<double> expected;
    for (const Vertex& v : sec.vertices) {
      if (v.ref_index != i || !v.location.is_finite()) continue;
      Rational t = *reference_parameter(cone, i, v.location.point());
      if (residual(cone, v.location.point()) != 0) {
        rep.violations.push_back({"vertex_not_on_cone", v.location.point(), v.label()});
      }
      double tv = t.get_d();
      double w = 1e-3 * std::max(1.0, std::fabs(tv));
      try {
        double root = vertex_bisection(cone, i, tv - w, tv + w, cfg);
        if (std::fabs(root - tv) > 1e-7 * std::max(1.0, std::fabs(tv))) {
          rep.violations.push_back({"vertex_bisection_mismatch", v.location.point(), v.label()});
        }
      } catch (const geometry_error&) {
        rep.violations.push_back({"vertex_no_sign_change", v.location.point(), v.label()});
      }
      expected.push_back(tv);
      ++rep.vertices_checked;
    }
    if (expected.empty()) continue;
    auto [lo, hi] = std::minmax_element(expected.begin(), expected.end());
    double pad = 10 + (*hi - *lo);
    std::vector<double> roots = scan_roots(cone, i, *lo - pad, *hi + pad, 600, cfg);
    std::vector<double> unmatched;
    for (double r : roots) {
      bool matched = std::any_of(expected.begin(), expected.end(), [&](double tv) {
        return std::fabs(r - tv) <= 1e-6 * std::max(1.0, std::fabs(tv));
      });
      if (!matched) unmatched.push_back(r);
    }
    for (double r : unmatched) {
      auto [x1, x2] = reference_point(cone, i, r);
      rep.violations.push_back(
          {"extra_root_on_reference_line", Point2{Rational(x1), Rational(x2)}, "rho" + std::to_string(i)});
    }
  }
}

}  // namespace

VerificationReport verify_section(const ConeSpec& cone, const ConicSection& section,
                                  const VerifyOptions& opts, const OracleConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  std::mt19937_64 rng(opts.seed);
  Bbox box = opts.box ? *opts.box : section_bbox(section);
  check_grid(cone, section, box, cfg, rep);
  check_samples(cone, section, opts, rng, rep);
  check_transects(cone, section, box, opts, rng, rep);
  if (opts.bisect_vertices) check_vertices(cone, section, cfg, rep);
  return rep;
}

}  // namespace taxicab
