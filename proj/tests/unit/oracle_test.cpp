#include <gtest/gtest.h>

#include <algorithm>

#include "taxicab/oracle.hpp"
#include "test_support.hpp"

namespace taxicab {
namespace {

using testing::pt;
using testing::q;

ConeSpec cone_of(const char* A1, const char* A2, const char* A3, const char* a1, const char* a2,
                 const char* a3, const char* kappa) {
  return make_cone({q(A1), q(A2), q(A3)}, {q(a1), q(a2), q(a3)}, q(kappa));
}

constexpr double kTol = 1e-9;

TEST(OracleConfigTest, Validate) {
  EXPECT_NO_THROW(OracleConfig{}.validate());
  OracleConfig even;
  even.grid_n = 200;
  EXPECT_THROW(even.validate(), geometry_error);
  OracleConfig small;
  small.grid_n = 1;
  EXPECT_THROW(small.validate(), geometry_error);
  OracleConfig tol;
  tol.tol = 0;
  EXPECT_THROW(tol.validate(), geometry_error);
}

TEST(NumericDistanceTest, Examples) {
  LineParams horiz = normalize_line({q("3"), q("1"), q("0")});
  EXPECT_NEAR(numeric_dist_to_line(Point3{0, 0, 1}, horiz), 1.0, kTol);
  LineParams axis = normalize_line({q("0"), q("0"), q("1")});
  EXPECT_NEAR(numeric_dist_to_line(Point3{1, 2, 3}, axis), 3.0, kTol);
  LineParams l = normalize_line({q("3/2"), q("1"), q("1")});
  EXPECT_NEAR(numeric_dist_to_line(Point3{q("-3"), q("-2"), q("-2")}, l), 0.0, kTol);
  PlaneParams P = normalize_plane({q("1/2"), q("1/5"), q("1")});
  EXPECT_NEAR(numeric_dist_to_plane(Point3{0, 0, 1}, P), 1.0, kTol);
  EXPECT_NEAR(numeric_dist_to_plane(Point3{4, 0, 0}, P), 2.0, kTol);
}

TEST(NumericDistanceTest, ResidualTracksExactOnRandomCones) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 200; ++k) {
    ConeSpec c = testing::random_cone(rng);
    Point2 p{testing::random_rational(rng, 8, 4), testing::random_rational(rng, 8, 4)};
    double exact = residual(c, p).get_d();
    EXPECT_NEAR(numeric_residual(c, p.x1.get_d(), p.x2.get_d()), exact, 1e-7);
  }
}

TEST(VertexBisectionTest, IntermediateLineRefOne) {
  ConeSpec c = cone_of("1/2", "1/5", "1", "3/2", "1", "1", "2");
  EXPECT_NEAR(vertex_bisection(c, 1, -5, 1.5), -0.45, kTol);
}

TEST(VertexBisectionTest, HorizontalLineRoots) {
  ConeSpec c = cone_of("1/2", "1/3", "1", "3", "1", "0", "1");
  EXPECT_NEAR(vertex_bisection(c, 3, -2, -0.5), -12.0 / 11.0, kTol);
  auto roots = scan_roots(c, 3, -3, 1.03, 400);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], -12.0 / 11.0, kTol);
  EXPECT_NEAR(roots[1], 0.0, kTol);
}

TEST(VertexBisectionTest, NoSignChange) {
  ConeSpec c = cone_of("1/2", "1/5", "1", "3/2", "1", "1", "2");
  try {
    vertex_bisection(c, 1, 0, 1);
    FAIL();
  } catch (const geometry_error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSignChange);
  }
}

TEST(ReferenceParameterTest, RoundTrip) {
  ConeSpec c = cone_of("1/2", "1/5", "1", "3/2", "1", "1", "2");
  EXPECT_EQ(reference_parameter(c, 1, pt("-9/20", "1")), q("-9/20"));
  EXPECT_EQ(reference_parameter(c, 2, pt("3/2", "15/2")), q("15/2"));
  EXPECT_EQ(reference_parameter(c, 3, pt("-5", "-10/3")), q("-13/3"));
  auto [x, y] = reference_point(c, 3, -13.0 / 3.0);
  EXPECT_NEAR(x, -5, kTol);
  EXPECT_NEAR(y, -10.0 / 3.0, kTol);
}

TEST(GridScanTest, UnitCircle) {
  ConeSpec c = cone_of("0", "0", "1", "0", "0", "1", "1");
  OracleConfig cfg;
  cfg.grid_n = 5;
  auto samples = grid_residual_scan(c, {-2, -2, 2, 2}, cfg);
  ASSERT_EQ(samples.size(), 25u);
  auto at = [&](const Point2& p) {
    return std::find_if(samples.begin(), samples.end(), [&](const GridSample& s) { return s.p == p; });
  };
  ASSERT_NE(at(pt("1", "0")), samples.end());
  EXPECT_EQ(at(pt("1", "0"))->residual, 0);
  EXPECT_NE(at(pt("2", "2"))->residual, 0);
  long zeros = std::count_if(samples.begin(), samples.end(),
                             [](const GridSample& s) { return s.residual == 0; });
  EXPECT_EQ(zeros, 4);
}

TEST(SectionBboxTest, PaddedIntegerBox) {
  ConeSpec c = cone_of("0", "0", "1", "0", "0", "1", "1");
  Bbox b = section_bbox(build_section(c));
  EXPECT_EQ(b.x0, -2);
  EXPECT_EQ(b.y0, -2);
  EXPECT_EQ(b.x1, 2);
  EXPECT_EQ(b.y1, 2);
}

TEST(TransectTest, ZerosAndHitsOnCircle) {
  ConeSpec c = cone_of("0", "0", "1", "0", "0", "1", "1");
  ConicSection s = build_section(c);
  TransectZeros z = transect_zeros(c, pt("0", "0"), pt("1", "0"), 10);
  std::vector<Point2> expected = {pt("-1", "0"), pt("1", "0")};
  std::sort(z.points.begin(), z.points.end());
  EXPECT_EQ(z.points, expected);
  EXPECT_TRUE(z.intervals.empty());
  auto hits = transect_piece_hits(s.pieces, pt("0", "0"), pt("1", "0"), 10);
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  EXPECT_EQ(hits, expected);

  // Along an edge the zero set is an interval.
  TransectZeros edge = transect_zeros(c, pt("1", "0"), pt("-1", "1"), 10);
  ASSERT_EQ(edge.intervals.size(), 1u);
}

TEST(VerifySectionTest, IntermediateLineExplicitBox) {
  ConeSpec c = cone_of("1/2", "1/5", "1", "3/2", "1", "1", "2");
  VerifyOptions opts;
  opts.box = Bbox{-7, -5, 4, 9};
  OracleConfig cfg;
  cfg.grid_n = 101;
  VerificationReport r = verify_section(c, build_section(c), opts, cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.grid_points, 101 * 101);
  EXPECT_EQ(r.max_abs_residual_on_pieces, 0);
  EXPECT_EQ(r.vertices_checked, 5);
}

TEST(VerifySectionTest, DetectsWrongPieces) {
  ConeSpec c = cone_of("1/2", "1/5", "1", "3/2", "1", "1", "2");
  ConicSection s = build_section(c);
  s.pieces.pop_back();
  s.pieces.push_back(Piece::segment(pt("0", "0"), pt("1", "1")));
  EXPECT_FALSE(verify_section(c, s).ok());
}

}  // namespace
}  // namespace taxicab
