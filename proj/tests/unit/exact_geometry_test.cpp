#include <gtest/gtest.h>

#include "taxicab/exact_geometry.hpp"
#include "test_support.hpp"

namespace taxicab {
namespace {

using testing::pt;
using testing::q;

TEST(RationalTest, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(q("6/4")), "3/2");
  EXPECT_EQ(to_string(q("-10/5")), "-2");
  EXPECT_EQ(to_string(q("0/7")), "0");
  EXPECT_EQ(to_string(q("+3")), "3");
  EXPECT_EQ(q("-3/9").get_den(), 3);
}

TEST(RationalTest, RejectsZeroDenominatorAndGarbage) {
  try {
    parse_rational("1/0");
    FAIL();
  } catch (const geometry_error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDenominator);
  }
  EXPECT_THROW(parse_rational("1.5"), geometry_error);
  EXPECT_THROW(parse_rational("1/-2"), geometry_error);
  EXPECT_THROW(parse_rational(""), geometry_error);
  EXPECT_THROW(parse_rational("x/3"), geometry_error);
}

TEST(RationalTest, FieldAxiomsHoldExactlyOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    Rational a = testing::random_rational(rng, 50, 40), b = testing::random_rational(rng, 50, 40),
             c = testing::random_rational(rng, 50, 40);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (b != 0) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(LineThroughTest, WorkedExamples) {
  EXPECT_EQ(line_through(pt("0", "0"), pt("1", "1")), Line2::make(1, -1, 0));
  EXPECT_EQ(line_through(pt("1", "0"), pt("1", "5")), Line2::make(1, 0, -1));
  Line2 g = line_through(pt("3/2", "1"), pt("3/2", "15/2"));
  EXPECT_EQ(g, Line2::make(1, 0, q("-3/2")));
  EXPECT_EQ(g.c0, q("-3/2"));
}

TEST(LineThroughTest, CoincidentPointsRejected) {
  try {
    line_through(pt("1/3", "2"), pt("1/3", "2"));
    FAIL();
  } catch (const geometry_error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCoincidentPoints);
  }
}

TEST(LineThroughTest, BothPointsIncidentOnRandomPairs) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 1000; ++k) {
    Point2 p{testing::random_rational(rng, 9, 7), testing::random_rational(rng, 9, 7)};
    Point2 r{testing::random_rational(rng, 9, 7), testing::random_rational(rng, 9, 7)};
    if (p == r) continue;
    Line2 g = line_through(p, r);
    EXPECT_EQ(side_of_line(g, p), 0);
    EXPECT_EQ(side_of_line(g, r), 0);
    EXPECT_EQ(canonicalize(g), g);
    EXPECT_EQ(canonicalize(canonicalize(Line2{3 * g.c1, 3 * g.c2, 3 * g.c0})), g);
  }
}

TEST(IntersectLinesTest, WorkedExamples) {
  EXPECT_EQ(intersect_lines(Line2::make(1, 0, -1), Line2::make(0, 1, -2)),
            ExtendedPoint::finite(pt("1", "2")));
  EXPECT_EQ(intersect_lines(Line2::make(1, 0, 0), Line2::make(1, 0, -1)),
            ExtendedPoint::at_infinity(pt("0", "1")));
  EXPECT_EQ(intersect_lines(Line2::make(1, -1, 0), Line2::make(1, 1, -2)),
            ExtendedPoint::finite(pt("1", "1")));
}

TEST(IntersectLinesTest, IdenticalLinesRejected) {
  try {
    intersect_lines(Line2::make(2, 4, 6), Line2::make(1, 2, 3));
    FAIL();
  } catch (const geometry_error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIdenticalLines);
  }
}

TEST(IntersectLinesTest, SymmetricAndIncidentOnRandomLines) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 1000; ++k) {
    Line2 g{testing::random_rational(rng, 5, 3), testing::random_rational(rng, 5, 3),
            testing::random_rational(rng, 5, 3)};
    Line2 h{testing::random_rational(rng, 5, 3), testing::random_rational(rng, 5, 3),
            testing::random_rational(rng, 5, 3)};
    if ((g.c1 == 0 && g.c2 == 0) || (h.c1 == 0 && h.c2 == 0)) continue;
    if (canonicalize(g) == canonicalize(h)) continue;
    ExtendedPoint x = intersect_lines(g, h), y = intersect_lines(h, g);
    EXPECT_EQ(x, y);
    if (x.is_finite()) {
      EXPECT_EQ(side_of_line(g, x.point()), 0);
      EXPECT_EQ(side_of_line(h, x.point()), 0);
    } else {
      EXPECT_TRUE(parallel(g, h));
    }
  }
}

TEST(SideOfLineTest, WorkedExamples) {
  EXPECT_EQ(side_of_line(Line2::make(1, 0, 0), pt("0", "7")), 0);
  Line2 trace{q("1/2"), q("1/5"), 1};
  EXPECT_EQ(trace.eval(pt("3/2", "1")), q("39/20"));
  EXPECT_EQ(side_of_line(trace, pt("3/2", "1")), 1);
  EXPECT_EQ(side_of_line(trace, pt("-5", "-10/3")), -1);
}

TEST(ExtendedPointTest, InfinityDirectionIsCanonical) {
  EXPECT_EQ(ExtendedPoint::at_infinity(pt("-2", "-4")).direction(), pt("1", "2"));
  EXPECT_EQ(ExtendedPoint::at_infinity(pt("0", "-1/3")).direction(), pt("0", "1"));
  EXPECT_EQ(ExtendedPoint::at_infinity(pt("3/4", "-1/6")).direction(), pt("9", "-2"));
  EXPECT_THROW(ExtendedPoint::at_infinity(pt("0", "0")), geometry_error);
  EXPECT_FALSE(ExtendedPoint::at_infinity(pt("1", "0")) == ExtendedPoint::finite(pt("1", "0")));
}

TEST(PieceTest, CanonicalFormsAndContainment) {
  Piece s = Piece::segment(pt("2", "0"), pt("0", "1"));
  EXPECT_EQ(s.as_segment().a, pt("0", "1"));
  EXPECT_EQ(s, Piece::segment(pt("0", "1"), pt("2", "0")));
  EXPECT_TRUE(s.contains(pt("1", "1/2")));
  EXPECT_FALSE(s.contains(pt("4", "-1")));
  Piece r = Piece::ray(pt("0", "0"), pt("-3/2", "-1"));
  EXPECT_EQ(r.as_ray().direction, pt("-3", "-2"));
  EXPECT_TRUE(r.contains(pt("-3", "-2")));
  EXPECT_FALSE(r.contains(pt("3", "2")));
  EXPECT_TRUE(s < r);
  EXPECT_THROW(Piece::segment(pt("1", "1"), pt("1", "1")), geometry_error);
  EXPECT_THROW(Piece::ray(pt("1", "1"), pt("0", "0")), geometry_error);
}

}  // namespace
}  // namespace taxicab
