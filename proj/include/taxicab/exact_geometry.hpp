#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <variant>

#include "taxicab/errors.hpp"

namespace taxicab {

// mpq_class keeps every result in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
int sign(const Rational& q);
Rational abs_value(const Rational& q);
Rational max_of(const Rational& a, const Rational& b);
int cmp(const Rational& a, const Rational& b);

struct Point2 {
  Rational x1;
  Rational x2;

  friend bool operator==(const Point2& p, const Point2& q) {
    return p.x1 == q.x1 && p.x2 == q.x2;
  }
  friend bool operator<(const Point2& p, const Point2& q) {
    int c = cmp(p.x1, q.x1);
    return c != 0 ? c < 0 : cmp(p.x2, q.x2) < 0;
  }
};

Point2 operator+(const Point2& p, const Point2& q);
Point2 operator-(const Point2& p, const Point2& q);
Point2 operator*(const Rational& s, const Point2& p);
Rational dot(const Point2& p, const Point2& q);
Rational cross(const Point2& p, const Point2& q);
bool is_zero(const Point2& p);
std::ostream& operator<<(std::ostream& os, const Point2& p);

// Positive rescaling to a primitive integer vector; orientation is kept.
Point2 primitive_direction(const Point2& d);
// Primitive integer vector whose first nonzero coordinate is positive.
Point2 canonical_axis(const Point2& d);

class ExtendedPoint {
 public:
  static ExtendedPoint finite(Point2 p);
  static ExtendedPoint at_infinity(const Point2& direction);

  bool is_finite() const { return finite_; }
  const Point2& point() const;
  const Point2& direction() const;

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }

 private:
  ExtendedPoint(bool finite, Point2 value) : finite_(finite), value_(std::move(value)) {}
  bool finite_;
  Point2 value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p);

// c1*x1 + c2*x2 + c0 = 0, scaled so the leading nonzero of (c1, c2) is 1.
struct Line2 {
  Rational c1;
  Rational c2;
  Rational c0;

  static Line2 make(const Rational& c1, const Rational& c2, const Rational& c0);
  Rational eval(const Point2& p) const { return c1 * p.x1 + c2 * p.x2 + c0; }
  Point2 normal() const { return {c1, c2}; }
  Point2 direction() const { return canonical_axis({-c2, c1}); }

  friend bool operator==(const Line2& g, const Line2& h) {
    return g.c1 == h.c1 && g.c2 == h.c2 && g.c0 == h.c0;
  }
};

Line2 canonicalize(const Line2& g);
Line2 line_through(const Point2& p, const Point2& q);
Line2 line_along(const Point2& p, const Point2& direction);
ExtendedPoint intersect_lines(const Line2& g, const Line2& h);
int side_of_line(const Line2& g, const Point2& p);
bool parallel(const Line2& g, const Line2& h);

struct Segment {
  Point2 a;
  Point2 b;
};

struct Ray {
  Point2 base;
  Point2 direction;
};

// Canonical: segment endpoints in lexicographic order, ray direction
// primitive. Ordering puts segments before rays, then lexicographic.
class Piece {
 public:
  static Piece segment(const Point2& a, const Point2& b);
  static Piece ray(const Point2& base, const Point2& direction);

  bool is_segment() const { return std::holds_alternative<Segment>(value_); }
  bool is_ray() const { return std::holds_alternative<Ray>(value_); }
  const Segment& as_segment() const { return std::get<Segment>(value_); }
  const Ray& as_ray() const { return std::get<Ray>(value_); }

  bool contains(const Point2& p) const;
  // Point at parameter t: a + t(b - a) for segments, base + t*dir for rays.
  Point2 at(const Rational& t) const;
  Line2 support() const;
  Point2 direction() const;

  friend bool operator==(const Piece& p, const Piece& q);
  friend bool operator<(const Piece& p, const Piece& q);

 private:
  explicit Piece(std::variant<Segment, Ray> v) : value_(std::move(v)) {}
  std::variant<Segment, Ray> value_;
};

std::ostream& operator<<(std::ostream& os, const Piece& p);

}  // namespace taxicab
