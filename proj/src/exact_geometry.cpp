#include "taxicab/exact_geometry.hpp"

#include <cctype>
#include <sstream>

namespace taxicab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kIdenticalLines: return "IdenticalLines";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kZeroComponent: return "ZeroComponent";
    case ErrorCode::kDegenerateCone: return "DegenerateCone";
    case ErrorCode::kNonPositiveKappa: return "NonPositiveKappa";
    case ErrorCode::kHorizontalPlane: return "HorizontalPlane";
    case ErrorCode::kHorizontalLineWithHorizontalPlane:
      return "HorizontalLineWithHorizontalPlane";
    case ErrorCode::kNotSteep: return "NotSteep";
    case ErrorCode::kNotParallel: return "NotParallel";
    case ErrorCode::kNoSignChange: return "NoSignChange";
    case ErrorCode::kInconsistentClassification:
      return "InconsistentClassification";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_integer_text(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& s) {
  if (!is_integer_text(s)) {
    throw geometry_error(ErrorCode::kParse, "not an integer: '" + s + "'");
  }
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw geometry_error(ErrorCode::kParse, "signed denominator: '" + text + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw geometry_error(ErrorCode::kZeroDenominator, "'" + text + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }

Rational abs_value(const Rational& q) { return abs(q); }

Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

int cmp(const Rational& a, const Rational& b) {
  int c = ::cmp(a, b);
  return (c > 0) - (c < 0);
}

Point2 operator+(const Point2& p, const Point2& q) {
  return {p.x1 + q.x1, p.x2 + q.x2};
}
Point2 operator-(const Point2& p, const Point2& q) {
  return {p.x1 - q.x1, p.x2 - q.x2};
}
Point2 operator*(const Rational& s, const Point2& p) {
  return {s * p.x1, s * p.x2};
}
Rational dot(const Point2& p, const Point2& q) {
  return p.x1 * q.x1 + p.x2 * q.x2;
}
Rational cross(const Point2& p, const Point2& q) {
  return p.x1 * q.x2 - p.x2 * q.x1;
}
bool is_zero(const Point2& p) { return p.x1 == 0 && p.x2 == 0; }

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << "(" << to_string(p.x1) << ", " << to_string(p.x2) << ")";
}

std::ostream& operator<<(std::ostream& os, const ExtendedPoint& p) {
  if (p.is_finite()) return os << p.point();
  return os << "inf" << p.direction();
}

Point2 primitive_direction(const Point2& d) {
  if (is_zero(d)) throw geometry_error(ErrorCode::kZeroVector, "direction");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), d.x1.get_den_mpz_t(), d.x2.get_den_mpz_t());
  mpz_class n1 = d.x1.get_num() * (l / d.x1.get_den());
  mpz_class n2 = d.x2.get_num() * (l / d.x2.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
  return {Rational(n1 / g), Rational(n2 / g)};
}

Point2 canonical_axis(const Point2& d) {
  Point2 p = primitive_direction(d);
  if (p.x1 < 0 || (p.x1 == 0 && p.x2 < 0)) p = Rational(-1) * p;
  return p;
}

ExtendedPoint ExtendedPoint::finite(Point2 p) {
  return ExtendedPoint(true, std::move(p));
}

ExtendedPoint ExtendedPoint::at_infinity(const Point2& direction) {
  return ExtendedPoint(false, canonical_axis(direction));
}

const Point2& ExtendedPoint::point() const {
  if (!finite_) throw geometry_error(ErrorCode::kInvalidArgument, "point at infinity");
  return value_;
}

const Point2& ExtendedPoint::direction() const {
  if (finite_) throw geometry_error(ErrorCode::kInvalidArgument, "finite point");
  return value_;
}

Line2 canonicalize(const Line2& g) {
  if (g.c1 == 0 && g.c2 == 0) {
    throw geometry_error(ErrorCode::kZeroVector, "line normal");
  }
  Rational lead = g.c1 != 0 ? g.c1 : g.c2;
  return Line2{g.c1 / lead, g.c2 / lead, g.c0 / lead};
}

Line2 Line2::make(const Rational& c1, const Rational& c2, const Rational& c0) {
  return canonicalize(Line2{c1, c2, c0});
}

Line2 line_through(const Point2& p, const Point2& q) {
  if (p == q) throw geometry_error(ErrorCode::kCoincidentPoints, "line_through");
  return line_along(p, q - p);
}

Line2 line_along(const Point2& p, const Point2& direction) {
  Rational c1 = direction.x2;
  Rational c2 = -direction.x1;
  return Line2::make(c1, c2, -(c1 * p.x1 + c2 * p.x2));
}

bool parallel(const Line2& g, const Line2& h) {
  return g.c1 * h.c2 - g.c2 * h.c1 == 0;
}

ExtendedPoint intersect_lines(const Line2& g, const Line2& h) {
  Line2 cg = canonicalize(g), ch = canonicalize(h);
  if (cg == ch) throw geometry_error(ErrorCode::kIdenticalLines, "intersect_lines");
  Rational det = cg.c1 * ch.c2 - cg.c2 * ch.c1;
  if (det == 0) return ExtendedPoint::at_infinity(cg.direction());
  Rational x1 = (cg.c2 * ch.c0 - ch.c2 * cg.c0) / det;
  Rational x2 = (ch.c1 * cg.c0 - cg.c1 * ch.c0) / det;
  return ExtendedPoint::finite({x1, x2});
}

int side_of_line(const Line2& g, const Point2& p) { return sign(g.eval(p)); }

Piece Piece::segment(const Point2& a, const Point2& b) {
  if (a == b) throw geometry_error(ErrorCode::kCoincidentPoints, "segment");
  return b < a ? Piece(Segment{b, a}) : Piece(Segment{a, b});
}

Piece Piece::ray(const Point2& base, const Point2& direction) {
  return Piece(Ray{base, primitive_direction(direction)});
}

bool Piece::contains(const Point2& p) const {
  if (is_segment()) {
    const Segment& s = as_segment();
    Point2 d = s.b - s.a, u = p - s.a;
    if (cross(d, u) != 0) return false;
    Rational t = dot(d, u);
    return t >= 0 && t <= dot(d, d);
  }
  const Ray& r = as_ray();
  Point2 u = p - r.base;
  return cross(r.direction, u) == 0 && dot(r.direction, u) >= 0;
}

Point2 Piece::at(const Rational& t) const {
  if (is_segment()) {
    const Segment& s = as_segment();
    return s.a + t * (s.b - s.a);
  }
  const Ray& r = as_ray();
  return r.base + t * r.direction;
}

Point2 Piece::direction() const {
  if (is_segment()) {
    const Segment& s = as_segment();
    return s.b - s.a;
  }
  return as_ray().direction;
}

Line2 Piece::support() const {
  return line_along(is_segment() ? as_segment().a : as_ray().base, direction());
}

bool operator==(const Piece& p, const Piece& q) {
  if (p.is_segment() != q.is_segment()) return false;
  if (p.is_segment()) {
    return p.as_segment().a == q.as_segment().a && p.as_segment().b == q.as_segment().b;
  }
  return p.as_ray().base == q.as_ray().base &&
         p.as_ray().direction == q.as_ray().direction;
}

bool operator<(const Piece& p, const Piece& q) {
  if (p.is_segment() != q.is_segment()) return p.is_segment();
  if (p.is_segment()) {
    const Segment &s = p.as_segment(), &t = q.as_segment();
    if (!(s.a == t.a)) return s.a < t.a;
    return s.b < t.b;
  }
  const Ray &r = p.as_ray(), &u = q.as_ray();
  if (!(r.base == u.base)) return r.base < u.base;
  return r.direction < u.direction;
}

std::ostream& operator<<(std::ostream& os, const Piece& p) {
  if (p.is_segment()) {
    return os << "segment " << p.as_segment().a << " -- " << p.as_segment().b;
  }
  return os << "ray " << p.as_ray().base << " dir " << p.as_ray().direction;
}

}  // namespace taxicab
