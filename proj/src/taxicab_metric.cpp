#include "taxicab/taxicab_metric.hpp"

#include <algorithm>

namespace taxicab {

Rational taxicab_dist(const Point3& x, const Point3& y) {
  return abs(x.x1 - y.x1) + abs(x.x2 - y.x2) + abs(x.x3 - y.x3);
}

Rational taxicab_dist(const Point2& x, const Point2& y) {
  return abs(x.x1 - y.x1) + abs(x.x2 - y.x2);
}

namespace {

Rational dot3(const Point3& x, const Triple& A) {
  return A[0] * x.x1 + A[1] * x.x2 + A[2] * x.x3;
}

bool is_zero(const Triple& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

ExtRational plane_partial_dist(const Point3& x, const Triple& A, int i) {
  const Rational& c = A[i - 1];
  if (c == 0) return std::nullopt;
  return abs(dot3(x, A) / c);
}

Rational dist_to_plane(const Point3& x, const Triple& A) {
  if (is_zero(A)) throw geometry_error(ErrorCode::kZeroVector, "plane");
  Rational m = max_of(max_of(abs(A[0]), abs(A[1])), abs(A[2]));
  return abs(dot3(x, A)) / m;
}

ExtRational line_partial_dist(const Point3& x, const Triple& a, int i) {
  if (a[i - 1] == 0) return std::nullopt;
  Rational t = x[i - 1] / a[i - 1];
  Rational d = 0;
  for (int k = 0; k < 3; ++k) d += abs(x[k] - a[k] * t);
  return d;
}

ExtRational line_pair_dist(const Point3& x, const Triple& a, int j, int k) {
  return line_partial_dist(x, a, 6 - j - k);
}

DominanceClass dominance_class(const Triple& v) {
  if (is_zero(v)) throw geometry_error(ErrorCode::kZeroVector, "dominance_class");
  Rational total = abs(v[0]) + abs(v[1]) + abs(v[2]);
  int transitional = 0;
  for (int i = 0; i < 3; ++i) {
    Rational others = total - abs(v[i]);
    if (abs(v[i]) > others) return {DominanceClass::Tag::kDominant, i + 1};
    if (abs(v[i]) == others && (transitional == 0 || i == 2)) transitional = i + 1;
  }
  if (transitional != 0) {
    return {DominanceClass::Tag::kTransitionallyDominant, transitional};
  }
  return {};
}

std::vector<int> wedge_index(const Point3& x, const Triple& a) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] == 0) throw geometry_error(ErrorCode::kZeroComponent, "wedge_index");
  }
  std::array<Rational, 3> t = {x.x1 / a[0], x.x2 / a[1], x.x3 / a[2]};
  std::array<Rational, 3> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int i = 0; i < 3; ++i) {
    if (t[i] == sorted[1]) out.push_back(i + 1);
  }
  return out;
}

Rational dist_to_line(const Point3& x, const Triple& a) {
  DominanceClass dc = dominance_class(a);
  int i = dc.index;
  if (dc.tag == DominanceClass::Tag::kNone) i = wedge_index(x, a).front();
  return *line_partial_dist(x, a, i);
}

}  // namespace taxicab
