#pragma once

#include <array>
#include <optional>
#include <vector>

#include "taxicab/exact_geometry.hpp"

namespace taxicab {

using Triple = std::array<Rational, 3>;

struct Point3 {
  Rational x1;
  Rational x2;
  Rational x3;

  Rational operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  static Point3 lift(const Point2& p) { return {p.x1, p.x2, Rational(1)}; }
};

// Empty means +infinity.
using ExtRational = std::optional<Rational>;

Rational taxicab_dist(const Point3& x, const Point3& y);
Rational taxicab_dist(const Point2& x, const Point2& y);

// d_i(x, P): distance along the i-th axis (1-based) to the plane A.x = 0.
ExtRational plane_partial_dist(const Point3& x, const Triple& A, int i);
// |A.x| / max|A_i|.
Rational dist_to_plane(const Point3& x, const Triple& A);

// d(x, l(x_i/a_i)): taxicab distance from x to the point of l sharing its
// i-th coordinate (1-based).
ExtRational line_partial_dist(const Point3& x, const Triple& a, int i);
// d_{j,k}(x, l); uses the breakpoint of the remaining index.
ExtRational line_pair_dist(const Point3& x, const Triple& a, int j, int k);
Rational dist_to_line(const Point3& x, const Triple& a);

struct DominanceClass {
  enum class Tag { kDominant, kTransitionallyDominant, kNone };
  Tag tag = Tag::kNone;
  int index = 0;  // 1-based; 0 when tag is kNone

  friend bool operator==(const DominanceClass&, const DominanceClass&) = default;
};

// Transitional ties (one zero entry, two equal magnitudes) resolve to index
// 3 when it qualifies, else the lowest qualifying index.
DominanceClass dominance_class(const Triple& v);

// Indices (1-based, ascending) whose ratio x_i/a_i is the middle or a
// duplicated value among the three.
std::vector<int> wedge_index(const Point3& x, const Triple& a);

}  // namespace taxicab
