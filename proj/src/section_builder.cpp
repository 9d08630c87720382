#include "taxicab/section_builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace taxicab {

const char* to_string(ConicClass c) {
  switch (c) {
    case ConicClass::kEllipse: return "ellipse";
    case ConicClass::kParabola: return "parabola";
    case ConicClass::kHyperbola: return "hyperbola";
  }
  return "?";
}

std::string Vertex::label() const {
  return "v" + std::to_string(ref_index) + (sign > 0 ? "+" : "-");
}

std::string AuxPoint::label() const {
  std::string s = sign > 0 ? "+" : "-";
  switch (family) {
    case Family::kPair: return "w" + std::to_string(i) + std::to_string(j) + s;
    case Family::kI: return "wI" + s;
    case Family::kII: return "wII" + s;
  }
  return "?";
}

namespace {

// One of the 2k rays emanating from a along the active reference lines.
// sigma is the sign of the deviation coordinate along the ray, so that
// d(x, l) = sigma * u_i on it.
struct FanRay {
  int line;
  Point2 dir;
  int sigma;
};

int half_plane(const Point2& u) {
  return (u.x2 > 0 || (u.x2 == 0 && u.x1 > 0)) ? 0 : 1;
}

bool angle_less(const Point2& u, const Point2& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

// Rays sorted counterclockwise; opposite rays sit n/2 apart.
std::vector<FanRay> build_fan(const LineParams& line) {
  std::vector<FanRay> fan;
  for (int i : active_reference_indices(line)) {
    Point2 d = reference_direction(line, i);
    fan.push_back({i, d, 1});
    fan.push_back({i, Rational(-1) * d, -1});
  }
  std::sort(fan.begin(), fan.end(),
            [](const FanRay& r, const FanRay& s) { return angle_less(r.dir, s.dir); });
  return fan;
}

int fan_index(const std::vector<FanRay>& fan, int line, const Point2& u) {
  for (size_t k = 0; k < fan.size(); ++k) {
    if (fan[k].line == line && dot(fan[k].dir, u) > 0) return static_cast<int>(k);
  }
  throw geometry_error(ErrorCode::kInvalidArgument, "vertex off its reference ray");
}

bool consecutive(int r, int s, int n) {
  int d = ((s - r) % n + n) % n;
  return d == 1 || d == n - 1;
}

bool horizontal_plane(const ConeSpec& cone) {
  return cone.plane.A1 == 0 && cone.plane.A2 == 0;
}

// Side of P^S; the horizontal plane puts everything on one side.
int side(const ConeSpec& cone, const Point2& p) {
  if (horizontal_plane(cone)) return 1;
  return sign(cone.plane.h(p));
}

ExtendedPoint vertex_location(const ConeSpec& cone, int i, int s) {
  const PlaneParams& P = cone.plane;
  const LineParams& l = cone.line;
  Rational m = cone.m_over_kappa();
  Rational N = cone.N();
  Rational S = P.A1 * l.a1 + P.A2 * l.a2;
  if (l.horizontal()) {
    Rational r = 1 + (s * m + S + P.delta) / (-S);
    return ExtendedPoint::finite(r * l.base());
  }
  Rational den = s * m - (i == 1 ? P.A1 : (i == 2 ? P.A2 : S));
  Point2 dir = reference_direction(l, i);
  if (den == 0) return ExtendedPoint::at_infinity(dir);
  return ExtendedPoint::finite(l.base() + (N / den) * dir);
}

std::vector<Vertex> vertices_on(const ConeSpec& cone, const std::vector<int>& lines) {
  std::vector<Vertex> out;
  for (int i : lines) {
    for (int s : {1, -1}) out.push_back({i, s, vertex_location(cone, i, s)});
  }
  return out;
}

// Aux sign whose pair of vertex lines has sign product prod.
int aux_sign_for(int i, int j, int prod) {
  return (i == 1 && j == 2) ? prod : -prod;
}

std::set<std::tuple<int, int, int>> active_aux_keys(const std::vector<FanRay>& fan) {
  std::set<std::tuple<int, int, int>> keys;
  int n = static_cast<int>(fan.size());
  for (int k = 0; k < n; ++k) {
    const FanRay& r = fan[k];
    const FanRay& q = fan[(k + 1) % n];
    int i = std::min(r.line, q.line), j = std::max(r.line, q.line);
    int prod = r.sigma * q.sigma;
    keys.insert({i, j, aux_sign_for(i, j, prod)});
  }
  return keys;
}

ExtendedPoint ratio_point(const ConeSpec& cone, const Rational& n1, const Rational& d1,
                          const Rational& n2, const Rational& d2) {
  if (d1 == 0 || d2 == 0) {
    return ExtendedPoint::at_infinity({-cone.plane.A2, cone.plane.A1});
  }
  return ExtendedPoint::finite({n1 / d1, n2 / d2});
}

ExtendedPoint pair_aux_location(const ConeSpec& cone, int i, int j, int s) {
  const Rational &A1 = cone.plane.A1, &A2 = cone.plane.A2;
  const Rational &a1 = cone.line.a1, &a2 = cone.line.a2;
  Rational d = cone.plane.delta;
  Rational S = A1 * a1 + A2 * a2;
  if (i == 1 && j == 2) {
    return ratio_point(cone, s * A2 * a1 + A2 * a2 + d, -A1 + s * A2,
                       A1 * a1 + s * A1 * a2 + d, s * A1 - A2);
  }
  if (i == 1) {
    return ratio_point(cone, -(d * a1 + s * A2 * a2 + s * d), S + s * A1,
                       s * A1 * a2 - d * a2, S + s * A1);
  }
  return ratio_point(cone, s * A2 * a1 - d * a1, S + s * A2,
                     -(s * A1 * a1 + d * a2 + s * d), S + s * A2);
}

ExtendedPoint family_aux_location(const ConeSpec& cone, AuxPoint::Family f, int s) {
  const Rational &A1 = cone.plane.A1, &A2 = cone.plane.A2;
  const Rational &a1 = cone.line.a1, &a2 = cone.line.a2;
  Rational d = cone.plane.delta;
  Rational S = A1 * a1 + A2 * a2;
  if (f == AuxPoint::Family::kI) {
    return ratio_point(cone, s * A2 * a1 - d * a1, S, -(s * A1 * a1 + d * a2), S);
  }
  return ratio_point(cone, -(s * A2 * a2 + d * a1), S, s * A1 * a2 - d * a2, S);
}

void add_rays_away(std::vector<Piece>& out, const Point2& p, const Point2& omega) {
  out.push_back(Piece::ray(p, p - omega));
}

// Relations among vertices on distinct reference lines; a vertex at infinity
// occupies both rays of its line and both sides of P^S.
std::vector<VertexRelation> relations(const ConeSpec& cone, const std::vector<Vertex>& verts,
                                      const std::vector<FanRay>& fan) {
  int n = static_cast<int>(fan.size());
  auto rays_of = [&](const Vertex& v) {
    std::vector<int> rs;
    if (v.location.is_finite()) {
      rs.push_back(fan_index(fan, v.ref_index, v.location.point() - cone.line.base()));
    } else {
      for (int k = 0; k < n; ++k) {
        if (fan[k].line == v.ref_index) rs.push_back(k);
      }
    }
    return rs;
  };
  auto sides_of = [&](const Vertex& v) {
    if (!v.location.is_finite()) return std::set<int>{1, -1};
    return std::set<int>{side(cone, v.location.point())};
  };
  std::vector<VertexRelation> out;
  for (size_t p = 0; p < verts.size(); ++p) {
    for (size_t q = p + 1; q < verts.size(); ++q) {
      const Vertex &u = verts[p], &w = verts[q];
      if (u.ref_index == w.ref_index) continue;
      if (!u.location.is_finite() && !w.location.is_finite()) continue;
      std::set<int> su = sides_of(u), sw = sides_of(w);
      bool same = false, opposite = false;
      for (int x : su) {
        same |= sw.count(x) > 0;
        opposite |= sw.count(-x) > 0;
      }
      bool adj = false, anti = false;
      for (int r : rays_of(u)) {
        for (int s : rays_of(w)) {
          adj |= consecutive(r, s, n);
          anti |= consecutive(r, (s + n / 2) % n, n);
        }
      }
      if (adj && same) out.push_back({u, w, Relation::kAdjacent});
      if (anti && opposite) out.push_back({u, w, Relation::kAntiAdjacent});
    }
  }
  return out;
}

std::vector<Piece> connect_the_dots(const ConeSpec& cone) {
  std::vector<FanRay> fan = build_fan(cone.line);
  std::vector<Vertex> verts = vertices(cone);
  int n = static_cast<int>(fan.size());
  std::vector<Piece> out;
  for (const VertexRelation& rel : relations(cone, verts, fan)) {
    if (!rel.first.location.is_finite() || !rel.second.location.is_finite()) continue;
    const Point2 &p = rel.first.location.point(), &q = rel.second.location.point();
    if (rel.relation == Relation::kAdjacent) {
      out.push_back(Piece::segment(p, q));
    } else {
      out.push_back(Piece::ray(p, p - q));
      out.push_back(Piece::ray(q, q - p));
    }
  }
  // A finite vertex whose partner is at infinity gets the ray parallel to
  // the partner's line that stays on its side of P^S, taken only along a
  // fan ray next to its own.
  for (const Vertex& v : verts) {
    if (!v.location.is_finite()) continue;
    const Point2& p = v.location.point();
    int r = fan_index(fan, v.ref_index, p - cone.line.base());
    for (const Vertex& w : verts) {
      if (w.ref_index == v.ref_index || w.location.is_finite()) continue;
      for (int nb : {(r + 1) % n, (r + n - 1) % n}) {
        if (fan[nb].line != w.ref_index) continue;
        const Point2& d = fan[nb].dir;
        Rational rate = cone.plane.A1 * d.x1 + cone.plane.A2 * d.x2;
        if (!horizontal_plane(cone) && sign(cone.plane.h(p)) * sign(rate) < 0) continue;
        out.push_back(Piece::ray(p, d));
      }
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<Piece> horizontal_line_pieces(const ConeSpec& cone) {
  auto family = abs(cone.line.a1) >= abs(cone.line.a2) ? AuxPoint::Family::kI
                                                       : AuxPoint::Family::kII;
  std::vector<Piece> out;
  for (int t : {1, -1}) {
    Point2 v = vertex_location(cone, 3, t).point();
    for (int s : {1, -1}) add_rays_away(out, v, family_aux_location(cone, family, s).point());
  }
  canonical_sort(out);
  return out;
}

}  // namespace

std::vector<Vertex> vertices(const ConeSpec& cone) {
  return vertices_on(cone, active_reference_indices(cone.line));
}

std::vector<Vertex> all_vertex_slots(const ConeSpec& cone) {
  std::vector<int> lines;
  for (const RefLine& r : reference_lines(cone.line)) lines.push_back(r.index);
  return vertices_on(cone, lines);
}

const Vertex& find_vertex(const std::vector<Vertex>& vs, int ref_index, int sign) {
  for (const Vertex& v : vs) {
    if (v.ref_index == ref_index && v.sign == sign) return v;
  }
  throw geometry_error(ErrorCode::kInvalidArgument, "no such vertex");
}

std::vector<AuxPoint> auxiliary_points(const ConeSpec& cone) {
  if (horizontal_plane(cone)) {
    throw geometry_error(ErrorCode::kHorizontalPlane, "no trace on the slicing plane");
  }
  std::vector<AuxPoint> out;
  if (cone.line.horizontal()) {
    bool i_active = abs(cone.line.a1) >= abs(cone.line.a2);
    bool ii_active = abs(cone.line.a2) >= abs(cone.line.a1);
    for (auto f : {AuxPoint::Family::kI, AuxPoint::Family::kII}) {
      for (int s : {1, -1}) {
        out.push_back({f, 0, 0, s, family_aux_location(cone, f, s),
                       f == AuxPoint::Family::kI ? i_active : ii_active});
      }
    }
    return out;
  }
  auto keys = active_aux_keys(build_fan(cone.line));
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    for (int s : {1, -1}) {
      out.push_back({AuxPoint::Family::kPair, i, j, s, pair_aux_location(cone, i, j, s),
                     keys.count({i, j, s}) > 0});
    }
  }
  return out;
}

std::vector<VertexRelation> adjacency(const ConeSpec& cone, const std::vector<Vertex>& verts) {
  if (cone.line.horizontal()) return {};
  return relations(cone, verts, build_fan(cone.line));
}

std::optional<std::vector<Piece>> build_pieces_from_aux(const ConeSpec& cone) {
  if (horizontal_plane(cone)) return std::nullopt;
  if (cone.line.horizontal()) return horizontal_line_pieces(cone);
  std::vector<Vertex> verts = vertices(cone);
  std::vector<Piece> out;
  for (auto [i, j, s] : active_aux_keys(build_fan(cone.line))) {
    ExtendedPoint omega = pair_aux_location(cone, i, j, s);
    int prod = aux_sign_for(i, j, s);
    for (int t : {1, -1}) {
      const ExtendedPoint& v = find_vertex(verts, i, t).location;
      const ExtendedPoint& w = find_vertex(verts, j, t * prod).location;
      if (!v.is_finite() && !w.is_finite()) continue;
      if (!omega.is_finite()) {
        if (!v.is_finite() || !w.is_finite()) return std::nullopt;
        out.push_back(Piece::segment(v.point(), w.point()));
      } else if (!v.is_finite() || !w.is_finite()) {
        add_rays_away(out, v.is_finite() ? v.point() : w.point(), omega.point());
      } else if (side(cone, v.point()) == side(cone, w.point())) {
        out.push_back(Piece::segment(v.point(), w.point()));
      } else {
        add_rays_away(out, v.point(), omega.point());
        add_rays_away(out, w.point(), omega.point());
      }
    }
  }
  canonical_sort(out);
  return out;
}

ConicClass classify(const ConeSpec& cone) {
  if (cone.line.horizontal()) return ConicClass::kHyperbola;
  CharStrip q = characterizing_strip(cone);
  std::vector<StripPosition> pos = {
      strip_position(q, {1, 0}), strip_position(q, {0, 1}),
      strip_position(q, cone.line.base())};
  bool all_inside = std::all_of(pos.begin(), pos.end(),
                                [](StripPosition p) { return p == StripPosition::kInside; });
  if (all_inside) return ConicClass::kEllipse;
  bool none_outside = std::none_of(pos.begin(), pos.end(),
                                   [](StripPosition p) { return p == StripPosition::kOutside; });
  return none_outside ? ConicClass::kParabola : ConicClass::kHyperbola;
}

ConicSection build_section(const ConeSpec& cone) {
  ConicSection sec;
  sec.klass = classify(cone);
  sec.pieces = cone.line.horizontal() ? horizontal_line_pieces(cone) : connect_the_dots(cone);
  sec.vertices = vertices(cone);
  if (!horizontal_plane(cone)) sec.aux_points = auxiliary_points(cone);
  sec.trace = trace_line_PS(cone.plane);
  for (const RefLine& r : reference_lines(cone.line)) {
    if (r.active) sec.ref_lines.push_back(r);
  }
  if (cone.line.klass == LineClass::kTransitional) sec.warnings.push_back(kTransitionalWarning);
  return sec;
}

void canonical_sort(std::vector<Piece>& pieces) {
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
}

namespace {

std::vector<Point2> anchors(const Piece& p) {
  if (p.is_segment()) return {p.as_segment().a, p.as_segment().b};
  return {p.as_ray().base};
}

}  // namespace

bool pieces_touch(const Piece& p, const Piece& q) {
  for (const Point2& x : anchors(p)) {
    if (q.contains(x)) return true;
  }
  for (const Point2& x : anchors(q)) {
    if (p.contains(x)) return true;
  }
  Line2 g = p.support(), h = q.support();
  if (parallel(g, h)) return false;
  ExtendedPoint x = intersect_lines(g, h);
  return p.contains(x.point()) && q.contains(x.point());
}

std::optional<ConicClass> topological_class(const std::vector<Piece>& pieces) {
  size_t n = pieces.size();
  if (n == 0) return std::nullopt;
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < a; ++b) {
      if (pieces_touch(pieces[a], pieces[b])) parent[find(a)] = find(b);
    }
  }
  std::map<size_t, int> rays_per_component;
  for (size_t a = 0; a < n; ++a) {
    rays_per_component[find(a)] += pieces[a].is_ray() ? 1 : 0;
  }
  size_t components = rays_per_component.size();
  if (components == 1 && rays_per_component.begin()->second == 0) {
    std::map<Point2, int> degree;
    for (const Piece& p : pieces) {
      for (const Point2& x : anchors(p)) ++degree[x];
    }
    for (const auto& [pt, d] : degree) {
      if (d != 2) return std::nullopt;
    }
    return ConicClass::kEllipse;
  }
  for (const auto& [root, rays] : rays_per_component) {
    if (rays != 2) return std::nullopt;
  }
  if (components == 1) return ConicClass::kParabola;
  if (components == 2) return ConicClass::kHyperbola;
  return std::nullopt;
}

}  // namespace taxicab
