#pragma once

#include <random>

#include "taxicab/cone_model.hpp"

namespace taxicab::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Point2 pt(const char* x1, const char* x2) { return {q(x1), q(x2)}; }

inline Rational random_rational(std::mt19937_64& rng, int num, int den) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

inline bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

template <typename T>
T pick(std::mt19937_64& rng, std::initializer_list<T> options) {
  std::uniform_int_distribution<size_t> i(0, options.size() - 1);
  return *(options.begin() + i(rng));
}

// Plane parameters biased toward the special classes.
inline Triple random_plane_raw(std::mt19937_64& rng) {
  for (;;) {
    Triple A = {random_rational(rng, 4, 3), random_rational(rng, 4, 3),
                Rational(coin(rng, 0.8) ? 1 : 0)};
    if (coin(rng, 0.05)) return {0, 0, 1};
    if (coin(rng, 0.1)) A[0] = A[2];
    if (A[0] != 0 || A[1] != 0) return A;
  }
}

// Line parameters biased toward axis-aligned and transitional values.
inline Triple random_line_raw(std::mt19937_64& rng, double horizontal_p = 0.15) {
  for (;;) {
    Triple a = {random_rational(rng, 4, 3), random_rational(rng, 4, 3),
                Rational(coin(rng, horizontal_p) ? 0 : 1)};
    if (coin(rng, 0.3)) {
      a[0] = Rational(pick<int>(rng, {-4, -2, -1, 0, 1, 2, 4}), 2);
      a[1] = Rational(pick<int>(rng, {-2, -1, 0, 1, 2}), 2);
    }
    a[0].canonicalize();
    a[1].canonicalize();
    if (a[0] != 0 || a[1] != 0 || a[2] != 0) return a;
  }
}

// Non-degenerate cone; kappa sometimes lands on a strip boundary so that
// parabolas and vertices at infinity are well represented.
inline ConeSpec random_cone(std::mt19937_64& rng, double horizontal_p = 0.15) {
  for (;;) {
    PlaneParams P = normalize_plane(random_plane_raw(rng));
    LineParams l = normalize_line(random_line_raw(rng, horizontal_p));
    Rational N = P.A1 * l.a1 + P.A2 * l.a2 + P.delta * l.a3;
    if (N == 0) continue;
    Rational kappa(std::uniform_int_distribution<int>(1, 12)(rng),
                   std::uniform_int_distribution<int>(1, 4)(rng));
    kappa.canonicalize();
    std::vector<Rational> cands;
    for (const Rational& c : {Rational(abs(P.A1)), Rational(abs(P.A2)),
                              Rational(abs(P.A1 * l.a1 + P.A2 * l.a2))}) {
      if (c != 0) cands.push_back(c);
    }
    if (!cands.empty() && coin(rng, 0.4)) {
      kappa = P.M / cands[std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng)];
    }
    return make_cone(P, l, kappa);
  }
}

}  // namespace taxicab::testing
