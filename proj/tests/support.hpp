#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pseudoanalytic/algebra.hpp"
#include "pseudoanalytic/geometry.hpp"

namespace pa_test {

using pseudoanalytic::Binumber;
using pseudoanalytic::Point;
using pseudoanalytic::Signature;

inline constexpr Signature E = Signature::Elliptic;
inline constexpr Signature H = Signature::Hyperbolic;

inline Binumber one(Signature s = E) { return Binumber::real(1.0, s); }
inline Binumber unit(Signature s = E) { return Binumber::unit(s); }

inline double rel_err(const Binumber& got, const Binumber& want) {
  return norm(got - want) / std::max(norm(want), 1e-300);
}

/// Uniform random points in a box, fixed seed.
inline std::vector<Point> random_points(int n, double x0, double x1, double y0, double y1,
                                        unsigned seed = 12345) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    const double x = ux(rng);
    out.push_back({x, uy(rng)});
  }
  return out;
}

}  // namespace pa_test
