#pragma once

#include <cmath>
#include <utility>

namespace gjef::roots {

struct NewtonOptions {
  double xtol = 1e-13;
  bool relative = false;  // compare |dz| against xtol * |z| instead of xtol
  int max_iter = 60;
};

struct NewtonResult {
  double root = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Newton's method safeguarded by bisection for an increasing function g on
/// [lo, hi] with g(lo) <= 0 <= g(hi). The endpoints are never evaluated.
/// `fn(z)` returns {g(z), g'(z)}.
template <class Fn>
NewtonResult safeguarded_newton(Fn&& fn, double lo, double hi, double z0,
                                const NewtonOptions& opt = {}) {
  NewtonResult res;
  double z = (z0 > lo && z0 < hi) ? z0 : 0.5 * (lo + hi);
  for (int it = 1; it <= opt.max_iter; ++it) {
    res.iterations = it;
    const auto [g, dg] = fn(z);
    if (g == 0.0) {
      res.root = z;
      res.converged = true;
      return res;
    }
    if (g < 0.0) {
      lo = z;
    } else {
      hi = z;
    }
    double next = z - g / dg;
    if (!std::isfinite(next) || !(dg > 0.0) || next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);
    }
    const double step = std::fabs(next - z);
    z = next;
    const double scale = opt.relative ? std::fabs(z) : 1.0;
    if (step <= opt.xtol * scale || hi - lo <= opt.xtol * scale) {
      res.root = z;
      res.converged = true;
      return res;
    }
  }
  res.root = z;
  return res;
}

/// Bisection for the boundary of a predicate that holds at lo and fails at
/// hi. Returns the midpoint of the final bracket.
template <class Pred>
double bisect_boundary(Pred&& holds, double lo, double hi, double xtol) {
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gjef::roots
