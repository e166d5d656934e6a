#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "gjef/types.hpp"

namespace gjef::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // |I_L - I_{L-1}| at the accepted level
  int levels = 0;
};

/// Precomputed double-exponential nodes for one refinement level. For a node
/// at u >= 0, `complement` is 1 - tanh(pi/2 sinh u) and `weight` the
/// derivative of the map; the mirrored node at -u shares both.
struct TanhSinhLevel {
  std::vector<double> complement;
  std::vector<double> weight;
};

/// Level 0 holds u = 0, 1, 2, ...; level l >= 1 holds the odd multiples of
/// 2^-l. Tables are built on first use and shared read-only afterwards.
const TanhSinhLevel& tanh_sinh_level(int level);

/// Tanh-sinh quadrature of f over [a, b]. The integrand is called as
/// f(x, x - a, b - x) with both distances computed without cancellation, so
/// endpoint singularities can be evaluated from the distance directly.
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, const Tolerance& tol = {}) {
  QuadResult out;
  const double half = 0.5 * (b - a);
  if (!(half > 0.0)) {
    return out;
  }

  auto side_sum = [&](const TanhSinhLevel& lv, std::size_t first, double scale_hint) {
    double acc = 0.0;
    bool right_live = true;
    bool left_live = true;
    for (std::size_t i = first; i < lv.complement.size() && (right_live || left_live); ++i) {
      const double em = lv.complement[i];
      const double near = half * em;
      if (near == 0.0) {
        break;
      }
      const double far = half * (2.0 - em);
      const double w = half * lv.weight[i];
      if (right_live) {
        const double term = w * f(b - near, far, near);
        acc += term;
        if (std::fabs(term) <= 1e-18 * scale_hint && em < 0.1) right_live = false;
      }
      if (left_live) {
        const double term = w * f(a + near, near, far);
        acc += term;
        if (std::fabs(term) <= 1e-18 * scale_hint && em < 0.1) left_live = false;
      }
    }
    return acc;
  };

  // Level 0 with step h = 1.
  const TanhSinhLevel& l0 = tanh_sinh_level(0);
  const double centre = half * l0.weight[0] * f(a + half, half, half);
  double sum = centre;
  sum += side_sum(l0, 1, std::fabs(centre) + 1e-300);
  double estimate = sum;
  double h = 1.0;

  for (int level = 1; level <= tol.max_subdivisions; ++level) {
    h *= 0.5;
    sum += side_sum(tanh_sinh_level(level), 0, std::fabs(estimate) + 1e-300);
    const double next = h * sum;
    const double diff = std::fabs(next - estimate);
    estimate = next;
    out.levels = level;
    out.error = diff;
    if (level >= 3 && diff <= std::max(tol.abs_tol, tol.rel_tol * std::fabs(next))) {
      break;
    }
  }
  out.value = estimate;
  return out;
}

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Cached 64- and 32-node rules.
const GaussRule& gauss_legendre_64();
const GaussRule& gauss_legendre_32();

/// Composite rule built from a rule on [-1, 1] and panel breakpoints.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

CompositeRule composite(const GaussRule& rule, std::span<const double> breakpoints);

}  // namespace gjef::quad
