#include "gjef/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gjef/constants.hpp"
#include "gjef/parallel.hpp"
#include "gjef/quadrature.hpp"

namespace gjef {

namespace {

void require_cutoff(int M) {
  if (M < 1) {
    throw DomainError("coefficient cutoff must be >= 1, got " + std::to_string(M));
  }
}

// Panels on [0, 1/2]: uniform of width about 4/M (two periods of the fastest
// sine), refined geometrically towards both ends where f_1 has fractional
// power behaviour.
std::vector<double> panel_breakpoints(int M) {
  constexpr int kGraded = 12;
  constexpr double kRatio = 0.25;
  const double width = std::min(1.0 / 16.0, 4.0 / M);
  const int uniform = static_cast<int>(std::ceil(0.5 / width));
  const double h = 0.5 / uniform;

  std::vector<double> bp;
  bp.push_back(0.0);
  double g = h * std::pow(kRatio, kGraded);
  for (int i = 0; i < kGraded; ++i, g /= kRatio) {
    bp.push_back(g);
  }
  for (int i = 1; i < uniform; ++i) {
    bp.push_back(i * h);
  }
  g = h * kRatio;
  for (int i = 0; i < kGraded; ++i, g *= kRatio) {
    bp.push_back(0.5 - g);
  }
  bp.push_back(0.5);
  std::sort(bp.begin(), bp.end());
  return bp;
}

std::vector<double> f1_at(const EllipticFunction& ef, const std::vector<double>& xs) {
  std::vector<double> f(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { f[i] = ef.f1_half(xs[i]); });
  return f;
}

// tau_m for odd m is 4 int_0^{1/2} f_1(x) sin(m pi x) dx by the symmetry
// f_1(1 - x) = f_1(x).
double project(const quad::CompositeRule& rule, const std::vector<double>& f, int m) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += rule.weights[i] * f[i] * std::sin(m * kPi * rule.nodes[i]);
  }
  return 4.0 * s;
}

}  // namespace

double SineCoefficients::tau(int m) const {
  if (m < 1 || m > M) {
    throw DomainError("tau index " + std::to_string(m) + " outside 1.." + std::to_string(M));
  }
  return values[m - 1];
}

SineCoefficients sine_coefficients(const EllipticFunction& ef, int M) {
  require_cutoff(M);
  const auto bp = panel_breakpoints(M);
  const auto fine = quad::composite(quad::gauss_legendre_64(), bp);
  const auto coarse = quad::composite(quad::gauss_legendre_32(), bp);
  const auto f_fine = f1_at(ef, fine.nodes);
  const auto f_coarse = f1_at(ef, coarse.nodes);

  SineCoefficients c;
  c.params = ef.params();
  c.K = ef.K();
  c.M = M;
  c.values.assign(M, 0.0);
  for (int m = 1; m <= M; m += 2) {
    const double v = project(fine, f_fine, m);
    c.values[m - 1] = v;
    c.quad_err = std::max(c.quad_err, std::abs(v - project(coarse, f_coarse, m)));
  }
  return c;
}

SineCoefficients sine_coefficients(const EllipticParams& ep, int M, const Tolerance& tol) {
  return sine_coefficients(EllipticFunction(ep, tol), M);
}

double tau(const EllipticParams& ep, int m) {
  if (m < 1) {
    throw DomainError("tau requires m >= 1, got " + std::to_string(m));
  }
  if (m % 2 == 0) {
    return 0.0;
  }
  return sine_coefficients(ep, m).tau(m);
}

double tau_bound_from_K(double K, int m) {
  if (m < 1 || m % 2 == 0) {
    throw DomainError("tau_bound requires odd m >= 1, got " + std::to_string(m));
  }
  return 8.0 * K / (static_cast<double>(m) * m * kPi * kPi);
}

double tau_bound(const EllipticParams& ep, int m) { return tau_bound_from_K(complete_K(ep), m); }

double odd_reciprocal_square_tail(int M) {
  double partial = 0.0;
  // Sum smallest terms first.
  const int top = M % 2 == 0 ? M - 1 : M;
  for (int m = top; m >= 1; m -= 2) {
    partial += 1.0 / (static_cast<double>(m) * m);
  }
  return std::max(0.0, kPi * kPi / 8.0 - partial);
}

double NeumannMargin::rho() const { return (sum_small + tail_bound) / std::abs(tau1); }

NeumannMargin neumann_margin(const SineCoefficients& coeffs) {
  if (coeffs.M < 3 || coeffs.M % 2 == 0) {
    throw DomainError("Neumann cutoff must be odd and >= 3, got " + std::to_string(coeffs.M));
  }
  NeumannMargin r;
  r.M = coeffs.M;
  r.quad_err = coeffs.quad_err;
  r.tau1 = coeffs.tau(1);
  for (int m = coeffs.M; m >= 3; m -= 2) {
    r.sum_small += std::abs(coeffs.tau(m));
  }
  r.tail_bound = 8.0 * coeffs.K / (kPi * kPi) * odd_reciprocal_square_tail(coeffs.M);
  r.margin = std::abs(r.tau1) - r.sum_small - r.tail_bound;
  return r;
}

NeumannMargin neumann_margin(const EllipticParams& ep, int M) {
  if (M < 3 || M % 2 == 0) {
    throw DomainError("Neumann cutoff must be odd and >= 3, got " + std::to_string(M));
  }
  return neumann_margin(sine_coefficients(ep, M));
}

}  // namespace gjef
