#pragma once

#include <functional>
#include <vector>

#include "gjef/elliptic.hpp"
#include "gjef/fourier.hpp"
#include "gjef/types.hpp"

namespace gjef {

/// Samples at the midpoints x_j = (j + 1/2)/N of [0, 1] together with the
/// exponent alpha of the L^alpha norm. N is a power of two, at least 64.
class GridFunction {
public:
  GridFunction(std::vector<double> samples, double alpha);

  static GridFunction sample(const std::function<double(double)>& f, std::size_t N, double alpha);
  static GridFunction zeros(std::size_t N, double alpha);

  std::size_t N() const noexcept { return samples_.size(); }
  double alpha() const noexcept { return alpha_; }
  const std::vector<double>& samples() const noexcept { return samples_; }
  double operator[](std::size_t j) const { return samples_[j]; }
  static double x(std::size_t j, std::size_t N) { return (j + 0.5) / static_cast<double>(N); }

  /// Linear interpolation on [0, 1], extrapolating on the two end half-cells.
  double interpolate(double t) const;

  /// (sum |g_j|^alpha / N)^{1/alpha}.
  double norm() const;
  double max_abs() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(double s);

private:
  std::vector<double> samples_;
  double alpha_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double s, GridFunction a);

/// g*(x) for x >= 0: g on [0, 1], and g*(x) = -g*(2n - x) on (n, n + 1].
double antiperiodic_extend(const GridFunction& g, double x);

/// Samples of g*(m x_j).
GridFunction apply_M(int m, const GridFunction& g);

/// sum_{m odd <= M} tau_m M_m g.
GridFunction apply_T(const GridFunction& g, const SineCoefficients& coeffs);

struct InversionResult {
  GridFunction g;
  int iterations = 0;
  double residual = 0.0;  // ||T g - u||_alpha
};

/// Fixed-point iteration g <- (u - (T - tau_1 I) g) / tau_1 from g = 0, stopped
/// once ||T g - u||_alpha <= tol. Refused when the Neumann margin of the
/// coefficients is not positive.
InversionResult invert_T(const GridFunction& u, const SineCoefficients& coeffs, double tol = 1e-8,
                         int max_iter = 500);

/// Grid samples of f_n(x) = f_1(n x) with f_1(x) = sn_pq(2 K x, k), built from
/// one table of f_1 on [0, 1/2] at spacing 1/(2N).
class BasisSampler {
public:
  BasisSampler(const EllipticFunction& ef, std::size_t N);

  std::size_t N() const noexcept { return N_; }
  GridFunction f(int n, double alpha) const;
  /// f_1 at x = s / (2N) for any integer s >= 0.
  double f1_at_half_index(std::size_t s) const;

private:
  std::size_t N_;
  std::vector<double> table_;  // f_1(i / (2N)), i = 0..N
};

/// Samples of e_n(x) = sin(n pi x).
GridFunction sine_mode(int n, std::size_t N, double alpha);

struct BasisExpansion {
  EllipticParams params{2.0, 2.0, 0.0};
  double alpha = 2.0;
  std::size_t N = 0;
  int N_exp = 0;
  std::vector<double> coefficients;  // alpha_n, n = 1..N_exp
  double residual_norm = 0.0;        // ||u - sum alpha_n f_n||_alpha
  int iterations = 0;
};

/// alpha_n = 2 int_0^1 (T^{-1} u)(x) sin(n pi x) dx for n <= N_exp <= N/4.
BasisExpansion expand_in_basis(const GridFunction& u, const SineCoefficients& coeffs, int N_exp,
                               double tol = 1e-8);
BasisExpansion expand_in_basis(const GridFunction& u, const SineCoefficients& coeffs, int N_exp,
                               const BasisSampler& sampler, double tol = 1e-8);

}  // namespace gjef
