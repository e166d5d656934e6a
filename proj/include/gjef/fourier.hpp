#pragma once

#include <vector>

#include "gjef/elliptic.hpp"
#include "gjef/types.hpp"

namespace gjef {

inline constexpr int kDefaultCutoff = 201;

/// Sine coefficients tau_m = 2 int_0^1 f_1(x) sin(m pi x) dx of
/// f_1(x) = sn_pq(2 K x, k), for m = 1..M. Even coefficients are stored as
/// exact zeros.
struct SineCoefficients {
  EllipticParams params{2.0, 2.0, 0.0};
  double K = 0.0;
  int M = 0;
  std::vector<double> values;  // values[m - 1] = tau_m
  double quad_err = 0.0;       // max |64-node - 32-node| over the stored m

  double tau(int m) const;
};

SineCoefficients sine_coefficients(const EllipticFunction& ef, int M);
SineCoefficients sine_coefficients(const EllipticParams& ep, int M, const Tolerance& tol = {});

/// A single coefficient; 0 for even m.
double tau(const EllipticParams& ep, int m);

/// 8 K_pq(k) / (m^2 pi^2) for odd m.
double tau_bound(const EllipticParams& ep, int m);
double tau_bound_from_K(double K, int m);

/// sum over odd m > M of 1/m^2, from pi^2/8 minus the partial sum.
double odd_reciprocal_square_tail(int M);

struct NeumannMargin {
  double tau1 = 0.0;
  double sum_small = 0.0;   // sum_{m odd, 3 <= m <= M} |tau_m|
  double tail_bound = 0.0;  // (8K/pi^2) sum_{m odd > M} 1/m^2
  double margin = 0.0;      // |tau_1| - sum_small - tail_bound
  int M = 0;
  double quad_err = 0.0;

  /// (sum_small + tail_bound) / |tau_1|, the contraction ratio of the
  /// fixed-point iteration for T^{-1}.
  double rho() const;
};

NeumannMargin neumann_margin(const SineCoefficients& coeffs);
NeumannMargin neumann_margin(const EllipticParams& ep, int M = kDefaultCutoff);

}  // namespace gjef
