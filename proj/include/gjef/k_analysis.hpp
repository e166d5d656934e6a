#pragma once

#include <optional>
#include <vector>

#include "gjef/types.hpp"

namespace gjef {

/// The four terms of the estimate
///   (pi/2) asin_r(k)/k <= K_{r'r}(k) <= (pi/2) artanh_r(k)/k <= (pi/2)(1-k^r)^{-1/r}
/// with pi = pi_{r'r}.
struct SandwichBounds {
  double lower = 0.0;
  double value = 0.0;
  double upper_tanh = 0.0;
  double upper_alg = 0.0;

  bool ordered(double slack = 1e-12) const {
    return lower <= value + slack && value <= upper_tanh + slack && upper_tanh <= upper_alg + slack;
  }
};

SandwichBounds sandwich(double r, double k);

/// K_pq(k) - (p'/q) K_{q'p'}(k^{q/p'}); zero up to quadrature error.
double symmetry_residual(const ExponentPair& e, double k);

/// (r/q) K_{r'r}(k^{q/r}) - K_pq(k); non-negative.
double homo_gap(const ExponentPair& e, double k);

struct ConvexityCheck {
  double ratio = 0.0;        // sn_pq(x,k) / x
  double lower_bound = 0.0;  // 1 / K_pq(k)
  bool holds = false;        // lower_bound <= ratio < 1, with 1e-12 slack
};

/// sn_pq(x,k)/x for x in (0, K_pq(k)].
ConvexityCheck convexity_ratio(const EllipticParams& ep, double x);

enum class ScanParameter { P, Q, K };

struct ScanRequest {
  ScanParameter varying = ScanParameter::K;
  double p = 2.0;  // fixed values; the varying one is ignored
  double q = 2.0;
  double k = 0.0;
  std::vector<double> grid;  // increasing values of the varying parameter
  std::vector<double> xs;    // normalized points in (0, 1/2]
};

struct ScanViolation {
  std::size_t grid_index = 0;  // index of the later parameter value
  double x = 0.0;              // NaN when the violation is in K_pq(k)
  double previous = 0.0;
  double current = 0.0;
};

struct ScanResult {
  bool ok = true;
  std::optional<ScanViolation> first_violation;
  std::vector<std::vector<double>> values;  // values[i][j] = sn_pq(2K x_j, k) at grid[i]
  std::vector<double> K_values;
};

/// Checks that sn_pq(2K_pq(k)x, k) and K_pq(k) are decreasing in p and in q
/// and increasing in k, at every x of the request.
ScanResult monotonicity_scan(const ScanRequest& request);

}  // namespace gjef
