#include "gjef/k_analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gjef/elliptic.hpp"
#include "gjef/parallel.hpp"
#include "gjef/trig.hpp"

namespace gjef {

namespace {

constexpr double kSlack = 1e-12;

}  // namespace

SandwichBounds sandwich(double r, double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("sandwich requires 0 < k < 1, got " + std::to_string(k));
  }
  const ExponentPair e = ExponentPair::conjugate_pair(r);
  const double half_pi = 0.5 * pi_pq(e);
  SandwichBounds b;
  b.lower = half_pi * asin_r(r, k) / k;
  b.value = complete_K(EllipticParams(e, k));
  b.upper_tanh = half_pi * artanh_r(r, k) / k;
  b.upper_alg = half_pi * std::pow(-std::expm1(r * std::log(k)), -1.0 / r);
  return b;
}

double symmetry_residual(const ExponentPair& e, double k) {
  const double pp = e.p_prime();
  const double qp = e.q() / (e.q() - 1.0);
  const double lhs = complete_K(EllipticParams(e, k));
  const double rhs = pp / e.q() * complete_K(EllipticParams(ExponentPair(qp, pp), std::pow(k, e.q() / pp)));
  return lhs - rhs;
}

double homo_gap(const ExponentPair& e, double k) {
  const double r = e.r();
  const double bound =
      r / e.q() * complete_K(EllipticParams(ExponentPair::conjugate_pair(r), std::pow(k, e.q() / r)));
  return bound - complete_K(EllipticParams(e, k));
}

ConvexityCheck convexity_ratio(const EllipticParams& ep, double x) {
  const EllipticFunction ef(ep);
  if (!(x > 0.0 && x <= ef.K())) {
    throw DomainError("convexity_ratio requires 0 < x <= K_pq(k)");
  }
  ConvexityCheck c;
  c.ratio = ef.principal(x).sn / x;
  c.lower_bound = 1.0 / ef.K();
  c.holds = c.ratio >= c.lower_bound - kSlack && c.ratio < 1.0 + kSlack;
  return c;
}

ScanResult monotonicity_scan(const ScanRequest& request) {
  const auto& grid = request.grid;
  if (grid.size() < 2) {
    throw DomainError("monotonicity_scan needs at least two parameter values");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError("monotonicity_scan grid must be strictly increasing");
    }
  }
  if (request.xs.empty()) {
    throw DomainError("monotonicity_scan needs at least one x value");
  }
  for (double x : request.xs) {
    if (!(x > 0.0 && x <= 0.5)) {
      throw DomainError("monotonicity_scan samples x in (0, 1/2]");
    }
  }

  auto params_at = [&](double v) {
    switch (request.varying) {
      case ScanParameter::P: return EllipticParams(v, request.q, request.k);
      case ScanParameter::Q: return EllipticParams(request.p, v, request.k);
      case ScanParameter::K: break;
    }
    return EllipticParams(request.p, request.q, v);
  };

  ScanResult res;
  res.values.assign(grid.size(), std::vector<double>(request.xs.size()));
  res.K_values.assign(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t i) {
    const EllipticFunction ef(params_at(grid[i]));
    res.K_values[i] = ef.K();
    for (std::size_t j = 0; j < request.xs.size(); ++j) {
      res.values[i][j] = ef.f1_half(request.xs[j]);
    }
  });

  // +1: increasing expected, -1: decreasing expected.
  const double direction = request.varying == ScanParameter::K ? 1.0 : -1.0;
  auto violates = [&](double prev, double cur) { return direction * (cur - prev) < -kSlack; };
  for (std::size_t i = 1; i < grid.size() && res.ok; ++i) {
    if (violates(res.K_values[i - 1], res.K_values[i])) {
      res.ok = false;
      res.first_violation =
          ScanViolation{i, std::numeric_limits<double>::quiet_NaN(), res.K_values[i - 1], res.K_values[i]};
      break;
    }
    for (std::size_t j = 0; j < request.xs.size(); ++j) {
      if (violates(res.values[i - 1][j], res.values[i][j])) {
        res.ok = false;
        res.first_violation = ScanViolation{i, request.xs[j], res.values[i - 1][j], res.values[i][j]};
        break;
      }
    }
  }
  return res;
}

}  // namespace gjef
