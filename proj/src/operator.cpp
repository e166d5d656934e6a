#include "gjef/operator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gjef/constants.hpp"
#include "gjef/parallel.hpp"

namespace gjef {

namespace {

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (a.N() != b.N()) {
    throw DomainError("grid functions have different resolutions");
  }
}

GridFunction apply_tail(const GridFunction& g, const SineCoefficients& coeffs, bool with_first) {
  const std::size_t N = g.N();
  std::vector<double> out(N, 0.0);
  parallel_for(N, [&](std::size_t j) {
    const double x = GridFunction::x(j, N);
    double s = with_first ? coeffs.values[0] * g[j] : 0.0;
    for (int m = 3; m <= coeffs.M; m += 2) {
      s += coeffs.values[m - 1] * antiperiodic_extend(g, m * x);
    }
    out[j] = s;
  });
  return GridFunction(std::move(out), g.alpha());
}

}  // namespace

GridFunction::GridFunction(std::vector<double> samples, double alpha)
    : samples_(std::move(samples)), alpha_(alpha) {
  if (samples_.size() < 64 || !std::has_single_bit(samples_.size())) {
    throw DomainError("grid size must be a power of two >= 64, got " + std::to_string(samples_.size()));
  }
  if (!(alpha_ > 1.0) || !std::isfinite(alpha_)) {
    throw DomainError("norm exponent must lie in (1, inf), got " + std::to_string(alpha_));
  }
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, std::size_t N, double alpha) {
  std::vector<double> s(N);
  for (std::size_t j = 0; j < N; ++j) {
    s[j] = f(x(j, N));
  }
  return GridFunction(std::move(s), alpha);
}

GridFunction GridFunction::zeros(std::size_t N, double alpha) {
  return GridFunction(std::vector<double>(N, 0.0), alpha);
}

double GridFunction::interpolate(double t) const {
  const std::size_t n = N();
  const double s = t * static_cast<double>(n) - 0.5;
  const auto j = static_cast<std::size_t>(std::clamp(std::floor(s), 0.0, static_cast<double>(n - 2)));
  const double w = s - static_cast<double>(j);
  return samples_[j] + w * (samples_[j + 1] - samples_[j]);
}

double GridFunction::norm() const {
  double s = 0.0;
  for (double v : samples_) {
    s += std::pow(std::abs(v), alpha_);
  }
  return std::pow(s / static_cast<double>(N()), 1.0 / alpha_);
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : samples_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  require_same_grid(*this, o);
  for (std::size_t j = 0; j < N(); ++j) {
    samples_[j] += o.samples_[j];
  }
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  require_same_grid(*this, o);
  for (std::size_t j = 0; j < N(); ++j) {
    samples_[j] -= o.samples_[j];
  }
  return *this;
}

GridFunction& GridFunction::operator*=(double s) {
  for (double& v : samples_) {
    v *= s;
  }
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double s, GridFunction a) { return a *= s; }

double antiperiodic_extend(const GridFunction& g, double x) {
  if (!(x >= 0.0)) {
    throw DomainError("antiperiodic extension needs x >= 0");
  }
  const double n = std::floor(x);
  if (x == n) {
    // g*(m) = (-1)^{floor(m/2)} g(m mod 2)
    const double r = std::fmod(n, 2.0);
    const double v = g.interpolate(r);
    return std::fmod(n, 4.0) >= 2.0 ? -v : v;
  }
  const double r = std::fmod(x, 2.0);
  return r <= 1.0 ? g.interpolate(r) : -g.interpolate(2.0 - r);
}

GridFunction apply_M(int m, const GridFunction& g) {
  if (m < 1) {
    throw DomainError("M_m needs m >= 1");
  }
  if (m == 1) {
    return g;
  }
  const std::size_t N = g.N();
  std::vector<double> out(N);
  for (std::size_t j = 0; j < N; ++j) {
    out[j] = antiperiodic_extend(g, m * GridFunction::x(j, N));
  }
  return GridFunction(std::move(out), g.alpha());
}

GridFunction apply_T(const GridFunction& g, const SineCoefficients& coeffs) {
  if (coeffs.M < 1) {
    throw DomainError("apply_T needs at least one coefficient");
  }
  return apply_tail(g, coeffs, true);
}

InversionResult invert_T(const GridFunction& u, const SineCoefficients& coeffs, double tol, int max_iter) {
  const NeumannMargin nm = neumann_margin(coeffs);
  if (!(nm.margin > 0.0)) {
    throw RefusedError("Neumann margin " + std::to_string(nm.margin) + " is not positive; T^{-1} not certified");
  }
  const double tau1 = nm.tau1;
  InversionResult res{GridFunction::zeros(u.N(), u.alpha())};
  GridFunction rest = GridFunction::zeros(u.N(), u.alpha());  // (T - tau_1 I) g
  for (int it = 1; it <= max_iter; ++it) {
    res.g = (1.0 / tau1) * (u - rest);
    GridFunction next_rest = apply_tail(res.g, coeffs, false);
    // T g - u = tau_1 g + rest(g) - u = rest(g) - rest(g_prev).
    res.residual = (next_rest - rest).norm();
    rest = std::move(next_rest);
    res.iterations = it;
    if (res.residual <= tol) {
      return res;
    }
  }
  throw RefusedError("Neumann iteration did not reach tolerance in " + std::to_string(max_iter) + " steps");
}

BasisSampler::BasisSampler(const EllipticFunction& ef, std::size_t N) : N_(N), table_(N + 1) {
  parallel_for(N + 1, [&](std::size_t i) { table_[i] = ef.f1_half(static_cast<double>(i) / (2.0 * N)); });
}

double BasisSampler::f1_at_half_index(std::size_t s) const {
  s %= 4 * N_;
  double sign = 1.0;
  if (s > 2 * N_) {
    s -= 2 * N_;
    sign = -1.0;
  }
  return sign * (s <= N_ ? table_[s] : table_[2 * N_ - s]);
}

GridFunction BasisSampler::f(int n, double alpha) const {
  if (n < 1) {
    throw DomainError("basis index must be >= 1");
  }
  std::vector<double> s(N_);
  for (std::size_t j = 0; j < N_; ++j) {
    s[j] = f1_at_half_index(static_cast<std::size_t>(n) * (2 * j + 1));
  }
  return GridFunction(std::move(s), alpha);
}

GridFunction sine_mode(int n, std::size_t N, double alpha) {
  return GridFunction::sample([n](double x) { return std::sin(n * kPi * x); }, N, alpha);
}

BasisExpansion expand_in_basis(const GridFunction& u, const SineCoefficients& coeffs, int N_exp,
                               const BasisSampler& sampler, double tol) {
  if (N_exp < 1 || static_cast<std::size_t>(N_exp) > u.N() / 4) {
    throw DomainError("expansion length must lie in 1..N/4");
  }
  if (sampler.N() != u.N()) {
    throw DomainError("basis sampler resolution differs from the input grid");
  }
  const InversionResult inv = invert_T(u, coeffs, tol);

  BasisExpansion ex;
  ex.params = coeffs.params;
  ex.alpha = u.alpha();
  ex.N = u.N();
  ex.N_exp = N_exp;
  ex.iterations = inv.iterations;
  ex.coefficients.assign(N_exp, 0.0);
  const double h = 1.0 / static_cast<double>(u.N());
  for (int n = 1; n <= N_exp; ++n) {
    double s = 0.0;
    for (std::size_t j = 0; j < u.N(); ++j) {
      s += inv.g[j] * std::sin(n * kPi * GridFunction::x(j, u.N()));
    }
    ex.coefficients[n - 1] = 2.0 * h * s;
  }

  GridFunction rec = GridFunction::zeros(u.N(), u.alpha());
  for (int n = 1; n <= N_exp; ++n) {
    rec += ex.coefficients[n - 1] * sampler.f(n, u.alpha());
  }
  ex.residual_norm = (u - rec).norm();
  return ex;
}

BasisExpansion expand_in_basis(const GridFunction& u, const SineCoefficients& coeffs, int N_exp, double tol) {
  const BasisSampler sampler(EllipticFunction(coeffs.params), u.N());
  return expand_in_basis(u, coeffs, N_exp, sampler, tol);
}

}  // namespace gjef
