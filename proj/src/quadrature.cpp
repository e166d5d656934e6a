#include "gjef/quadrature.hpp"

#include <array>
#include <mutex>

#include "gjef/constants.hpp"

namespace gjef::quad {

namespace {

constexpr int kMaxLevel = 24;

// Nodes whose complement falls below this are dropped; the weights there are
// far below any representable contribution.
constexpr double kSmallestComplement = 1e-300;

TanhSinhLevel build_level(int level) {
  TanhSinhLevel out;
  const double h = std::ldexp(1.0, -level);
  const double start = level == 0 ? 0.0 : h;
  const double step = level == 0 ? 1.0 : 2.0 * h;
  for (double u = start;; u += step) {
    const double s = kPi * std::sinh(u);
    const double em = 2.0 / (1.0 + std::exp(s));
    if (!(em > kSmallestComplement)) {
      break;
    }
    out.complement.push_back(em);
    out.weight.push_back(0.5 * kPi * std::cosh(u) * em * (2.0 - em));
  }
  return out;
}

}  // namespace

const TanhSinhLevel& tanh_sinh_level(int level) {
  static std::array<std::once_flag, kMaxLevel + 1> flags;
  static std::array<TanhSinhLevel, kMaxLevel + 1> levels;
  if (level < 0 || level > kMaxLevel) {
    throw DomainError("tanh-sinh level out of range");
  }
  std::call_once(flags[level], [level] { levels[level] = build_level(level); });
  return levels[level];
}

GaussRule gauss_legendre(int n) {
  if (n < 1) {
    throw DomainError("Gauss-Legendre rule needs at least one node");
  }
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

const GaussRule& gauss_legendre_64() {
  static const GaussRule rule = gauss_legendre(64);
  return rule;
}

const GaussRule& gauss_legendre_32() {
  static const GaussRule rule = gauss_legendre(32);
  return rule;
}

CompositeRule composite(const GaussRule& rule, std::span<const double> breakpoints) {
  CompositeRule out;
  if (breakpoints.size() < 2) {
    return out;
  }
  out.nodes.reserve((breakpoints.size() - 1) * rule.nodes.size());
  out.weights.reserve(out.nodes.capacity());
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = breakpoints[i];
    const double hi = breakpoints[i + 1];
    const double mid = 0.5 * (lo + hi);
    const double rad = 0.5 * (hi - lo);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      out.nodes.push_back(mid + rad * rule.nodes[j]);
      out.weights.push_back(rad * rule.weights[j]);
    }
  }
  return out;
}

}  // namespace gjef::quad
