#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gjef/operator.hpp"

using namespace gjef;

namespace {

constexpr double kPiD = std::numbers::pi;
constexpr std::size_t kN = 4096;

double max_diff(const GridFunction& a, const GridFunction& b) { return (a - b).max_abs(); }

GridFunction parabola(std::size_t N, double alpha) {
  return GridFunction::sample([](double x) { return x * (1.0 - x); }, N, alpha);
}

struct Setup {
  EllipticFunction ef;
  SineCoefficients coeffs;
  BasisSampler sampler;
  Setup(const EllipticParams& ep, int M, std::size_t N)
      : ef(ep), coeffs(sine_coefficients(ef, M)), sampler(ef, N) {}
};

const Setup& half_modulus() {
  static const Setup s(EllipticParams(2.0, 2.0, 0.5), 201, kN);
  return s;
}

}  // namespace

TEST_CASE("grid function invariants") {
  CHECK_THROWS_AS(GridFunction(std::vector<double>(100, 0.0), 2.0), DomainError);
  CHECK_THROWS_AS(GridFunction(std::vector<double>(32, 0.0), 2.0), DomainError);
  CHECK_THROWS_AS(GridFunction(std::vector<double>(64, 0.0), 1.0), DomainError);
  const GridFunction one = GridFunction::sample([](double) { return 1.0; }, 64, 3.0);
  CHECK(one.norm() == doctest::Approx(1.0).epsilon(1e-15));
  // Midpoint rule for int_0^1 sin^2(pi x) = 1/2 is exact on this grid.
  CHECK(sine_mode(1, 256, 2.0).norm() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("antiperiodic extension") {
  const GridFunction s = sine_mode(1, kN, 2.0);
  CHECK(std::abs(antiperiodic_extend(s, 1.25) + std::sin(0.75 * kPiD)) < 1e-4);
  const GridFunction g = parabola(kN, 2.0);
  CHECK(std::abs(antiperiodic_extend(g, 1.5) + 0.25) < 1e-4);
  // Integer points: g*(m) = (-1)^{floor(m/2)} g(m mod 2).
  const GridFunction h = GridFunction::sample([](double x) { return 1.0 + x; }, kN, 2.0);
  CHECK(antiperiodic_extend(h, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(antiperiodic_extend(h, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(antiperiodic_extend(h, 2.0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(antiperiodic_extend(h, 3.0) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(antiperiodic_extend(h, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  // Reflection rule on (n, n+1].
  for (double x : {1.3, 2.7, 3.1, 5.55, 8.9}) {
    const double n = std::floor(x);
    CHECK(antiperiodic_extend(h, x) == doctest::Approx(-antiperiodic_extend(h, 2 * n - x)).epsilon(1e-12));
  }
  // Sine modes are their own extension.
  const GridFunction s3 = sine_mode(3, kN, 2.0);
  for (double x = 0.01; x < 9.0; x += 0.37) {
    CHECK(std::abs(antiperiodic_extend(s3, x) - std::sin(3 * kPiD * x)) < 1e-5);
  }
  CHECK_THROWS_AS(antiperiodic_extend(h, -0.1), DomainError);
}

TEST_CASE("isometries M_m") {
  const GridFunction g = parabola(kN, 2.0);
  CHECK(apply_M(1, g).samples() == g.samples());
  CHECK(max_diff(apply_M(3, sine_mode(2, kN, 2.0)), sine_mode(6, kN, 2.0)) < 1e-3);
  const GridFunction g3 = parabola(kN, 3.0);
  CHECK(std::abs(apply_M(5, g3).norm() - g3.norm()) < 1e-3);
  CHECK_THROWS_AS(apply_M(0, g), DomainError);

  const std::vector<std::function<double(double)>> fs = {
      [](double x) { return x * (1.0 - x); },
      [](double x) { return std::sin(kPiD * x) + 0.3 * std::sin(4 * kPiD * x); },
      [](double x) { return std::exp(x) - 1.0; },  // g(1) != 0: the extension jumps
  };
  for (const auto& f : fs) {
    for (double alpha : {1.5, 2.0, 3.0}) {
      for (int m : {1, 2, 3, 5, 8}) {
        auto rel_err = [&](std::size_t N) {
          const GridFunction g = GridFunction::sample(f, N, alpha);
          return std::abs(apply_M(m, g).norm() - g.norm()) / g.norm();
        };
        const double e = rel_err(kN);
        CHECK(e < 1e-2);
        if (e > 1e-12) {
          CHECK(rel_err(2 * kN) < e);
        }
      }
    }
  }
}

TEST_CASE("T maps sine modes to f_n") {
  const Setup& s = half_modulus();
  for (int n : {1, 2, 3}) {
    const GridFunction fn = s.sampler.f(n, 2.0);
    CHECK(max_diff(apply_T(sine_mode(n, kN, 2.0), s.coeffs), fn) < 1e-3);
    for (std::size_t j = 0; j < kN; j += 97) {
      CHECK(fn[j] == doctest::Approx(s.ef.sn(2.0 * s.ef.K() * n * GridFunction::x(j, kN))).epsilon(1e-12));
    }
  }
}

TEST_CASE("T is the identity in the sine case") {
  const SineCoefficients c = sine_coefficients(EllipticParams(2.0, 2.0, 0.0), 201);
  const GridFunction g = parabola(kN, 2.0);
  CHECK(max_diff(apply_T(g, c), g) < 1e-9);
}

TEST_CASE("operator bounds and linearity") {
  const Setup& s = half_modulus();
  double total = 0.0;
  double rest = 0.0;
  for (int m = 1; m <= s.coeffs.M; m += 2) {
    total += std::abs(s.coeffs.tau(m));
    if (m >= 3) rest += std::abs(s.coeffs.tau(m));
  }
  CHECK(total <= s.ef.K());
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (double alpha : {1.5, 2.0, 3.0}) {
    const std::vector<GridFunction> gs = {
        parabola(kN, alpha),
        sine_mode(5, kN, alpha),
        GridFunction::sample([](double x) { return x < 0.3 ? 1.0 : -0.5; }, kN, alpha),
    };
    for (const auto& g : gs) {
      const GridFunction tg = apply_T(g, s.coeffs);
      CHECK(tg.norm() <= total * g.norm() * (1.0 + 1e-3));
      const GridFunction tail = tg - s.coeffs.tau(1) * g;
      CHECK(tail.norm() <= rest * g.norm() * (1.0 + 1e-3));
    }
    const GridFunction a = gs[0];
    const GridFunction b = gs[2];
    const GridFunction lhs = apply_T(2.5 * a + (-1.25) * b, s.coeffs);
    const GridFunction rhs = 2.5 * apply_T(a, s.coeffs) + (-1.25) * apply_T(b, s.coeffs);
    CHECK(max_diff(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("Neumann inversion") {
  const Setup& s = half_modulus();
  const InversionResult r = invert_T(s.sampler.f(1, 2.0), s.coeffs);
  CHECK(max_diff(r.g, sine_mode(1, kN, 2.0)) < 1e-3);
  CHECK(r.residual <= 1e-8);

  const SineCoefficients id = sine_coefficients(EllipticParams(2.0, 2.0, 0.0), 201);
  const GridFunction u = parabola(kN, 2.0);
  const InversionResult ri = invert_T(u, id);
  CHECK(ri.iterations == 1);
  CHECK(max_diff(ri.g, u) < 1e-12);

  const SineCoefficients c9 = sine_coefficients(EllipticParams(2.0, 2.0, 0.9), 201);
  const NeumannMargin nm = neumann_margin(c9);
  const double tol = 1e-8;
  const GridFunction u9 = parabola(kN, 2.0);
  const InversionResult r9 = invert_T(u9, c9, tol);
  CHECK(r9.residual <= tol);
  const double rho = nm.rho();
  CHECK(rho < 1.0);
  CHECK(r9.iterations <= static_cast<int>(std::ceil(std::log(tol) / std::log(rho))));
  CHECK(max_diff(apply_T(r9.g, c9), u9) < 1e-6);

  const GridFunction g = parabola(kN, 2.0);
  CHECK((invert_T(apply_T(g, s.coeffs), s.coeffs).g - g).norm() < 1e-3);

  SineCoefficients bad = id;
  bad.values[0] = 0.1;
  bad.values[2] = 0.5;
  CHECK_THROWS_AS(invert_T(u, bad), RefusedError);
}

TEST_CASE("basis expansion") {
  const Setup& s = half_modulus();
  const BasisExpansion e3 = expand_in_basis(s.sampler.f(3, 2.0), s.coeffs, 16, s.sampler);
  CHECK(e3.coefficients[2] == doctest::Approx(1.0).epsilon(1e-3));
  for (int n = 1; n <= 16; ++n) {
    if (n != 3) CHECK(std::abs(e3.coefficients[n - 1]) < 1e-3);
  }

  const SineCoefficients id = sine_coefficients(EllipticParams(2.0, 2.0, 0.0), 201);
  const BasisExpansion e1 = expand_in_basis(sine_mode(1, kN, 2.0), id, 8);
  CHECK(e1.coefficients[0] == doctest::Approx(1.0).epsilon(1e-9));
  for (int n = 2; n <= 8; ++n) CHECK(std::abs(e1.coefficients[n - 1]) < 1e-9);

  const GridFunction u = parabola(kN, 2.0);
  double prev = INFINITY;
  for (int n_exp : {4, 8, 16, 32}) {
    const BasisExpansion ex = expand_in_basis(u, s.coeffs, n_exp, s.sampler);
    CHECK(ex.residual_norm >= 0.0);
    CHECK(ex.residual_norm < prev);
    CHECK(ex.N == kN);
    CHECK(ex.N_exp == n_exp);
    prev = ex.residual_norm;
  }
  CHECK(prev < 0.01);
  CHECK_THROWS_AS(expand_in_basis(u, s.coeffs, static_cast<int>(kN / 4 + 1), s.sampler), DomainError);
}

TEST_CASE("Riesz bounds at alpha = 2") {
  const Setup& s = half_modulus();
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  std::vector<GridFunction> fs;
  for (int n = 1; n <= 8; ++n) fs.push_back(s.sampler.f(n, 2.0));
  double lo = INFINITY;
  double hi = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GridFunction sum = GridFunction::zeros(kN, 2.0);
    double l2 = 0.0;
    for (int n = 0; n < 8; ++n) {
      const double a = nd(rng);
      sum += a * fs[n];
      l2 += a * a;
    }
    const double ratio = sum.norm() / std::sqrt(l2);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(lo > 0.0);
  CHECK(hi < INFINITY);
  MESSAGE("empirical Riesz interval [" << lo << ", " << hi << "]");
}
