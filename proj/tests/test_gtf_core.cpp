#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gjef/trig.hpp"
#include "oracles.hpp"

using namespace gjef;

namespace {

constexpr double kPiD = std::numbers::pi;

double central(const std::function<double(double)>& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("exponent pair invariants") {
  const ExponentPair e(3.0, 1.7);
  CHECK(1.0 / e.p() + 1.0 / e.p_prime() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.r() == doctest::Approx(1.7));
  CHECK(ExponentPair(1.5, 2.0).r() == doctest::Approx(3.0));
  CHECK_THROWS_AS(ExponentPair(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(ExponentPair(2.0, 0.5), DomainError);
  CHECK_THROWS_AS(ExponentPair(INFINITY, 2.0), DomainError);
  const ExponentPair c = ExponentPair::conjugate_pair(4.0);
  CHECK(c.p_prime() == doctest::Approx(4.0));
  CHECK(c.q() == 4.0);
}

TEST_CASE("beta") {
  CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(beta(0.5, 0.5) == doctest::Approx(kPiD).epsilon(1e-14));
  CHECK(beta(0.3, 2.5) == doctest::Approx(beta(2.5, 0.3)).epsilon(1e-15));
  CHECK(beta(3.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  // Large arguments go through log-Gamma.
  CHECK(beta(100.0, 100.0) == doctest::Approx(std::exp(2 * std::lgamma(100.0) - std::lgamma(200.0))).epsilon(1e-12));
  // (2/q) B(1 - 1/p, 1/q) against brute-force quadrature of the half period.
  for (double p : {1.3, 2.0, 4.5}) {
    for (double q : {1.2, 2.0, 6.0}) {
      CHECK(pi_pq(ExponentPair(p, q)) == doctest::Approx(oracle::pi_pq(p, q)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(beta(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(beta(1.0, -2.0), DomainError);
}

TEST_CASE("pi_pq") {
  CHECK(pi_pq(ExponentPair(2.0, 2.0)) == doctest::Approx(kPiD).epsilon(1e-14));
  const double r_small = 1.001;
  const double r_big = 1000.0;
  CHECK(std::abs(pi_pq(ExponentPair::conjugate_pair(r_small)) - 2.0) < 0.05);
  CHECK(std::abs(pi_pq(ExponentPair::conjugate_pair(r_big)) - 4.0) < 0.05);
  // (2/r) B(1/r, 1/r) form for conjugate pairs.
  for (double r : {1.5, 2.0, 3.0, 7.0}) {
    CHECK(pi_pq(ExponentPair::conjugate_pair(r)) ==
          doctest::Approx(2.0 / r * oracle::beta(1.0 / r, 1.0 / r)).epsilon(1e-12));
  }
  // Quadrature total agrees with the Beta form.
  for (double p : {1.2, 3.0}) {
    for (double q : {1.5, 5.0}) {
      const ExponentPair e(p, q);
      CHECK(TrigFunctions(e).half_period() == doctest::Approx(pi_pq(e)).epsilon(1e-10));
    }
  }
}

TEST_CASE("t B(t,t) is decreasing on (0,1)") {
  double prev = INFINITY;
  for (int i = 1; i <= 20; ++i) {
    const double t = i / 21.0;
    const double v = t * beta(t, t);
    CHECK(v < prev);
    CHECK(v > 1.0);
    CHECK(v < 2.0);
    prev = v;
  }
  CHECK(1.0 * beta(1.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("asin_pq") {
  CHECK(asin_pq(ExponentPair(2.0, 2.0), 1.0) == doctest::Approx(kPiD / 2).epsilon(1e-14));
  CHECK(asin_pq(ExponentPair(3.7, 1.4), 0.0) == 0.0);
  CHECK(asin_pq(ExponentPair(3.0, 4.0), 0.5) == doctest::Approx(oracle::asin_pq(3.0, 4.0, 0.5)).epsilon(1e-12));
  CHECK(asin_pq(ExponentPair(1.4, 2.5), 0.97) == doctest::Approx(oracle::asin_pq(1.4, 2.5, 0.97)).epsilon(1e-11));
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double v = asin_pq(ExponentPair(1.6, 3.0), i / 50.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(asin_pq(ExponentPair(2.0, 2.0), 1.5), DomainError);
  CHECK_THROWS_AS(asin_pq(ExponentPair(2.0, 2.0), -0.1), DomainError);
}

TEST_CASE("classical trig at p = q = 2") {
  const TrigFunctions tf(ExponentPair(2.0, 2.0));
  CHECK(tf.sin(kPiD / 3) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
  for (double x = -20.0; x <= 20.0; x += 0.173) {
    CHECK(std::abs(tf.sin(x) - std::sin(x)) < 1e-13);
    CHECK(std::abs(tf.cos(x) - std::cos(x)) < 1e-13);
  }
  CHECK(tf.tan(0.4) == doctest::Approx(std::tan(0.4)).epsilon(1e-13));
}

TEST_CASE("trig examples and roundtrip") {
  for (double p : {1.3, 2.0, 4.0}) {
    for (double q : {1.5, 2.0, 4.0}) {
      const ExponentPair e(p, q);
      const TrigFunctions tf(e);
      CHECK(tf.cos(0.0) == 1.0);
      const double Q = tf.quarter_period();
      for (int i = 0; i <= 40; ++i) {
        const double x = Q * i / 40.0;
        CHECK(std::abs(tf.asin(tf.sin(x)) - x) < 1e-9);
      }
    }
  }
  const TrigFunctions t44(ExponentPair(4.0, 4.0));
  const double x = pi_pq(ExponentPair(4.0, 4.0)) / 4;
  CHECK(t44.asin(t44.sin(x)) == doctest::Approx(x).epsilon(1e-10));
}

TEST_CASE("trig identities on a dense grid") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (double q : {1.5, 2.5, 4.0}) {
      const ExponentPair e(p, q);
      const TrigFunctions tf(e);
      const double Q = tf.quarter_period();
      for (int i = 1; i < 200; ++i) {
        const double x = Q * i / 200.0;
        const double s = tf.sin(x);
        const double c = tf.cos(x);
        CHECK(std::pow(c, q) + std::pow(s, q) == doctest::Approx(1.0).epsilon(1e-10));
      }
      // Derivative identities away from the junction at Q.
      for (int i = 1; i < 20; ++i) {
        const double x = 0.95 * Q * i / 20.0;
        const double ds = central([&](double t) { return tf.sin(t); }, x);
        CHECK(std::abs(ds - std::pow(tf.cos(x), q / p)) < 1e-6);
        CHECK(std::pow(ds, p) + std::pow(tf.sin(x), q) == doctest::Approx(1.0).epsilon(1e-8));
        const double dt = central([&](double t) { return tf.tan(t); }, x);
        CHECK(dt == doctest::Approx(std::pow(tf.cos(x), -1.0 - q / e.p_prime())).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("special exponent cases") {
  for (double r : {1.5, 2.5, 4.0}) {
    const TrigFunctions rr(ExponentPair(r, r));
    const TrigFunctions conj(ExponentPair::conjugate_pair(r));
    for (int i = 1; i < 20; ++i) {
      const double x = 0.9 * rr.quarter_period() * i / 20.0;
      const double d = central([&](double t) { return std::pow(rr.cos(t), r - 1.0); }, x);
      CHECK(d == doctest::Approx(-(r - 1.0) * std::pow(rr.sin(x), r - 1.0)).epsilon(1e-6));

      const double y = 0.9 * conj.quarter_period() * i / 20.0;
      CHECK(central([&](double t) { return conj.sin(t); }, y) ==
            doctest::Approx(std::pow(conj.cos(y), r - 1.0)).epsilon(1e-6));
      CHECK(central([&](double t) { return conj.cos(t); }, y) ==
            doctest::Approx(-std::pow(conj.sin(y), r - 1.0)).epsilon(1e-6));
    }
  }
}

TEST_CASE("periodic extension") {
  const ExponentPair e(2.5, 1.8);
  const TrigFunctions tf(e);
  const double P = tf.half_period();
  for (double x = -7.0; x < 7.0; x += 0.31) {
    CHECK(std::abs(tf.sin(x + P) + tf.sin(x)) < 1e-12);
    CHECK(std::abs(tf.cos(x + P) + tf.cos(x)) < 1e-12);
    CHECK(std::abs(tf.sin(P - x) - tf.sin(x)) < 1e-12);
    CHECK(std::abs(tf.sin(-x) + tf.sin(x)) < 1e-15);
    CHECK(std::abs(tf.cos(-x) - tf.cos(x)) < 1e-15);
  }
  CHECK(tf.sin(tf.quarter_period()) == 1.0);
  CHECK(std::abs(tf.sin(1e6) - tf.sin(std::fmod(1e6, 2 * P))) < 1e-9);
  CHECK_THROWS_AS(tf.tan(tf.quarter_period()), PoleError);
}

TEST_CASE("hyperbolic functions") {
  const HyperbolicFunctions h22(ExponentPair(2.0, 2.0));
  CHECK(h22.sinh(0.0) == 0.0);
  CHECK(h22.tanh(0.5493061443340549) == doctest::Approx(0.5).epsilon(1e-14));
  for (double x = -4.0; x <= 4.0; x += 0.25) {
    CHECK(h22.sinh(x) == doctest::Approx(std::sinh(x)).epsilon(1e-13));
    CHECK(h22.cosh(x) == doctest::Approx(std::cosh(x)).epsilon(1e-13));
    CHECK(h22.tanh(x) == doctest::Approx(std::tanh(x)).epsilon(1e-13));
  }
  CHECK(h22.sinh(30.0) == doctest::Approx(std::sinh(30.0)).epsilon(1e-12));

  const HyperbolicFunctions h33(ExponentPair(3.0, 3.0));
  const double s = h33.sinh(1.0);
  CHECK(h33.cosh(1.0) == doctest::Approx(std::cbrt(1.0 + s * s * s)).epsilon(1e-12));
  CHECK(oracle::asinh_pq(3.0, 3.0, s) == doctest::Approx(1.0).epsilon(1e-11));

  for (double p : {1.5, 4.0}) {
    for (double q : {1.3, 3.0}) {
      const HyperbolicFunctions hf(ExponentPair(p, q));
      for (double x : {0.1, 0.7, 1.3}) {
        if (x >= hf.escape_point()) continue;
        const double v = hf.sinh(x);
        CHECK(oracle::asinh_pq(p, q, v) == doctest::Approx(x).epsilon(1e-10));
        CHECK(hf.sinh(-x) == -v);
        CHECK(hf.tanh(x) == doctest::Approx(v / hf.cosh(x)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("sinh_pq escapes at a finite point when q > p") {
  const ExponentPair e(1.5, 3.0);
  const HyperbolicFunctions hf(e);
  const double x_max = hf.escape_point();
  CHECK(std::isfinite(x_max));
  CHECK(x_max == doctest::Approx(oracle::beta(1.0 / 3.0, 1.0 / 1.5 - 1.0 / 3.0) / 3.0).epsilon(1e-10));
  CHECK(hf.sinh(0.999 * x_max) > 10.0);
  CHECK_THROWS_AS(hf.sinh(x_max), DomainError);
  CHECK_FALSE(std::isfinite(HyperbolicFunctions(ExponentPair(3.0, 1.5)).escape_point()));
}

TEST_CASE("artanh_r and asin_r") {
  CHECK(artanh_r(2.0, 0.5) == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
  CHECK(artanh_r(2.0, 0.99) / 0.99 == doctest::Approx(std::atanh(0.99) / 0.99).epsilon(1e-13));
  CHECK(artanh_r(2.0, 0.99) / 0.99 < 16.0 / ((kPiD * kPiD - 8.0) * kPiD));
  for (double r : {1.3, 2.0, 5.0}) {
    CHECK(artanh_r(r, 1e-6) / 1e-6 == doctest::Approx(1.0).epsilon(1e-5));
    double prev = 1.0;
    for (int i = 1; i < 30; ++i) {
      const double x = i / 30.0;
      const double ratio = artanh_r(r, x) / x;
      CHECK(ratio > prev);
      prev = ratio;
    }
  }
  CHECK_THROWS_AS(artanh_r(2.0, 1.0), DomainError);
  CHECK(asin_r(2.0, 0.5) == doctest::Approx(std::asin(0.5)).epsilon(1e-14));
  CHECK(asin_r(2.7, 0.0) == 0.0);
  CHECK(asin_r(3.0, 1.0) == doctest::Approx(pi_pq(ExponentPair(3.0, 3.0)) / 2).epsilon(1e-10));
  CHECK(asin_r(3.0, 0.6) == doctest::Approx(asin_pq(ExponentPair(3.0, 3.0), 0.6)).epsilon(1e-15));
  CHECK_THROWS_AS(asin_r(2.0, 1.01), DomainError);
}
