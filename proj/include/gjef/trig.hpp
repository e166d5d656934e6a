#pragma once

#include "gjef/detail/inverse_integral.hpp"
#include "gjef/types.hpp"

namespace gjef {

/// B(x, y) through log-Gamma.
double beta(double x, double y);

/// Half period pi_pq = (2/q) B(1 - 1/p, 1/q).
double pi_pq(const ExponentPair& e);

enum class TrigKind { Sin, Cos, Tan };
enum class HypKind { Sinh, Cosh, Tanh };

/// Reduction of x modulo four quarter periods Q onto the principal branch
/// [0, Q]. `from_end` is Q - arg, computed without cancellation.
struct QuarterReduction {
  double arg = 0.0;
  double from_end = 0.0;
  int sin_sign = 1;
  int cos_sign = 1;
};

QuarterReduction reduce_quarter(double x, double quarter);

/// sin_pq, cos_pq, tan_pq for one exponent pair. The quarter period is
/// computed once at construction; afterwards the object is immutable and can
/// be shared between threads.
class TrigFunctions {
public:
  explicit TrigFunctions(const ExponentPair& e, const Tolerance& tol = {});

  const ExponentPair& exponents() const noexcept { return e_; }

  /// pi_pq / 2 as the quadrature total (agrees with the Beta form).
  double quarter_period() const noexcept { return inv_.total(); }
  double half_period() const noexcept { return 2.0 * inv_.total(); }

  /// int_0^y (1 - t^q)^{-1/p} dt for y in [0, 1].
  double asin(double y) const;

  double sin(double x) const;
  double cos(double x) const;
  double tan(double x) const;
  double eval(TrigKind kind, double x) const;

  /// sin_pq on [0, pi_pq/2] given the distance to the quarter period; the
  /// result carries its complement 1 - sin_pq.
  detail::UnitPoint sin_principal_from_end(double from_end) const;

private:
  struct SinCos {
    double sin;
    double cos;
  };
  SinCos sin_cos(double x) const;

  ExponentPair e_;
  detail::InverseIntegral inv_;
};

/// sinh_pq, cosh_pq, tanh_pq. The defining integral is inverted through
/// tanh_pq x = u, where x = int_0^u (1 - s^q)^{1/p - 1/q - 1} ds. When q > p
/// that integral converges at u = 1 and the functions blow up at a finite
/// x_max; arguments with |x| >= x_max are domain errors.
class HyperbolicFunctions {
public:
  explicit HyperbolicFunctions(const ExponentPair& e, const Tolerance& tol = {});

  /// Escape point of sinh_pq, +inf when q <= p.
  double escape_point() const noexcept { return inv_.total(); }

  double sinh(double x) const;
  double cosh(double x) const;
  double tanh(double x) const;
  double eval(HypKind kind, double x) const;

private:
  struct Values {
    double sinh;
    double cosh;
    double tanh;
  };
  Values values(double x) const;

  ExponentPair e_;
  detail::InverseIntegral inv_;
};

/// int_0^y (1 - t^q)^{-1/p} dt.
double asin_pq(const ExponentPair& e, double y);
double eval_trig(const ExponentPair& e, TrigKind kind, double x);
double eval_hyp(const ExponentPair& e, HypKind kind, double x);

/// Generalized inverse hyperbolic tangent int_0^x dt / (1 - t^r), x in [0, 1).
double artanh_r(double r, double x);

/// int_0^x (1 - s^r)^{-1/r} ds, x in [0, 1]; equals asin_pq at p = q = r.
double asin_r(double r, double x);

}  // namespace gjef
