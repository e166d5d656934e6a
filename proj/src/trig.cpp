#include "gjef/trig.hpp"

#include <cmath>
#include <string>

namespace gjef {

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("beta requires positive finite arguments");
  }
  if (x + y < 170.0) {
    return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
  }
  // lgamma touches signgam; only reached for large arguments.
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

double pi_pq(const ExponentPair& e) {
  return 2.0 / e.q() * beta(1.0 - 1.0 / e.p(), 1.0 / e.q());
}

QuarterReduction reduce_quarter(double x, double quarter) {
  const double period = 4.0 * quarter;
  double r = std::fmod(x, period);
  if (r < -quarter) {
    r += period;
  } else if (r >= 3.0 * quarter) {
    r -= period;
  }
  QuarterReduction out;
  if (r <= quarter) {
    out.arg = std::fabs(r);
    out.sin_sign = r < 0.0 ? -1 : 1;
  } else {
    const double s = 2.0 * quarter - r;
    out.arg = std::fabs(s);
    out.sin_sign = s < 0.0 ? -1 : 1;
    out.cos_sign = -1;
  }
  out.from_end = quarter - out.arg;
  return out;
}

namespace {

detail::PowerKernel trig_kernel(const ExponentPair& e) {
  return {.q = e.q(), .a = 1.0 / e.p(), .b = 0.0, .k = 0.0};
}

detail::PowerKernel hyp_kernel(const ExponentPair& e) {
  return {.q = e.q(), .a = 1.0 + 1.0 / e.q() - 1.0 / e.p(), .b = 0.0, .k = 0.0};
}

}  // namespace

TrigFunctions::TrigFunctions(const ExponentPair& e, const Tolerance& tol)
    : e_(e), inv_(trig_kernel(e), tol) {}

double TrigFunctions::asin(double y) const {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw DomainError("asin_pq requires 0 <= y <= 1, got " + std::to_string(y));
  }
  return inv_.lower(y);
}

detail::UnitPoint TrigFunctions::sin_principal_from_end(double from_end) const {
  const double arg = inv_.total() - from_end;
  return arg <= inv_.half_value() ? inv_.invert(arg) : inv_.invert_from_end(from_end);
}

TrigFunctions::SinCos TrigFunctions::sin_cos(double x) const {
  const QuarterReduction red = reduce_quarter(x, quarter_period());
  const detail::UnitPoint pt =
      red.arg <= inv_.half_value() ? inv_.invert(red.arg) : inv_.invert_from_end(red.from_end);
  const double c = std::pow(inv_.kernel().one_minus_tq(pt.y, pt.omy), 1.0 / e_.q());
  return {red.sin_sign * pt.y, red.cos_sign * c};
}

double TrigFunctions::sin(double x) const { return sin_cos(x).sin; }

double TrigFunctions::cos(double x) const { return sin_cos(x).cos; }

double TrigFunctions::tan(double x) const {
  const SinCos sc = sin_cos(x);
  if (std::fabs(sc.cos) < 1e-12) {
    throw PoleError("tan_pq has a pole at x = " + std::to_string(x));
  }
  return sc.sin / sc.cos;
}

double TrigFunctions::eval(TrigKind kind, double x) const {
  switch (kind) {
    case TrigKind::Sin: return sin(x);
    case TrigKind::Cos: return cos(x);
    case TrigKind::Tan: return tan(x);
  }
  return 0.0;
}

HyperbolicFunctions::HyperbolicFunctions(const ExponentPair& e, const Tolerance& tol)
    : e_(e), inv_(hyp_kernel(e), tol) {}

HyperbolicFunctions::Values HyperbolicFunctions::values(double x) const {
  if (!std::isfinite(x)) {
    throw DomainError("hyperbolic functions require a finite argument");
  }
  const double ax = std::fabs(x);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  if (inv_.finite_total() && ax >= inv_.total()) {
    throw DomainError("sinh_pq escapes to infinity at |x| = " + std::to_string(inv_.total()) +
                      " (q > p)");
  }
  detail::UnitPoint pt;
  if (ax <= inv_.half_value() || !inv_.finite_total()) {
    pt = inv_.invert(ax);
  } else {
    pt = inv_.invert_from_end(inv_.total() - ax);
  }
  const double cosh = std::pow(inv_.kernel().one_minus_tq(pt.y, pt.omy), -1.0 / e_.q());
  return {sign * pt.y * cosh, cosh, sign * pt.y};
}

double HyperbolicFunctions::sinh(double x) const { return values(x).sinh; }
double HyperbolicFunctions::cosh(double x) const { return values(x).cosh; }
double HyperbolicFunctions::tanh(double x) const { return values(x).tanh; }

double HyperbolicFunctions::eval(HypKind kind, double x) const {
  const Values v = values(x);
  switch (kind) {
    case HypKind::Sinh: return v.sinh;
    case HypKind::Cosh: return v.cosh;
    case HypKind::Tanh: return v.tanh;
  }
  return 0.0;
}

double asin_pq(const ExponentPair& e, double y) { return TrigFunctions(e).asin(y); }

double eval_trig(const ExponentPair& e, TrigKind kind, double x) {
  return TrigFunctions(e).eval(kind, x);
}

double eval_hyp(const ExponentPair& e, HypKind kind, double x) {
  return HyperbolicFunctions(e).eval(kind, x);
}

double artanh_r(double r, double x) {
  if (!(r > 1.0)) {
    throw DomainError("artanh_r requires r > 1");
  }
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("artanh_r requires 0 <= x < 1 (diverges at 1), got " + std::to_string(x));
  }
  const detail::InverseIntegral inv({.q = r, .a = 1.0, .b = 0.0, .k = 0.0}, Tolerance{});
  return inv.lower(detail::UnitPoint{x, 1.0 - x});
}

double asin_r(double r, double x) {
  if (!(r > 1.0)) {
    throw DomainError("asin_r requires r > 1");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("asin_r requires 0 <= x <= 1, got " + std::to_string(x));
  }
  const detail::InverseIntegral inv({.q = r, .a = 1.0 / r, .b = 0.0, .k = 0.0}, Tolerance{});
  return inv.lower(x);
}

}  // namespace gjef
