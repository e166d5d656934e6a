#include "gjef/elliptic.hpp"

#include <cmath>
#include <string>

#include "gjef/trig.hpp"

namespace gjef {

namespace {

detail::PowerKernel elliptic_kernel(const EllipticParams& ep) {
  if (ep.k > kMaxModulus) {
    throw DomainError("modulus k must not exceed 1 - 1e-9, got " + std::to_string(ep.k));
  }
  return {.q = ep.e.q(), .a = 1.0 / ep.e.p(), .b = 1.0 / ep.e.p_prime(), .k = ep.k};
}

}  // namespace

EllipticFunction::EllipticFunction(const EllipticParams& params, const Tolerance& tol)
    : params_(params), inv_(elliptic_kernel(params), tol) {}

double EllipticFunction::asn(double y) const {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw DomainError("asn requires 0 <= y <= 1, got " + std::to_string(y));
  }
  return inv_.lower(y);
}

PrincipalValue EllipticFunction::finish(detail::UnitPoint pt) const {
  PrincipalValue v;
  v.sn = pt.y;
  v.one_minus_sn = pt.omy;
  v.cn_q = inv_.kernel().one_minus_tq(pt.y, pt.omy);
  const double k = params_.k;
  if (k == 0.0 || pt.y == 0.0) {
    v.dn_q = 1.0;
  } else {
    const double log_sn = pt.y <= 0.5 ? std::log(pt.y) : std::log1p(-pt.omy);
    v.dn_q = -std::expm1(params_.e.q() * (std::log(k) + log_sn));
  }
  return v;
}

PrincipalValue EllipticFunction::principal(double x) const {
  const double K = inv_.total();
  if (x <= 0.0) {
    return finish({0.0, 1.0});
  }
  if (x >= K) {
    return finish({1.0, 0.0});
  }
  return finish(x <= inv_.half_value() ? inv_.invert(x) : inv_.invert_from_end(K - x));
}

PrincipalValue EllipticFunction::principal_from_end(double from_end) const {
  const double K = inv_.total();
  if (from_end <= 0.0) {
    return finish({1.0, 0.0});
  }
  if (from_end >= K) {
    return finish({0.0, 1.0});
  }
  const double x = K - from_end;
  return finish(x <= inv_.half_value() ? inv_.invert(x) : inv_.invert_from_end(from_end));
}

EllipticValue EllipticFunction::eval(double x) const {
  if (!std::isfinite(x)) {
    throw DomainError("elliptic functions require a finite argument");
  }
  const double K = inv_.total();
  const QuarterReduction red = reduce_quarter(x, K);
  const PrincipalValue pv = red.arg <= inv_.half_value()
                                ? finish(inv_.invert(red.arg))
                                : finish(inv_.invert_from_end(red.from_end));
  const double q = params_.e.q();
  return {red.sin_sign * pv.sn, red.cos_sign * std::pow(pv.cn_q, 1.0 / q), std::pow(pv.dn_q, 1.0 / q), K};
}

double EllipticFunction::eval(EllipticKind kind, double x) const {
  const EllipticValue v = eval(x);
  switch (kind) {
    case EllipticKind::Sn: return v.sn;
    case EllipticKind::Cn: return v.cn;
    case EllipticKind::Dn: return v.dn;
  }
  return 0.0;
}

double EllipticFunction::dsn_principal(double x) const {
  const PrincipalValue v = principal(x);
  return std::pow(v.cn_q, 1.0 / params_.e.p()) * std::pow(v.dn_q, 1.0 / params_.e.p_prime());
}

double EllipticFunction::f1_half(double x) const {
  const double K = inv_.total();
  if (x <= 0.25) {
    return principal(2.0 * K * x).sn;
  }
  return principal_from_end(K * (1.0 - 2.0 * x)).sn;
}

double complete_K(const EllipticParams& ep) { return EllipticFunction(ep).K(); }

double asn(const EllipticParams& ep, double y) { return EllipticFunction(ep).asn(y); }

double eval_elliptic(const EllipticParams& ep, EllipticKind kind, double x) {
  return EllipticFunction(ep).eval(kind, x);
}

double ode_residual(const EllipticFunction& ef, double x, double h) {
  const double K = ef.K();
  if (!(h > 0.0)) {
    throw DomainError("ode_residual requires a positive step");
  }
  if (!(x - h > 0.0 && x + h < K)) {
    throw DomainError("ode_residual requires x +- h inside (0, K)");
  }
  const double p = ef.params().e.p();
  const double q = ef.params().e.q();
  const double kq = std::pow(ef.params().k, q);
  auto flux = [&](double s) { return std::pow(ef.dsn_principal(s), p - 1.0); };
  const double dflux = (flux(x + h) - flux(x - h)) / (2.0 * h);
  const double u = ef.principal(x).sn;
  const double uq = std::pow(u, q);
  const double source = (p - 1.0) * q / p * std::pow(u, q - 1.0) * (1.0 + (p - 1.0) * kq - p * kq * uq) *
                        std::pow(1.0 - kq * uq, p - 2.0);
  return dflux + source;
}

double ode_residual(const EllipticParams& ep, double x, double h) {
  return ode_residual(EllipticFunction(ep), x, h);
}

std::vector<LimitRecord> limit_k_to_1(const ExponentPair& e, double x, const std::vector<double>& ks) {
  const HyperbolicFunctions hyp(ExponentPair(e.q(), e.q()));
  const double t = hyp.tanh(x);
  const double sech = 1.0 / hyp.cosh(x);
  std::vector<LimitRecord> out;
  out.reserve(ks.size());
  for (double k : ks) {
    const EllipticValue v = EllipticFunction(EllipticParams(e, k)).eval(x);
    out.push_back({k, std::fabs(v.sn - t), std::fabs(v.cn - sech), std::fabs(v.dn - sech)});
  }
  return out;
}

}  // namespace gjef
