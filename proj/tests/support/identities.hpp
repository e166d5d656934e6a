#pragma once

// Closed-form derivatives of the generalized Jacobian functions on the
// principal branch, shared by the unit and acceptance tests.

#include <cmath>

#include "gjef/elliptic.hpp"
#include "gjef/quadrature.hpp"

namespace ident {

struct Derivs {
  double dsn;
  double dcn;
  double ddn;
  double d2sn;  // derivative of the closed form of dsn
};

inline Derivs derivatives(const gjef::EllipticParams& ep, const gjef::PrincipalValue& v) {
  const double p = ep.e.p();
  const double q = ep.e.q();
  const double pp = ep.e.p_prime();
  const double kq = std::pow(ep.k, q);
  const double sn = v.sn;
  const double cn = std::pow(v.cn_q, 1.0 / q);
  const double dn = std::pow(v.dn_q, 1.0 / q);
  Derivs d{};
  d.dsn = std::pow(cn, q / p) * std::pow(dn, q / pp);
  d.dcn = -std::pow(sn, q - 1.0) * std::pow(cn, 1.0 - q / pp) * std::pow(dn, q / pp);
  d.ddn = -kq * std::pow(sn, q - 1.0) * std::pow(cn, q / p) * std::pow(dn, 1.0 - q / p);
  // d/dx cn^{q/p} dn^{q/p'} with the products of powers combined so that
  // cn -> 0 stays finite where the exponent allows it.
  const double term_cn = -(q / p) * std::pow(sn, q - 1.0) * std::pow(cn, q / p - q / pp) * std::pow(dn, 2.0 * q / pp);
  const double term_dn =
      -(q / pp) * kq * std::pow(sn, q - 1.0) * std::pow(cn, 2.0 * q / p) * std::pow(dn, q / pp - q / p);
  d.d2sn = term_cn + term_dn;
  return d;
}

/// int_0^K |sn''| dx by double-exponential quadrature in x.
inline double total_curvature(const gjef::EllipticFunction& ef) {
  const auto f = [&](double x, double, double from_end) {
    const auto v = x < 0.5 * ef.K() ? ef.principal(x) : ef.principal_from_end(from_end);
    return std::abs(derivatives(ef.params(), v).d2sn);
  };
  gjef::Tolerance tol;
  tol.abs_tol = 1e-10;
  tol.rel_tol = 1e-10;
  return gjef::quad::tanh_sinh(f, 0.0, ef.K(), tol).value;
}

}  // namespace ident
