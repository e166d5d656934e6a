#pragma once

#include <vector>

#include "gjef/detail/inverse_integral.hpp"
#include "gjef/types.hpp"

namespace gjef {

enum class EllipticKind { Sn, Cn, Dn };

struct EllipticValue {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
  double quarter_period = 0.0;
};

/// Values on the principal branch [0, K] together with the exact complements
/// 1 - sn, 1 - sn^q (= cn^q) and 1 - k^q sn^q (= dn^q).
struct PrincipalValue {
  double sn = 0.0;
  double one_minus_sn = 1.0;
  double cn_q = 1.0;
  double dn_q = 1.0;
};

/// Generalized Jacobian elliptic functions sn_pq, cn_pq, dn_pq for fixed
/// (p, q, k). K_pq(k) is computed at construction; the object is immutable
/// afterwards.
class EllipticFunction {
public:
  explicit EllipticFunction(const EllipticParams& params, const Tolerance& tol = {});

  const EllipticParams& params() const noexcept { return params_; }
  double K() const noexcept { return inv_.total(); }

  /// sn_pq^{-1}(y, k) for y in [0, 1].
  double asn(double y) const;

  /// Principal branch at x in [0, K].
  PrincipalValue principal(double x) const;
  /// Principal branch at x = K - from_end.
  PrincipalValue principal_from_end(double from_end) const;

  EllipticValue eval(double x) const;
  double sn(double x) const { return eval(x).sn; }
  double cn(double x) const { return eval(x).cn; }
  double dn(double x) const { return eval(x).dn; }
  double eval(EllipticKind kind, double x) const;

  /// Closed-form derivatives (sn)' = cn^{q/p} dn^{q/p'} and companions,
  /// valid on the principal branch (0, K).
  double dsn_principal(double x) const;

  /// f_1(x) = sn_pq(2 K x, k) for x in [0, 1/2], evaluated from the nearer
  /// end of the quarter period.
  double f1_half(double x) const;

private:
  PrincipalValue finish(detail::UnitPoint pt) const;

  EllipticParams params_;
  detail::InverseIntegral inv_;
};

/// K_pq(k); domain error for k > 1 - 1e-9.
double complete_K(const EllipticParams& ep);

double asn(const EllipticParams& ep, double y);

double eval_elliptic(const EllipticParams& ep, EllipticKind kind, double x);

/// Left-hand side of (|u'|^{p-2}u')' + ((p-1)q/p)|u|^{q-2}u
/// (1 + (p-1)k^q - p k^q |u|^q)(1 - k^q|u|^q)^{p-2} with u = sn_pq(., k).
/// The outer derivative is a central difference of the closed-form u'.
double ode_residual(const EllipticParams& ep, double x, double h);
double ode_residual(const EllipticFunction& ef, double x, double h);

struct LimitRecord {
  double k = 0.0;
  double sn_gap = 0.0;  // |sn_pq(x,k) - tanh_q x|
  double cn_gap = 0.0;  // |cn_pq(x,k) - 1/cosh_q x|
  double dn_gap = 0.0;  // |dn_pq(x,k) - 1/cosh_q x|
};

/// Gaps to the k -> 1 limits along an increasing sequence of moduli.
std::vector<LimitRecord> limit_k_to_1(const ExponentPair& e, double x, const std::vector<double>& ks);

}  // namespace gjef
