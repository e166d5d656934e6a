#include "gjef/basis_checker.hpp"

#include <cmath>
#include <string>

#include "gjef/constants.hpp"
#include "gjef/elliptic.hpp"
#include "gjef/roots.hpp"
#include "gjef/trig.hpp"

namespace gjef {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kThresholdTol = 1e-6;

// artanh_r(y)/y with its limit 1 at y = 0.
double artanh_ratio(double r, double y) { return y > 0.0 ? artanh_r(r, y) / y : 1.0; }

CheckReport make_report(Criterion c, const EllipticParams& ep, double lhs, double rhs, bool satisfied) {
  CheckReport rep;
  rep.criterion = c;
  rep.params = ep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  rep.satisfied = satisfied;
  rep.verdict = satisfied ? Verdict::Satisfied : Verdict::Violated;
  return rep;
}

// Shared by the main theorem and its r = q corollary.
CheckReport tanh_criterion(Criterion c, const EllipticParams& ep, double r) {
  const double q = ep.e.q();
  const double b = beta(1.0 / r, 1.0 / r);
  const double alpha_lhs = b / q;
  const bool alpha_ok = alpha_lhs < kBasisConstant;

  const double y = ep.k > 0.0 ? std::pow(ep.k, q / r) : 0.0;
  const double k_lhs = artanh_ratio(r, y);
  const double k_rhs = 8.0 * q / (kPiSqMinus8 * b);
  const bool k_ok = ep.k == 0.0 || k_lhs <= k_rhs + kSlack;

  const double alpha_margin = kBasisConstant - alpha_lhs;
  const double k_margin = k_rhs - k_lhs;
  // Report the binding inequality.
  CheckReport rep = alpha_margin < k_margin || ep.k == 0.0
                        ? make_report(c, ep, alpha_lhs, kBasisConstant, alpha_ok && k_ok)
                        : make_report(c, ep, k_lhs, k_rhs, alpha_ok && k_ok);
  rep.details = {{"r", r},
                 {"alpha_lhs", alpha_lhs},
                 {"alpha_rhs", kBasisConstant},
                 {"alpha_margin", alpha_margin},
                 {"k_lhs", k_lhs},
                 {"k_rhs", k_rhs},
                 {"k_margin", k_margin}};
  return rep;
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::ThmMain: return "thm-main";
    case Criterion::CorMain: return "cor-main";
    case Criterion::Cor13: return "cor-13";
    case Criterion::ThmGeneral: return "thm-general";
    case Criterion::NeumannDirect: return "neumann";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string_view to_string(KStar::Status s) {
  switch (s) {
    case KStar::Status::Threshold: return "threshold";
    case KStar::Status::NeverViolated: return "never-violated";
    case KStar::Status::NoThreshold: return "no-threshold";
    case KStar::Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

Criterion parse_criterion(std::string_view name) {
  for (auto c : {Criterion::ThmMain, Criterion::CorMain, Criterion::Cor13, Criterion::ThmGeneral,
                 Criterion::NeumannDirect}) {
    if (to_string(c) == name) {
      return c;
    }
  }
  throw DomainError("unknown criterion '" + std::string(name) + "'");
}

double CheckReport::detail(std::string_view name) const {
  for (const auto& [key, value] : details) {
    if (key == name) {
      return value;
    }
  }
  throw DomainError("report has no detail '" + std::string(name) + "'");
}

CheckReport check_thm_main(const EllipticParams& ep) {
  return tanh_criterion(Criterion::ThmMain, ep, ep.e.r());
}

CheckReport check_cor_main(const EllipticParams& ep) {
  if (ep.e.p_prime() > ep.e.q()) {
    CheckReport rep = make_report(Criterion::CorMain, ep, 0.0, 0.0, false);
    rep.verdict = Verdict::Inapplicable;
    rep.margin = std::nan("");
    rep.details = {{"p_prime", ep.e.p_prime()}, {"q", ep.e.q()}};
    return rep;
  }
  return tanh_criterion(Criterion::CorMain, ep, ep.e.q());
}

CheckReport check_cor_13(const EllipticParams& ep) {
  const double r = ep.e.r();
  const double q = ep.e.q();
  const double alpha_lhs = r / q;
  const double alpha_rhs = 4.0 / kPiSqMinus8;
  const bool alpha_ok = alpha_lhs < alpha_rhs;

  // Threshold exists only when the base of the outer power is positive.
  const double base = kPiSqMinus8 * r / (4.0 * q);
  const double inner = 1.0 - std::pow(base, r);
  const double threshold = inner > 0.0 ? std::pow(inner, 1.0 / q) : 0.0;
  const bool k_ok = ep.k < threshold;

  const double alpha_margin = alpha_rhs - alpha_lhs;
  const double k_margin = threshold - ep.k;
  CheckReport rep = alpha_margin < k_margin
                        ? make_report(Criterion::Cor13, ep, alpha_lhs, alpha_rhs, alpha_ok && k_ok)
                        : make_report(Criterion::Cor13, ep, ep.k, threshold, alpha_ok && k_ok);
  rep.details = {{"r", r},
                 {"alpha_lhs", alpha_lhs},
                 {"alpha_rhs", alpha_rhs},
                 {"alpha_margin", alpha_margin},
                 {"k_threshold", threshold},
                 {"k_margin", k_margin}};
  return rep;
}

CheckReport check_thm_general(const EllipticParams& ep) {
  const double K = complete_K(ep);
  CheckReport rep = make_report(Criterion::ThmGeneral, ep, K, kBasisConstant, K < kBasisConstant);
  rep.details = {{"K", K}};
  return rep;
}

CheckReport check_neumann(const SineCoefficients& coeffs) {
  const NeumannMargin nm = neumann_margin(coeffs);
  const double lhs = nm.sum_small + nm.tail_bound;
  const double rhs = std::abs(nm.tau1);
  CheckReport rep = make_report(Criterion::NeumannDirect, coeffs.params, lhs, rhs, lhs < rhs);
  rep.M = nm.M;
  rep.details = {{"tau1", nm.tau1},
                 {"sum_small", nm.sum_small},
                 {"tail_bound", nm.tail_bound},
                 {"quad_err", nm.quad_err},
                 {"K", coeffs.K}};
  return rep;
}

CheckReport check_neumann(const EllipticParams& ep, int M) {
  if (M < 3 || M % 2 == 0) {
    throw DomainError("Neumann cutoff must be odd and >= 3, got " + std::to_string(M));
  }
  return check_neumann(sine_coefficients(ep, M));
}

CheckReport check(Criterion c, const EllipticParams& ep, int M) {
  switch (c) {
    case Criterion::ThmMain: return check_thm_main(ep);
    case Criterion::CorMain: return check_cor_main(ep);
    case Criterion::Cor13: return check_cor_13(ep);
    case Criterion::ThmGeneral: return check_thm_general(ep);
    case Criterion::NeumannDirect: return check_neumann(ep, M);
  }
  throw DomainError("unknown criterion");
}

KStar k_star(const ExponentPair& e, Criterion c, int M) {
  auto holds = [&](double k) { return check(c, EllipticParams(e, k), M).satisfied; };
  const CheckReport at_zero = check(c, EllipticParams(e, 0.0), M);
  if (at_zero.verdict == Verdict::Inapplicable) {
    return {KStar::Status::Inapplicable, 0.0};
  }
  if (!at_zero.satisfied) {
    return {KStar::Status::NoThreshold, 0.0};
  }
  if (holds(kMaxModulus)) {
    return {KStar::Status::NeverViolated, 1.0};
  }
  return {KStar::Status::Threshold, roots::bisect_boundary(holds, 0.0, kMaxModulus, kThresholdTol)};
}

}  // namespace gjef
