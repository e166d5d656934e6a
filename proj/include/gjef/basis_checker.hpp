#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gjef/fourier.hpp"
#include "gjef/types.hpp"

namespace gjef {

enum class Criterion { ThmMain, CorMain, Cor13, ThmGeneral, NeumannDirect };
enum class Verdict { Satisfied, Violated, Inapplicable };

std::string_view to_string(Criterion c);
std::string_view to_string(Verdict v);
/// Accepts the CLI spellings thm-main, cor-main, cor-13, thm-general, neumann.
Criterion parse_criterion(std::string_view name);

struct CheckReport {
  Criterion criterion = Criterion::ThmGeneral;
  EllipticParams params{2.0, 2.0, 0.0};
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs of the binding inequality
  bool satisfied = false;
  Verdict verdict = Verdict::Violated;
  int M = 0;  // cutoff, only for NeumannDirect
  std::vector<std::pair<std::string, double>> details;

  double detail(std::string_view name) const;
};

/// (1/q) B(1/r,1/r) < 8/(pi^2-8), and for k > 0
/// artanh_r(k^{q/r}) / k^{q/r} <= 8q / ((pi^2-8) B(1/r,1/r)).
CheckReport check_thm_main(const EllipticParams& ep);

/// The r = q form of the previous test; inapplicable when p' > q.
CheckReport check_cor_main(const EllipticParams& ep);

/// r/q < 4/(pi^2-8) and k < [1 - ((pi^2-8) r / (4q))^r]^{1/q}.
CheckReport check_cor_13(const EllipticParams& ep);

/// K_pq(k) < 8/(pi^2-8).
CheckReport check_thm_general(const EllipticParams& ep);

/// sum_{m>=3} |tau_m| < |tau_1| with the tail beyond M bounded in closed form.
CheckReport check_neumann(const EllipticParams& ep, int M = kDefaultCutoff);
CheckReport check_neumann(const SineCoefficients& coeffs);

CheckReport check(Criterion c, const EllipticParams& ep, int M = kDefaultCutoff);

struct KStar {
  enum class Status { Threshold, NeverViolated, NoThreshold, Inapplicable };
  Status status = Status::Threshold;
  /// Boundary modulus for Threshold, 1 for NeverViolated, 0 otherwise.
  double k = 0.0;
};

std::string_view to_string(KStar::Status s);

/// Largest k at which the criterion still holds, by bisection on
/// [0, 1 - 1e-9] to 1e-6.
KStar k_star(const ExponentPair& e, Criterion c, int M = kDefaultCutoff);

}  // namespace gjef
