#pragma once

#include <stdexcept>
#include <string>

namespace gjef {

/// Argument outside the domain of a function or type invariant.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// tan_pq evaluated at (k + 1/2) pi_pq.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An iteration was refused because its convergence is not guaranteed.
class RefusedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exponents (p, q), both in (1, inf), with the conjugate p' = p/(p-1) and
/// r = max{p', q}.
class ExponentPair {
public:
  ExponentPair(double p, double q);

  /// The pair (r', r).
  static ExponentPair conjugate_pair(double r);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double p_prime() const noexcept { return p_prime_; }
  double r() const noexcept { return r_; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

private:
  double p_;
  double q_;
  double p_prime_;
  double r_;
};

/// Largest modulus accepted by the complete integral; beyond it the
/// quadrature is not trusted.
inline constexpr double kMaxModulus = 1.0 - 1e-9;

struct EllipticParams {
  EllipticParams(ExponentPair e, double k);
  EllipticParams(double p, double q, double k) : EllipticParams(ExponentPair(p, q), k) {}

  ExponentPair e;
  double k;
};

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  int max_subdivisions = 20;

  void validate() const;
};

std::string describe(const ExponentPair& e);
std::string describe(const EllipticParams& ep);

}  // namespace gjef
