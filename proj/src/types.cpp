#include "gjef/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gjef {

ExponentPair::ExponentPair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("exponent p must satisfy 1 < p < inf, got " + std::to_string(p));
  }
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw DomainError("exponent q must satisfy 1 < q < inf, got " + std::to_string(q));
  }
  p_prime_ = p / (p - 1.0);
  r_ = std::max(p_prime_, q);
}

ExponentPair ExponentPair::conjugate_pair(double r) {
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw DomainError("exponent r must satisfy 1 < r < inf, got " + std::to_string(r));
  }
  return ExponentPair(r / (r - 1.0), r);
}

EllipticParams::EllipticParams(ExponentPair e_, double k_) : e(e_), k(k_) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("modulus k must satisfy 0 <= k < 1, got " + std::to_string(k));
  }
}

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
  if (max_subdivisions < 1) {
    throw DomainError("max_subdivisions must be at least 1");
  }
}

std::string describe(const ExponentPair& e) {
  std::ostringstream os;
  os.precision(17);
  os << "p=" << e.p() << " q=" << e.q();
  return os.str();
}

std::string describe(const EllipticParams& ep) {
  std::ostringstream os;
  os.precision(17);
  os << describe(ep.e) << " k=" << ep.k;
  return os.str();
}

}  // namespace gjef
