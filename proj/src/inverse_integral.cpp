#include "gjef/detail/inverse_integral.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gjef/quadrature.hpp"
#include "gjef/roots.hpp"

namespace gjef::detail {

namespace {

constexpr double kLogTiny = -690.0;  // log(1e-300)
const double kLogHalf = std::log(0.5);

}  // namespace

double PowerKernel::one_minus_tq(double t, double omt) const {
  if (t <= 0.5) {
    return 1.0 - std::pow(t, q);
  }
  return -std::expm1(q * std::log1p(-omt));
}

double PowerKernel::density(double t, double omt) const {
  double f = std::pow(one_minus_tq(t, omt), -a);
  if (b != 0.0 && k > 0.0) {
    const double log_t = t <= 0.5 ? std::log(t) : std::log1p(-omt);
    const double om = -std::expm1(q * (std::log(k) + log_t));
    f *= std::pow(om, -b);
  }
  return f;
}

InverseIntegral::InverseIntegral(PowerKernel kernel, Tolerance tol) : kernel_(kernel), tol_(tol) {
  tol_.validate();
  lower_half_ = head_integral(0.0, 0.5);
  if (kernel_.a < 1.0) {
    upper_half_ = complement_integral(0.0, 0.5);
    total_ = lower_half_ + upper_half_;
  } else {
    upper_half_ = std::numeric_limits<double>::infinity();
    total_ = upper_half_;
  }
}

double InverseIntegral::head_integral(double y0, double y1) const {
  const auto f = [this](double t, double, double) { return kernel_.density(t, 1.0 - t); };
  return quad::tanh_sinh(f, y0, y1, tol_).value;
}

double InverseIntegral::complement_integral(double d0, double d1) const {
  const auto f = [this](double s, double, double) { return kernel_.density(1.0 - s, s); };
  return quad::tanh_sinh(f, d0, d1, tol_).value;
}

double InverseIntegral::lower(UnitPoint pt) const {
  if (pt.y <= 0.0) {
    return 0.0;
  }
  if (pt.y <= 0.5) {
    return head_integral(0.0, pt.y);
  }
  if (pt.omy <= 0.0) {
    return total_;
  }
  if (finite_total()) {
    return total_ - complement_integral(0.0, pt.omy);
  }
  return lower_half_ + complement_integral(pt.omy, 0.5);
}

double InverseIntegral::upper(double d) const {
  if (!finite_total()) {
    throw DomainError("upper integral of a divergent kernel");
  }
  if (d <= 0.0) {
    return 0.0;
  }
  if (d <= 0.5) {
    return complement_integral(0.0, d);
  }
  return total_ - head_integral(0.0, 1.0 - d);
}

UnitPoint InverseIntegral::invert(double x) const {
  if (x <= 0.0) {
    return {0.0, 1.0};
  }
  if (x <= lower_half_) {
    return invert_head(x);
  }
  if (finite_total()) {
    if (x >= total_) {
      return {1.0, 0.0};
    }
    return invert_from_end(total_ - x);
  }
  return invert_divergent_tail(x - lower_half_);
}

UnitPoint InverseIntegral::invert_head(double x) const {
  double y_last = 0.0;
  double f_last = 0.0;
  auto fn = [&](double y) {
    const double inc = y >= y_last ? head_integral(y_last, y) : -head_integral(y, y_last);
    f_last += inc;
    y_last = y;
    return std::pair{f_last - x, kernel_.density(y, 1.0 - y)};
  };
  // The integral is convex with slope >= 1, so y <= x and Newton from the
  // right is monotone.
  const double guess = std::min(x, 0.5 * (1.0 - 1e-12));
  const auto res = roots::safeguarded_newton(fn, 0.0, 0.5, guess, {1e-13, true, 60});
  return {res.root, 1.0 - res.root};
}

UnitPoint InverseIntegral::invert_from_end(double remainder) const {
  if (!finite_total()) {
    throw DomainError("inversion from the end of a divergent kernel");
  }
  if (remainder <= 0.0) {
    return {1.0, 0.0};
  }
  if (remainder >= upper_half_) {
    return invert_head(std::max(0.0, total_ - remainder));
  }
  // Near the endpoint the density behaves like c s^{-a}.
  const double a = kernel_.a;
  const double c = std::pow(kernel_.q, -a) *
                   (kernel_.b != 0.0 ? std::pow(-std::expm1(kernel_.q * std::log(kernel_.k)), -kernel_.b)
                                     : 1.0);
  double z0 = std::log((1.0 - a) * remainder / c) / (1.0 - a);
  z0 = std::clamp(z0, kLogTiny + 1.0, kLogHalf - 1e-15);

  double d_last = std::exp(z0);
  double u_last = complement_integral(0.0, d_last);
  auto fn = [&](double z) {
    const double d = std::exp(z);
    const double inc = d >= d_last ? complement_integral(d_last, d) : -complement_integral(d, d_last);
    u_last += inc;
    d_last = d;
    return std::pair{u_last - remainder, kernel_.density(1.0 - d, d) * d};
  };
  const auto res = roots::safeguarded_newton(fn, kLogTiny, kLogHalf, z0, {1e-13, false, 80});
  const double d = std::exp(res.root);
  return {1.0 - d, d};
}

UnitPoint InverseIntegral::invert_divergent_tail(double excess) const {
  const double a = kernel_.a;
  const double q = kernel_.q;
  const double c = std::pow(q, -a) *
                   (kernel_.b != 0.0 ? std::pow(-std::expm1(q * std::log(kernel_.k)), -kernel_.b) : 1.0);
  double z0;
  if (a == 1.0) {
    z0 = kLogHalf - excess / c;
  } else {
    z0 = std::log(std::pow(0.5, 1.0 - a) + (a - 1.0) * excess / c) / (1.0 - a);
  }
  z0 = std::clamp(z0, kLogTiny + 1.0, kLogHalf - 1e-15);

  double d_last = 0.5;
  double s_last = 0.0;
  auto fn = [&](double z) {
    const double d = std::exp(z);
    const double inc = d <= d_last ? complement_integral(d, d_last) : -complement_integral(d_last, d);
    s_last += inc;
    d_last = d;
    return std::pair{excess - s_last, kernel_.density(1.0 - d, d) * d};
  };
  const auto res = roots::safeguarded_newton(fn, kLogTiny, kLogHalf, z0, {1e-13, false, 80});
  const double d = std::exp(res.root);
  return {1.0 - d, d};
}

}  // namespace gjef::detail
