#pragma once

#include <limits>

#include "gjef/types.hpp"

namespace gjef::detail {

/// Density (1 - t^q)^{-a} (1 - k^q t^q)^{-b} on [0, 1). Every defining
/// integral in the library (sin_pq, sinh_pq through tanh_pq, sn_pq, the
/// inverse functions asin_r and artanh_r) is an integral of this family.
struct PowerKernel {
  double q = 2.0;
  double a = 0.5;
  double b = 0.0;
  double k = 0.0;

  /// Evaluates the density at t, with omt = 1 - t supplied exactly.
  double density(double t, double omt) const;

  /// 1 - t^q from the same pair.
  double one_minus_tq(double t, double omt) const;
};

/// A point in [0, 1] carried together with its complement.
struct UnitPoint {
  double y = 0.0;
  double omy = 1.0;
};

/// Integral F(y) = int_0^y density and its inverse. The integral is split at
/// y = 1/2; above it everything is measured from the singular endpoint so
/// that values near y = 1 keep full relative precision in 1 - y.
class InverseIntegral {
public:
  InverseIntegral(PowerKernel kernel, Tolerance tol);

  const PowerKernel& kernel() const noexcept { return kernel_; }
  const Tolerance& tolerance() const noexcept { return tol_; }

  /// F(1), or +inf when the singularity at t = 1 is not integrable.
  double total() const noexcept { return total_; }
  bool finite_total() const noexcept { return total_ < std::numeric_limits<double>::infinity(); }
  double half_value() const noexcept { return lower_half_; }

  /// F(y) for y in [0, 1]; omy = 1 - y must be supplied when y > 1/2.
  double lower(UnitPoint pt) const;
  double lower(double y) const { return lower(UnitPoint{y, 1.0 - y}); }

  /// int_{1-d}^1 density, for d in [0, 1/2]. Requires a finite total.
  double upper(double d) const;

  /// Solves F(y) = x for x in [0, total].
  UnitPoint invert(double x) const;

  /// Solves F(1) - F(y) = remainder (finite total only).
  UnitPoint invert_from_end(double remainder) const;

private:
  // int_{d0}^{d1} density(1 - s) ds with d0 <= d1 <= 1/2.
  double complement_integral(double d0, double d1) const;
  // int_{y0}^{y1} density, y0 <= y1 <= 1/2.
  double head_integral(double y0, double y1) const;

  UnitPoint invert_head(double x) const;
  UnitPoint invert_divergent_tail(double excess) const;

  PowerKernel kernel_;
  Tolerance tol_;
  double lower_half_ = 0.0;
  double upper_half_ = 0.0;
  double total_ = 0.0;
};

}  // namespace gjef::detail
