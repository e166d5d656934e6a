#pragma once

#include <numbers>

namespace gjef {

inline constexpr double kPi = std::numbers::pi;

/// pi^2 - 8. Every basis criterion is phrased in terms of it.
inline constexpr double kPiSqMinus8 = kPi * kPi - 8.0;

/// 8 / (pi^2 - 8): the bound on K_pq(k) that makes T invertible.
inline constexpr double kBasisConstant = 8.0 / kPiSqMinus8;

/// Lower bound 8 / pi^2 for the first sine coefficient.
inline constexpr double kTau1LowerBound = 8.0 / (kPi * kPi);

}  // namespace gjef
