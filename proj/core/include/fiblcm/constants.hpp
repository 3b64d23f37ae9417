#pragma once

#include <cmath>
#include <numbers>

namespace fiblcm {

inline const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kLogAlpha = std::log(kGoldenRatio);

// Quadratic growth rate of log lcm(F_1, ..., F_n): the n^2 coefficient is
// 3 log(alpha) / pi^2 ~ 0.1462709.  Sign-shifted variants scale this by a
// pattern-dependent rational factor.
inline const double kLcmSlope =
    3.0 * kLogAlpha / (std::numbers::pi * std::numbers::pi);

}  // namespace fiblcm
