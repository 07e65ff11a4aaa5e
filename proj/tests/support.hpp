#pragma once

#include <algorithm>
#include <cmath>

#include "rotorqm/constants.hpp"
#include "rotorqm/types.hpp"

namespace rotorqm::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double ulp(double x) { return std::nextafter(std::abs(x), HUGE_VAL) - std::abs(x); }

/// Electron on the 10 um frame rotating at -1e7 rad/s (rim speed -100 m/s).
inline RotatingFrame reference_frame() { return RotatingFrame{-1e7, 1e-5}; }

inline constexpr double kHbar = kConstants.hbar;
inline constexpr double kMe = kConstants.m_electron;
inline constexpr double kC = kConstants.c;

}  // namespace rotorqm::testing
