#pragma once

#include <numbers>

namespace dcp {

/// SI constants (CODATA 2018). hbar and eps0 are derived from the exact
/// Planck constant and from mu0 so that mu0 * eps0 * c^2 == 1 to rounding.
struct PhysicalConstants {
  double c;    // m/s
  double hbar; // J s
  double eps0; // F/m
  double mu0;  // N/A^2
};

namespace constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double c = 299792458.0;
inline constexpr double h = 6.62607015e-34;
inline constexpr double hbar = h / (2.0 * pi);
inline constexpr double mu0 = 1.25663706212e-6;
inline constexpr double eps0 = 1.0 / (mu0 * c * c);

} // namespace constants

inline constexpr PhysicalConstants kSI{constants::c, constants::hbar,
                                       constants::eps0, constants::mu0};

} // namespace dcp
