#pragma once

#include <string_view>

namespace dcp {

/// How the drive field projects onto the transition dipole.
/// Parallel: E and d aligned, |E.d| = E0 d.
/// Isotropic: orientation-averaged, |E.d| = E0 d / sqrt(3).
enum class Alignment { Parallel, Isotropic };

std::string_view to_string(Alignment a);
Alignment parse_alignment(std::string_view s);

/// Two-level atom. d: transition dipole [C m]; omega10: shifted
/// transition frequency [rad/s].
struct AtomParams {
  double d;
  double omega10;

  AtomParams(double d, double omega10);
};

/// Monochromatic drive E(t) = E0 (sin theta, 0, cos theta) cos(omegaL t).
struct LaserParams {
  double omegaL;
  double e0;
  double theta;

  LaserParams(double omegaL, double e0, double theta);
};

/// Atom plus drive with the derived Rabi, detuning and dressed frequencies.
/// delta is signed (omegaL - omega10).
struct DrivenSystem {
  AtomParams atom;
  LaserParams laser;
  Alignment alignment;
  double omega_rabi;
  double delta;
  double omega_dressed;
};

// E0 = sqrt(2 I / (eps0 c)); intensity in W/m^2.
double intensity_to_field(double intensity);
double field_to_intensity(double e0);

// Dipole projection onto the field for the given convention.
double effective_dipole(double d, Alignment alignment);

DrivenSystem build_driven_system(const AtomParams& atom,
                                 const LaserParams& laser,
                                 Alignment alignment);

/// Inverse construction: pick E0 and omegaL so that the resulting system has
/// the requested Rabi frequency (>= 0) and detuning.
DrivenSystem driven_system_from_frequencies(const AtomParams& atom,
                                            double omega_rabi, double delta,
                                            double theta, Alignment alignment);

/// Same drive field, laser frequency moved to omega10 + delta.
DrivenSystem with_detuning(const DrivenSystem& sys, double delta);

} // namespace dcp
