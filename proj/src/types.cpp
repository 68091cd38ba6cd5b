#include "drivencp/types.hpp"

#include <cmath>
#include <string>

#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"

namespace dcp {

std::string_view to_string(Alignment a) {
  return a == Alignment::Parallel ? "parallel" : "isotropic";
}

Alignment parse_alignment(std::string_view s) {
  if (s == "parallel") return Alignment::Parallel;
  if (s == "isotropic") return Alignment::Isotropic;
  throw std::invalid_argument("unknown alignment '" + std::string(s) + "'");
}

AtomParams::AtomParams(double d_, double omega10_) : d(d_), omega10(omega10_) {
  if (!(std::isfinite(d) && d > 0.0))
    throw DomainError("AtomParams: dipole moment must be positive and finite");
  if (!(std::isfinite(omega10) && omega10 > 0.0))
    throw DomainError("AtomParams: transition frequency must be positive and finite");
}

LaserParams::LaserParams(double omegaL_, double e0_, double theta_)
    : omegaL(omegaL_), e0(e0_), theta(theta_) {
  if (!(std::isfinite(omegaL) && omegaL > 0.0))
    throw DomainError("LaserParams: laser frequency must be positive and finite");
  if (!(std::isfinite(e0) && e0 >= 0.0))
    throw DomainError("LaserParams: field amplitude must be >= 0");
  if (!(theta >= 0.0 && theta <= constants::pi / 2 + 1e-15))
    throw DomainError("LaserParams: theta must lie in [0, pi/2]");
}

double intensity_to_field(double intensity) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity))
    throw DomainError("intensity must be a finite value >= 0");
  return std::sqrt(2.0 * intensity / (constants::eps0 * constants::c));
}

double field_to_intensity(double e0) {
  return 0.5 * constants::eps0 * constants::c * e0 * e0;
}

double effective_dipole(double d, Alignment alignment) {
  return alignment == Alignment::Parallel ? d : d / std::sqrt(3.0);
}

DrivenSystem build_driven_system(const AtomParams& atom, const LaserParams& laser,
                                 Alignment alignment) {
  const double rabi = laser.e0 * effective_dipole(atom.d, alignment) / constants::hbar;
  const double delta = laser.omegaL - atom.omega10;
  return DrivenSystem{atom, laser, alignment, rabi, delta, std::hypot(delta, rabi)};
}

DrivenSystem driven_system_from_frequencies(const AtomParams& atom, double omega_rabi,
                                            double delta, double theta,
                                            Alignment alignment) {
  if (!(omega_rabi >= 0.0))
    throw DomainError("Rabi frequency must be >= 0");
  const double e0 = omega_rabi * constants::hbar / effective_dipole(atom.d, alignment);
  return build_driven_system(atom, LaserParams(atom.omega10 + delta, e0, theta),
                             alignment);
}

DrivenSystem with_detuning(const DrivenSystem& sys, double delta) {
  return build_driven_system(
      sys.atom, LaserParams(sys.atom.omega10 + delta, sys.laser.e0, sys.laser.theta),
      sys.alignment);
}

} // namespace dcp
