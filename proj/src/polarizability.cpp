#include "drivencp/polarizability.hpp"

#include <cmath>

#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"

namespace dcp {

namespace {

double dipole_squared(const AtomParams& atom, Alignment alignment) {
  const double d2 = atom.d * atom.d;
  return alignment == Alignment::Parallel ? d2 : d2 / 3.0;
}

} // namespace

Polarizability alpha_complex(const AtomParams& atom, double gamma_sum,
                             std::complex<double> omega, Alignment alignment) {
  if (!(gamma_sum >= 0.0))
    throw DomainError("alpha_complex: damping must be >= 0");
  if (gamma_sum == 0.0 && omega.imag() == 0.0 && std::abs(omega.real()) == atom.omega10)
    throw PoleError("alpha_complex: undamped polarizability evaluated on resonance");

  const std::complex<double> half_gamma(0.0, 0.5 * gamma_sum);
  const double d2 = dipole_squared(atom, alignment);
  const auto value = (d2 / (atom.omega10 - omega - half_gamma) +
                      d2 / (atom.omega10 + omega + half_gamma)) /
                     constants::hbar;
  return {value, PolarizabilityForm::ComplexFull};
}

Polarizability alpha_real(const AtomParams& atom, double omega, Alignment alignment) {
  const double w10 = atom.omega10;
  if (std::abs(omega) == w10)
    throw PoleError("alpha_real: evaluated on resonance");
  const double value =
      2.0 * w10 * dipole_squared(atom, alignment) /
      (constants::hbar * (w10 - omega) * (w10 + omega));
  return {value, PolarizabilityForm::RealTwoLevel};
}

Polarizability alpha_isotropic(const AtomParams& atom, double omegaL) {
  const double w10 = atom.omega10;
  if (std::abs(omegaL) == w10)
    throw PoleError("alpha_isotropic: evaluated on resonance");
  // (w10 - wL)(w10 + wL) keeps the small-detuning difference exact.
  const double value = 2.0 * w10 * atom.d * atom.d /
                       (3.0 * constants::hbar * (w10 - omegaL) * (w10 + omegaL));
  return {value, PolarizabilityForm::IsotropicReal};
}

Polarizability alpha_detuning(const AtomParams& atom, double delta) {
  if (delta == 0.0)
    throw PoleError("alpha_detuning: zero detuning");
  return {-atom.d * atom.d / (3.0 * constants::hbar * delta),
          PolarizabilityForm::DetuningApprox};
}

} // namespace dcp
