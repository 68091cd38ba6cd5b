#pragma once

#include <complex>

#include "drivencp/types.hpp"

namespace dcp {

enum class PolarizabilityForm { ComplexFull, RealTwoLevel, IsotropicReal, DetuningApprox };

/// Scalar prefactor of the unit tensor [C^2 m^2 / J].
struct Polarizability {
  std::complex<double> value;
  PolarizabilityForm form;

  double real() const { return value.real(); }
};

// (1/hbar) [ d^2/(w10 - w - i g/2) + d^2/(w10 + w + i g/2) ], with d^2
// replaced by d^2/3 for Isotropic. gamma_sum = Gamma_0 + Gamma_1.
Polarizability alpha_complex(const AtomParams& atom, double gamma_sum,
                             std::complex<double> omega,
                             Alignment alignment = Alignment::Parallel);

// Undamped real form 2 w10 d^2 / (hbar (w10^2 - w^2)).
Polarizability alpha_real(const AtomParams& atom, double omega,
                          Alignment alignment = Alignment::Parallel);

// 2 w10 d^2 / (3 hbar (w10^2 - wL^2)).
Polarizability alpha_isotropic(const AtomParams& atom, double omegaL);

// Small-detuning limit -d^2 / (3 hbar delta).
Polarizability alpha_detuning(const AtomParams& atom, double delta);

} // namespace dcp
