#pragma once

#include <complex>
#include <vector>

#include "drivencp/types.hpp"

namespace dcp {

/// Lab-frame expectation values of the two-level flip operators.
struct BlochState {
  double t = 0.0;
  double p0 = 1.0;               // <A00>
  double p1 = 0.0;               // <A11>
  std::complex<double> a10 = 0;  // <A10>
  std::complex<double> a01 = 0;  // <A01>
};

/// Undamped RWA solution for an atom starting in the ground state.
BlochState bloch_analytic(const DrivenSystem& sys, double t);

/// Fixed-step RK4 integration of the four rotating-frame equations
///   d/dt a10~ = -i D a10~ + (i/2) W (p1 - p0)
///   d/dt a01~ =  i D a01~ - (i/2) W (p1 - p0)
///   d/dt p1   =  (i/2) W (a10~ - a01~)
///   d/dt p0   = -(i/2) W (a10~ - a01~)
/// from the ground state, rotated back to the lab frame. The step used is
/// t_end / ceil(t_end / dt); dt must satisfy dt <= 0.01 / omega_dressed.
BlochState bloch_ode_oracle(const DrivenSystem& sys, double t_end, double dt);

/// As above but returns every step including t = 0.
std::vector<BlochState> bloch_ode_trajectory(const DrivenSystem& sys,
                                             double t_end, double dt);

/// <d(t)> along d [C m]:
///   d [ -2 W D / R^2 sin^2(R t/2) cos(wL t) + W/R sin(R t) sin(wL t) ]
/// where R is the dressed frequency.
double dipole_bloch(const DrivenSystem& sys, double t);

/// tau-independent amplitudes of <A10(t) A01(tau)> and <A01(t) A10(tau)>.
/// They coincide with p1(t) and p0(t).
struct CorrelationAmplitudes {
  double excited_ground; // c_eg
  double ground_excited; // c_ge
};

CorrelationAmplitudes correlation_functions(const DrivenSystem& sys, double t);

// Time averages of the populations (sin^2 -> 1/2).
double averaged_excited_population(const DrivenSystem& sys);

} // namespace dcp
