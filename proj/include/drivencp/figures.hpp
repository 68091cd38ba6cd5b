#pragma once

#include <cstddef>
#include <vector>

#include "drivencp/potentials.hpp"
#include "drivencp/types.hpp"

namespace dcp {

struct FigureParams {
  double d = 3.71e-29;        // C m
  double omega10 = 3.24e15;   // rad/s
  double intensity = 5.0e4;   // W/m^2 (5 W/cm^2)
  double delta = 2.0e8 * 3.14159265358979323846; // 2 pi x 100 MHz
  double theta = 1.57079632679489661923;         // pi/2
  Alignment alignment = Alignment::Parallel;

  double z_min = 3e-8;
  double z_max = 3e-6;
  std::size_t z_count = 400;

  std::vector<double> time_distances{1e-7, 2e-7};
  double t_max = 0.0; // 0 -> two population periods 4 pi / R
  std::size_t t_count = 400;

  BlochMode bloch_mode = BlochMode::ResonantPrinted;
  bool parallel = true;
};

/// The base driven system of a parameter set (detuning multiplier 1).
DrivenSystem figure_system(const FigureParams& p);

/// Curves of figures 1-5:
///  1: perturbative full vs z^-3-only (image dipole)
///  2: perturbative at detunings x5, x2, x1 and the undriven excited atom
///  3: Bloch (averaged) at detunings x0.1, x10, x1 and the undriven atom
///  4: Bloch vs time at each of time_distances
///  5: perturbative, Bloch (averaged), undriven
/// Throws std::invalid_argument for other ids.
std::vector<PotentialCurve> figure_curves(int figure_id, const FigureParams& p);

} // namespace dcp
