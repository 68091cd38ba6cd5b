#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "drivencp/mirror_greens.hpp"
#include "drivencp/types.hpp"

namespace dcp {

/// Brute-force reference for integrate_nonresonant: log-grid trapezoid over
/// [1e-9 wL, xi_max] plus the rectangle [0, 1e-9 wL] at the xi = 0 limit.
/// The imaginary-axis Green's tensor is written out in its real form here
/// rather than going through greens_scattering.
double oracle_nonresonant_riemann(double z, double omegaL, const DipoleWeights& w,
                                  std::size_t n = 1'000'000, bool parallel = true);

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst deviation seen
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  // Debug: negate the Rabi frequency of the systems under test while the
  // oracles keep the original sign.
  bool flip_rabi_sign = false;
};

std::vector<CheckResult> run_consistency_suite(const VerifyOptions& opts = {});

} // namespace dcp
