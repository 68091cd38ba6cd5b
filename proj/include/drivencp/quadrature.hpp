#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "drivencp/mirror_greens.hpp"

namespace dcp {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  std::size_t n_evals = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_floor = 1e-40;
  std::size_t max_evals = 100000;
};

class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}

  const QuadratureResult& partial() const noexcept { return partial_; }

private:
  QuadratureResult partial_;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]: the panel with the
/// largest error estimate is bisected until
/// est_error <= max(rel_tol |value|, abs_floor) or the evaluation budget
/// would be exceeded (ConvergenceError carrying the partial result).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureOptions& opts = {});

/// (mu0/pi) wL xi^2/(xi^2 + wL^2) d.G(z, i xi).d  [J s]
/// Throws std::logic_error if G(i xi) comes back with an imaginary part.
double nonresonant_integrand(double xi, double z, double omegaL,
                             const DipoleWeights& w);

/// Value of the integrand at xi = 0 (finite: xi^2 G(i xi) -> const).
double nonresonant_integrand_at_zero(double z, double omegaL,
                                     const DipoleWeights& w);

/// (mu0/pi) int_0^inf dxi wL xi^2/(xi^2+wL^2) d.G(i xi).d, mapped to [0,1)
/// with xi = wL u / (1 - u).
QuadratureResult integrate_nonresonant(double z, double omegaL,
                                       const DipoleWeights& w,
                                       const QuadratureOptions& opts = {});

} // namespace dcp
