#include "drivencp/bloch.hpp"

#include <array>
#include <cmath>
#include <string>

#include "drivencp/errors.hpp"

namespace dcp {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Rotating-frame state (a10~, a01~, p1, p0).
using Rwa = std::array<cd, 4>;

Rwa rwa_rhs(const Rwa& y, double delta, double rabi) {
  const cd inversion = y[2] - y[3];
  const cd coherence = y[0] - y[1];
  return {-kI * delta * y[0] + 0.5 * kI * rabi * inversion,
          kI * delta * y[1] - 0.5 * kI * rabi * inversion,
          0.5 * kI * rabi * coherence,
          -0.5 * kI * rabi * coherence};
}

Rwa axpy(const Rwa& y, double h, const Rwa& k) {
  Rwa out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = y[i] + h * k[i];
  return out;
}

void rk4_step(Rwa& y, double h, double delta, double rabi) {
  const Rwa k1 = rwa_rhs(y, delta, rabi);
  const Rwa k2 = rwa_rhs(axpy(y, 0.5 * h, k1), delta, rabi);
  const Rwa k3 = rwa_rhs(axpy(y, 0.5 * h, k2), delta, rabi);
  const Rwa k4 = rwa_rhs(axpy(y, h, k3), delta, rabi);
  for (std::size_t i = 0; i < 4; ++i)
    y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

BlochState to_lab(const Rwa& y, double t, double omegaL) {
  const cd rot = std::exp(kI * (omegaL * t));
  return {t, y[3].real(), y[2].real(), y[0] * rot, y[1] * std::conj(rot)};
}

std::size_t step_count(const DrivenSystem& sys, double t_end, double dt) {
  if (!(t_end >= 0.0)) throw DomainError("bloch_ode_oracle: t_end must be >= 0");
  if (!(dt > 0.0)) throw ResolutionError("bloch_ode_oracle: dt must be positive");
  if (sys.omega_dressed > 0.0 && dt > 0.01 / sys.omega_dressed)
    throw ResolutionError("bloch_ode_oracle: dt = " + std::to_string(dt) +
                          " exceeds 0.01 / dressed frequency");
  return static_cast<std::size_t>(std::ceil(t_end / dt));
}

} // namespace

BlochState bloch_analytic(const DrivenSystem& sys, double t) {
  const double rabi = sys.omega_rabi;
  const double delta = sys.delta;
  const double dressed = sys.omega_dressed;
  if (dressed == 0.0) return {t, 1.0, 0.0, 0.0, 0.0};

  const double r2 = dressed * dressed;
  const double s_half = std::sin(0.5 * dressed * t);
  const double c_half = std::cos(0.5 * dressed * t);
  const double s2 = s_half * s_half;

  BlochState st;
  st.t = t;
  st.p0 = rabi * rabi / r2 * c_half * c_half + delta * delta / r2;
  st.p1 = rabi * rabi / r2 * s2;

  const double in_phase = -rabi * delta / r2 * s2;
  const double quadrature = rabi / (2.0 * dressed) * std::sin(dressed * t);
  const cd rot = std::exp(kI * (sys.laser.omegaL * t));
  st.a10 = cd(in_phase, -quadrature) * rot;
  st.a01 = cd(in_phase, quadrature) * std::conj(rot);
  return st;
}

std::vector<BlochState> bloch_ode_trajectory(const DrivenSystem& sys, double t_end,
                                             double dt) {
  const std::size_t n = step_count(sys, t_end, dt);
  const double h = n > 0 ? t_end / static_cast<double>(n) : 0.0;
  Rwa y{0.0, 0.0, 0.0, 1.0};
  std::vector<BlochState> out;
  out.reserve(n + 1);
  out.push_back(to_lab(y, 0.0, sys.laser.omegaL));
  for (std::size_t k = 1; k <= n; ++k) {
    rk4_step(y, h, sys.delta, sys.omega_rabi);
    out.push_back(to_lab(y, h * static_cast<double>(k), sys.laser.omegaL));
  }
  return out;
}

BlochState bloch_ode_oracle(const DrivenSystem& sys, double t_end, double dt) {
  const std::size_t n = step_count(sys, t_end, dt);
  const double h = n > 0 ? t_end / static_cast<double>(n) : 0.0;
  Rwa y{0.0, 0.0, 0.0, 1.0};
  for (std::size_t k = 0; k < n; ++k) rk4_step(y, h, sys.delta, sys.omega_rabi);
  return to_lab(y, t_end, sys.laser.omegaL);
}

double dipole_bloch(const DrivenSystem& sys, double t) {
  const double dressed = sys.omega_dressed;
  if (dressed == 0.0) return 0.0;
  const double rabi = sys.omega_rabi;
  const double s_half = std::sin(0.5 * dressed * t);
  const double wl_t = sys.laser.omegaL * t;
  const double first =
      -2.0 * rabi * sys.delta / (dressed * dressed) * s_half * s_half * std::cos(wl_t);
  const double second = rabi / dressed * std::sin(dressed * t) * std::sin(wl_t);
  return sys.atom.d * (first + second);
}

CorrelationAmplitudes correlation_functions(const DrivenSystem& sys, double t) {
  const double dressed = sys.omega_dressed;
  if (dressed == 0.0) return {0.0, 1.0};
  const double r2 = dressed * dressed;
  const double w2 = sys.omega_rabi * sys.omega_rabi;
  const double s = std::sin(0.5 * dressed * t);
  const double c = std::cos(0.5 * dressed * t);
  return {w2 / r2 * s * s, sys.delta * sys.delta / r2 + w2 / r2 * c * c};
}

double averaged_excited_population(const DrivenSystem& sys) {
  const double dressed = sys.omega_dressed;
  if (dressed == 0.0) return 0.0;
  return 0.5 * sys.omega_rabi * sys.omega_rabi / (dressed * dressed);
}

} // namespace dcp
