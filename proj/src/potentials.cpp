#include "drivencp/potentials.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "drivencp/bloch.hpp"
#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"

namespace dcp {

using constants::c;
using constants::mu0;
using constants::pi;

std::string_view to_string(Route r) {
  switch (r) {
  case Route::Perturbative: return "pert";
  case Route::Bloch: return "bloch";
  case Route::Undriven: return "undriven";
  case Route::Perreault: return "perreault";
  case Route::LightForce: return "light";
  case Route::RetardedLimit: return "retarded";
  case Route::NonretardedLimit: return "nonretarded";
  case Route::U0: return "u0";
  case Route::U1: return "u1";
  }
  return "?";
}

std::string_view to_string(DipoleConvention cv) {
  switch (cv) {
  case DipoleConvention::FieldAligned: return "field_aligned";
  case DipoleConvention::XThird: return "x_third";
  case DipoleConvention::Isotropic: return "isotropic";
  }
  return "?";
}

std::string_view to_string(BlochMode m) {
  return m == BlochMode::ResonantPrinted ? "printed" : "populations";
}

BlochMode parse_bloch_mode(std::string_view s) {
  if (s == "printed") return BlochMode::ResonantPrinted;
  if (s == "populations") return BlochMode::PopulationWeighted;
  throw std::invalid_argument("unknown Bloch mode '" + std::string(s) + "'");
}

namespace {

void require_distance(double z) {
  if (!(std::isfinite(z) && z > 0.0))
    throw DomainError("potential: distance z must be positive, got " + std::to_string(z));
}

double real_alpha(const Polarizability& alpha) {
  if (alpha.value.imag() != 0.0)
    throw DomainError("perturbative potential needs a real polarizability");
  return alpha.value.real();
}

double phase(double omega, double z) { return 2.0 * omega * z / c; }

double rabi_fraction(const DrivenSystem& sys) {
  const double r = sys.omega_dressed;
  if (r == 0.0) return 0.0;
  return sys.omega_rabi * sys.omega_rabi / (r * r);
}

DipoleWeights weights_for(const AtomParams& atom, DipoleConvention cv) {
  switch (cv) {
  case DipoleConvention::XThird: return DipoleWeights::x_third(atom.d);
  case DipoleConvention::Isotropic: return DipoleWeights::isotropic(atom.d);
  case DipoleConvention::FieldAligned: break;
  }
  throw std::invalid_argument("u0_u1: field-aligned convention needs a field direction");
}

} // namespace

double resonant_brace(double omega, double z) {
  require_distance(z);
  const double x = c / (omega * z);
  const double p = phase(omega, z);
  const double cp = std::cos(p);
  return x * x * x * cp + 2.0 * x * x * std::sin(p) - 4.0 * x * cp;
}

double resonant_term(double omega, double z, const DipoleWeights& w) {
  const cdouble g = greens_scattering(z, cdouble(omega, 0.0)).contract(w);
  return -mu0 * omega * omega * g.real();
}

double u_light(const DrivenSystem& sys) {
  if (sys.delta == 0.0) throw PoleError("u_light: zero detuning");
  const double d = sys.atom.d;
  const double e0 = sys.laser.e0;
  return d * d * e0 * e0 / (12.0 * constants::hbar * sys.delta);
}

double u_light_bloch(const DrivenSystem& sys, TimeArg t) {
  const double r = sys.omega_dressed;
  if (r == 0.0) return 0.0;
  double s2 = 0.5;
  if (t) {
    const double s = std::sin(0.5 * r * *t);
    s2 = s * s;
  }
  // E.d = hbar * Omega by definition of the Rabi frequency.
  const double e_dot_d = constants::hbar * sys.omega_rabi;
  return 0.5 * e_dot_d * sys.delta * sys.omega_rabi / (r * r) * s2;
}

double u_lcp_perturbative(const DrivenSystem& sys, const Polarizability& alpha, double z) {
  require_distance(z);
  const double a = real_alpha(alpha);
  const double wl = sys.laser.omegaL;
  const double e0 = sys.laser.e0;
  const double ct = std::cos(sys.laser.theta);
  const double st = std::sin(sys.laser.theta);
  const double enhance = 1.0 + ct * ct;

  const double x = c / (wl * z);
  const double p = phase(wl, z);
  const double brace = enhance * x * x * x * std::cos(p) +
                       2.0 * enhance * x * x * std::sin(p) -
                       4.0 * st * st * x * std::cos(p);
  return -mu0 * wl * wl * wl * a * a * e0 * e0 / (64.0 * pi * c) * brace;
}

double u_lcp_perturbative_contraction(const DrivenSystem& sys, const Polarizability& alpha,
                                      double z) {
  const double a = real_alpha(alpha);
  const double wl = sys.laser.omegaL;
  const double e0 = sys.laser.e0;
  // E.alpha.Re G.alpha.E with E = E0 (sin th, 0, cos th), alpha scalar.
  const auto unit = DipoleWeights::field_aligned(1.0, sys.laser.theta);
  const double egE = greens_scattering(z, cdouble(wl, 0.0)).contract(unit).real();
  return -0.5 * mu0 * wl * wl * a * a * e0 * e0 * egE;
}

double u_lcp_perturbative_nonretarded(const DrivenSystem& sys, const Polarizability& alpha,
                                      double z) {
  require_distance(z);
  const double a = real_alpha(alpha);
  const double e0 = sys.laser.e0;
  const double ct = std::cos(sys.laser.theta);
  return -mu0 * a * a * e0 * e0 * c * c / (64.0 * pi * z * z * z) * (1.0 + ct * ct);
}

double u_lcp_perturbative_retarded(const DrivenSystem& sys, const Polarizability& alpha,
                                   double z) {
  require_distance(z);
  const double a = real_alpha(alpha);
  const double wl = sys.laser.omegaL;
  const double e0 = sys.laser.e0;
  const double st = std::sin(sys.laser.theta);
  return mu0 * wl * wl * a * a * e0 * e0 / (16.0 * pi * z) * st * st *
         std::cos(phase(wl, z));
}

double u_lcp_perreault(const DrivenSystem& sys, const Polarizability& alpha, double z) {
  require_distance(z);
  const double a = real_alpha(alpha);
  const double e0 = sys.laser.e0;
  const double ct = std::cos(sys.laser.theta);
  return -a * a * e0 * e0 / (64.0 * pi * constants::eps0 * z * z * z) * (1.0 + ct * ct) *
         std::cos(phase(sys.laser.omegaL, z));
}

double u_cp_undriven_excited(const AtomParams& atom, double z) {
  const double w = atom.omega10;
  return -mu0 * w * w * w * atom.d * atom.d / (96.0 * pi * c) * resonant_brace(w, z);
}

double u_cp_undriven_nonretarded(const AtomParams& atom, double z) {
  require_distance(z);
  return -mu0 * atom.d * atom.d * c * c / (96.0 * pi * z * z * z);
}

double u_cp_undriven_retarded(const AtomParams& atom, double z) {
  require_distance(z);
  const double w = atom.omega10;
  return mu0 * w * w * atom.d * atom.d / (24.0 * pi * z) * std::cos(phase(w, z));
}

GroundExcitedPotentials u0_u1(const AtomParams& atom, double omegaL, double z,
                              DipoleConvention convention, const QuadratureOptions& opts) {
  require_distance(z);
  const auto w = weights_for(atom, convention);
  GroundExcitedPotentials out{};
  out.quad = integrate_nonresonant(z, omegaL, w, opts);
  out.u0 = out.quad.value;
  out.resonant = resonant_term(omegaL, z, w);
  out.u1 = -out.u0 + out.resonant;
  return out;
}

QuadratureResult u_cp_ground_literature(const AtomParams& atom, double z,
                                        const QuadratureOptions& opts) {
  require_distance(z);
  const double w10 = atom.omega10;
  auto integrand = [&](double xi) -> double {
    if (xi == 0.0) {
      // xi^2 tr G(i xi) -> -c^2 / (8 pi z^3)
      const double a0 = alpha_complex(atom, 0.0, 0.0, Alignment::Isotropic).value.real();
      return mu0 * constants::hbar / (2.0 * pi) * a0 * (-c * c / (8.0 * pi * z * z * z));
    }
    const cdouble iw(0.0, xi);
    const auto g = greens_scattering(z, iw);
    const cdouble trace = g.gxx + g.gyy + g.gzz;
    const cdouble a = alpha_complex(atom, 0.0, iw, Alignment::Isotropic).value;
    return mu0 * constants::hbar / (2.0 * pi) * xi * xi * (a * trace).real();
  };
  auto mapped = [&](double u) -> double {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    return integrand(w10 * u / one_minus) * w10 / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, opts);
}

double u_lcp_bloch(const DrivenSystem& sys, double z, TimeArg t, BlochMode mode,
                   const QuadratureOptions& opts) {
  require_distance(z);
  const double wl = sys.laser.omegaL;
  if (mode == BlochMode::ResonantPrinted) {
    double s2 = 0.5;
    if (t) {
      const double s = std::sin(2.0 * sys.omega_dressed * *t);
      s2 = s * s;
    }
    return -mu0 * wl * wl * wl * sys.atom.d * sys.atom.d / (96.0 * pi * c) *
           rabi_fraction(sys) * s2 * resonant_brace(wl, z);
  }

  const auto g = u0_u1(sys.atom, wl, z, DipoleConvention::XThird, opts);
  double p0 = 1.0;
  double p1 = 0.0;
  if (t) {
    const auto st = bloch_analytic(sys, *t);
    p0 = st.p0;
    p1 = st.p1;
  } else {
    p1 = averaged_excited_population(sys);
    p0 = 1.0 - p1;
  }
  return p0 * g.u0 + p1 * g.u1;
}

double u_lcp_bloch_nonretarded(const DrivenSystem& sys, double z) {
  require_distance(z);
  const double d = sys.atom.d;
  return -mu0 * d * d * c * c / (192.0 * pi * z * z * z) * rabi_fraction(sys);
}

double u_lcp_bloch_retarded(const DrivenSystem& sys, double z) {
  require_distance(z);
  const double d = sys.atom.d;
  const double wl = sys.laser.omegaL;
  return mu0 * wl * wl * d * d / (48.0 * pi * z) * rabi_fraction(sys) *
         std::cos(phase(wl, z));
}

PotentialSample make_sample(double z, TimeArg t, double value, Route route,
                            DipoleConvention convention) {
  return {z, t, value, route, convention};
}

} // namespace dcp
