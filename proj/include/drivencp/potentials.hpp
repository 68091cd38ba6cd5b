#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drivencp/mirror_greens.hpp"
#include "drivencp/polarizability.hpp"
#include "drivencp/quadrature.hpp"
#include "drivencp/types.hpp"

namespace dcp {

enum class Route {
  Perturbative,
  Bloch,
  Undriven,
  Perreault,
  LightForce,
  RetardedLimit,
  NonretardedLimit,
  U0,
  U1,
};

/// Which dipole projection a value was computed with. Values computed under
/// different conventions must not be compared directly.
enum class DipoleConvention {
  FieldAligned, // d parallel to E(theta), isotropic scalar polarizability
  XThird,       // d along x with d_x^2 = d^2/3
  Isotropic,    // d_i^2 = d^2/3 for every i
};

std::string_view to_string(Route r);
std::string_view to_string(DipoleConvention c);

/// Time argument of the time-dependent potentials; nullopt means the
/// analytic time average.
using TimeArg = std::optional<double>;
inline constexpr TimeArg kTimeAveraged = std::nullopt;

struct PotentialSample {
  double z;
  std::optional<double> t;
  double value;
  Route route;
  DipoleConvention convention;
};

struct PotentialCurve {
  std::string label;
  Route route;
  DipoleConvention convention;
  std::vector<PotentialSample> samples;
};

// Dimensionless brace shared by the resonant closed forms,
//   x^3 cos(2/x) + 2 x^2 sin(2/x) - 4 x cos(2/x),   x = c/(w z).
double resonant_brace(double omega, double z);

// -mu0 w^2 d.Re G(z, w).d
double resonant_term(double omega, double z, const DipoleWeights& w);

// ---- free laser field --------------------------------------------------

/// d^2 E0^2 / (12 hbar delta), time-averaged, isotropic atom.
double u_light(const DrivenSystem& sys);

/// (1/2) hbar W * delta W / R^2 * sin^2(R t / 2), with hbar W = E.d.
double u_light_bloch(const DrivenSystem& sys, TimeArg t);

// ---- perturbative route ------------------------------------------------

/// Closed form
///   -mu0 wL^3 a^2 E0^2/(64 pi c) { [1+cos^2 th] x^3 cos + 2[1+cos^2 th] x^2 sin
///                                  - 4 sin^2 th x cos }.
double u_lcp_perturbative(const DrivenSystem& sys, const Polarizability& alpha,
                          double z);

/// Same quantity as the tensor contraction -1/2 mu0 wL^2 E.a.Re G(wL).a.E.
double u_lcp_perturbative_contraction(const DrivenSystem& sys,
                                      const Polarizability& alpha, double z);

/// -mu0 a^2 E0^2 c^2 / (64 pi z^3) [1 + cos^2 th]
double u_lcp_perturbative_nonretarded(const DrivenSystem& sys,
                                      const Polarizability& alpha, double z);
/// mu0 wL^2 a^2 E0^2 / (16 pi z) sin^2 th cos(2 wL z / c)
double u_lcp_perturbative_retarded(const DrivenSystem& sys,
                                   const Polarizability& alpha, double z);

/// Image-dipole result: -a^2 E0^2 / (64 pi eps0 z^3) [1 + cos^2 th] cos(2 wL z/c)
double u_lcp_perreault(const DrivenSystem& sys, const Polarizability& alpha,
                       double z);

// ---- undriven atom -------------------------------------------------------

/// Resonant excited-state potential -mu0 w10^2 d.Re G(w10).d with
/// d_x^2 = d^2/3.
double u_cp_undriven_excited(const AtomParams& atom, double z);
double u_cp_undriven_nonretarded(const AtomParams& atom, double z);
double u_cp_undriven_retarded(const AtomParams& atom, double z);

// ---- Bloch route ---------------------------------------------------------

struct GroundExcitedPotentials {
  double u0;            // nonresonant integral
  double u1;            // -u0 + resonant
  double resonant;      // -mu0 wL^2 d.Re G(wL).d
  QuadratureResult quad;
};

GroundExcitedPotentials u0_u1(const AtomParams& atom, double omegaL, double z,
                              DipoleConvention convention = DipoleConvention::XThird,
                              const QuadratureOptions& opts = {});

/// Ground-state potential in the textbook form
///   (mu0 hbar / 2 pi) int_0^inf dxi xi^2 tr[alpha(i xi) G(i xi)]
/// with the isotropic two-level polarizability, integrated by the same
/// adaptive rule. Used to cross-check u0_u1 at wL = w10.
QuadratureResult u_cp_ground_literature(const AtomParams& atom, double z,
                                        const QuadratureOptions& opts = {});

enum class BlochMode {
  ResonantPrinted,    // closed form with sin^2(2 R t)
  PopulationWeighted, // p0(t) U0 + p1(t) U1
};

std::string_view to_string(BlochMode m);
BlochMode parse_bloch_mode(std::string_view s);

double u_lcp_bloch(const DrivenSystem& sys, double z, TimeArg t,
                   BlochMode mode = BlochMode::ResonantPrinted,
                   const QuadratureOptions& opts = {});

/// Time-averaged limits of the printed resonant Bloch potential.
double u_lcp_bloch_nonretarded(const DrivenSystem& sys, double z);
double u_lcp_bloch_retarded(const DrivenSystem& sys, double z);

/// Helper that drops the route/convention metadata onto a value.
PotentialSample make_sample(double z, TimeArg t, double value, Route route,
                            DipoleConvention convention);

} // namespace dcp
