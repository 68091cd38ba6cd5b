#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "drivencp/bloch.hpp"
#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"

using namespace dcp;
using constants::pi;

namespace {
const AtomParams kNa(3.71e-29, 3.24e15);
constexpr double kRabi = 2.1593e9;

DrivenSystem system_at(double ratio) {
  return driven_system_from_frequencies(kNa, kRabi, ratio * kRabi, pi / 2, Alignment::Parallel);
}

double state_error(const BlochState& a, const BlochState& b) {
  return std::max({std::abs(a.p0 - b.p0), std::abs(a.p1 - b.p1), std::abs(a.a10 - b.a10),
                   std::abs(a.a01 - b.a01)});
}
} // namespace

TEST(BlochAnalytic, GroundStateAtTimeZero) {
  const auto st = bloch_analytic(system_at(0.29), 0.0);
  EXPECT_NEAR(st.p0, 1.0, 1e-15);
  EXPECT_EQ(st.p1, 0.0);
  EXPECT_EQ(std::abs(st.a10), 0.0);
  EXPECT_EQ(std::abs(st.a01), 0.0);
}

TEST(BlochAnalytic, ResonantPiPulse) {
  const auto sys = system_at(0.0);
  const auto st = bloch_analytic(sys, pi / sys.omega_rabi);
  EXPECT_NEAR(st.p1, 1.0, 1e-15);
  EXPECT_NEAR(st.p0, 0.0, 1e-15);
}

TEST(BlochAnalytic, CoherencesAreConjugate) {
  const auto sys = system_at(1.3);
  for (double t : {1e-10, 7e-10, 3e-9}) {
    const auto st = bloch_analytic(sys, t);
    EXPECT_NEAR(std::abs(st.a01 - std::conj(st.a10)), 0.0, 1e-15);
    // pure state: |a10|^2 = p0 p1
    EXPECT_NEAR(std::norm(st.a10), st.p0 * st.p1, 1e-14);
  }
}

TEST(BlochAnalytic, MatchesOdeAtGenericPoint) {
  const double w0 = kRabi;
  const auto sys = driven_system_from_frequencies(kNa, w0, 0.7 * w0, pi / 2, Alignment::Parallel);
  const double t = 3.3 / w0;
  const auto ode = bloch_ode_oracle(sys, t, 0.001 / sys.omega_dressed);
  EXPECT_LT(state_error(ode, bloch_analytic(sys, ode.t)), 1e-8);
}

TEST(BlochAnalytic, MatchesOdeOverFiveDressedPeriods) {
  for (double ratio : {0.0, 0.29, 1.0, 5.0}) {
    const auto sys = system_at(ratio);
    const double t_end = 5.0 * 2.0 * pi / sys.omega_dressed;
    double worst = 0.0;
    for (const auto& st : bloch_ode_trajectory(sys, t_end, 0.002 / sys.omega_dressed))
      worst = std::max(worst, state_error(st, bloch_analytic(sys, st.t)));
    EXPECT_LT(worst, 1e-8) << "delta/rabi = " << ratio;
  }
}

TEST(BlochOde, UndrivenStaysInGroundState) {
  const auto sys = build_driven_system(kNa, LaserParams(kNa.omega10 + 1e9, 0.0, 0.0),
                                       Alignment::Parallel);
  const auto st = bloch_ode_oracle(sys, 1e-8, 1e-12);
  EXPECT_EQ(st.p0, 1.0);
  EXPECT_EQ(st.p1, 0.0);
}

TEST(BlochOde, CoarseStepIsResolutionError) {
  const auto sys = system_at(1.0);
  EXPECT_THROW(bloch_ode_oracle(sys, 1e-8, 1.0 / sys.omega_dressed), ResolutionError);
}

TEST(BlochAnalytic, NormalizationAtManyTimes) {
  for (double ratio : {0.0, 0.29, 1.0, 5.0, 20.0}) {
    const auto sys = system_at(ratio);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const auto st = bloch_analytic(sys, k * 1.37e-12);
      worst = std::max(worst, std::abs(st.p0 + st.p1 - 1.0));
    }
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(DipoleBloch, ResonantFormAndOrigin) {
  const auto sys = system_at(0.0);
  EXPECT_EQ(dipole_bloch(sys, 0.0), 0.0);
  for (double t : {1e-10, 4.4e-10, 2e-9}) {
    const double expect = kNa.d * std::sin(sys.omega_rabi * t) * std::sin(sys.laser.omegaL * t);
    EXPECT_NEAR(dipole_bloch(sys, t), expect, kNa.d * 1e-9);
  }
}

TEST(DipoleBloch, EqualsTwiceRealCoherence) {
  const auto sys = system_at(0.8);
  for (double t : {3e-10, 1.1e-9}) {
    const auto st = bloch_analytic(sys, t);
    EXPECT_NEAR(dipole_bloch(sys, t), kNa.d * (st.a10 + st.a01).real(), kNa.d * 1e-12);
  }
}

TEST(Correlation, InitialValuesAndPopulations) {
  const auto sys = system_at(0.29);
  const auto c0 = correlation_functions(sys, 0.0);
  EXPECT_EQ(c0.excited_ground, 0.0);
  EXPECT_NEAR(c0.ground_excited, 1.0, 1e-15);
  const auto st = bloch_analytic(sys, 1.7e-9);
  const auto c = correlation_functions(sys, 1.7e-9);
  EXPECT_NEAR(c.excited_ground, st.p1, 1e-15);
  EXPECT_NEAR(c.ground_excited, st.p0, 1e-15);
}

TEST(Correlation, LargeDetuningBound) {
  const auto sys = system_at(30.0);
  const double bound = 1.0 / (30.0 * 30.0);
  for (int k = 0; k < 500; ++k)
    EXPECT_LE(correlation_functions(sys, k * 3.1e-12).excited_ground, bound);
}

TEST(Averages, HalfOfEnvelope) {
  const auto sys = system_at(0.29);
  const double r2 = sys.omega_dressed * sys.omega_dressed;
  EXPECT_NEAR(averaged_excited_population(sys), 0.5 * sys.omega_rabi * sys.omega_rabi / r2,
              1e-15);
}
