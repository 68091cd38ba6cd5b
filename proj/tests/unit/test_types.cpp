#include <gtest/gtest.h>

#include <cmath>

#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"
#include "drivencp/types.hpp"

using namespace dcp;

namespace {
const AtomParams kNa(3.71e-29, 3.24e15);
constexpr double kDelta = 2.0 * constants::pi * 1e8;
}

TEST(Constants, DerivedFromExactValues) {
  EXPECT_DOUBLE_EQ(constants::hbar * 2.0 * constants::pi, constants::h);
  EXPECT_NEAR(constants::mu0 * constants::eps0 * constants::c * constants::c, 1.0, 1e-15);
  EXPECT_NEAR(constants::eps0, 8.8541878128e-12, 1e-21);
}

TEST(IntensityToField, ZeroDrive) { EXPECT_EQ(intensity_to_field(0.0), 0.0); }

TEST(IntensityToField, SodiumIntensity) {
  const double e0 = intensity_to_field(5e4);
  EXPECT_NEAR(e0, 6.14e3, 0.01e3);
  // independent: I = eps0 c E0^2 / 2
  EXPECT_NEAR(0.5 * 8.8541878128e-12 * 299792458.0 * e0 * e0, 5e4, 5e4 * 1e-9);
}

TEST(IntensityToField, RoundTrip) {
  for (double i : {1e-3, 1.0, 5e4, 3.3e9})
    EXPECT_NEAR(field_to_intensity(intensity_to_field(i)), i, i * 1e-14);
}

TEST(IntensityToField, NegativeIsDomainError) {
  EXPECT_THROW(intensity_to_field(-1.0), DomainError);
}

TEST(Params, ConstructorsValidate) {
  EXPECT_THROW(AtomParams(-1.0, 1e15), DomainError);
  EXPECT_THROW(AtomParams(1e-29, 0.0), DomainError);
  EXPECT_THROW(LaserParams(1e15, -1.0, 0.0), DomainError);
  EXPECT_THROW(LaserParams(1e15, 1.0, 2.0), DomainError);
  EXPECT_THROW(LaserParams(0.0, 1.0, 0.0), DomainError);
  EXPECT_NO_THROW(LaserParams(1e15, 0.0, constants::pi / 2));
}

TEST(BuildDrivenSystem, ZeroFieldIsUndriven) {
  const auto sys = build_driven_system(kNa, LaserParams(kNa.omega10 + kDelta, 0.0, 0.0),
                                       Alignment::Parallel);
  EXPECT_EQ(sys.omega_rabi, 0.0);
  EXPECT_EQ(sys.delta, sys.laser.omegaL - kNa.omega10);
  EXPECT_DOUBLE_EQ(sys.omega_dressed, std::abs(sys.delta));
}

TEST(BuildDrivenSystem, SodiumDetuningOverRabi) {
  const auto sys = build_driven_system(
      kNa, LaserParams(kNa.omega10 + kDelta, intensity_to_field(5e4), constants::pi / 2),
      Alignment::Parallel);
  EXPECT_NEAR(sys.delta / sys.omega_rabi, 0.29, 0.29 * 0.03);
  EXPECT_NEAR(sys.omega_rabi, kNa.d * sys.laser.e0 / constants::hbar, 1.0);
}

TEST(BuildDrivenSystem, IsotropicRabiIsSmallerBySqrt3) {
  const LaserParams laser(kNa.omega10 + kDelta, 6000.0, 0.3);
  const auto par = build_driven_system(kNa, laser, Alignment::Parallel);
  const auto iso = build_driven_system(kNa, laser, Alignment::Isotropic);
  EXPECT_NEAR(par.omega_rabi / iso.omega_rabi, std::sqrt(3.0), 1e-14);
}

TEST(BuildDrivenSystem, ResonanceGivesDressedEqualRabi) {
  const auto sys =
      build_driven_system(kNa, LaserParams(kNa.omega10, 6000.0, 0.0), Alignment::Parallel);
  EXPECT_EQ(sys.delta, 0.0);
  EXPECT_EQ(sys.omega_dressed, sys.omega_rabi);
}

TEST(DrivenSystemFromFrequencies, RecoversRequest) {
  for (double ratio : {0.0, 0.29, 5.0, 100.0}) {
    const double rabi = 2e9;
    const auto sys = driven_system_from_frequencies(kNa, rabi, ratio * rabi, 0.4,
                                                    Alignment::Isotropic);
    EXPECT_NEAR(sys.omega_rabi, rabi, rabi * 1e-12);
    EXPECT_NEAR(sys.delta, ratio * rabi, rabi * 1e-5); // ulp of omegaL ~ 0.5 rad/s
    EXPECT_EQ(sys.delta, sys.laser.omegaL - kNa.omega10);
  }
}

TEST(Alignment, ParseRoundTrip) {
  EXPECT_EQ(parse_alignment("parallel"), Alignment::Parallel);
  EXPECT_EQ(parse_alignment(to_string(Alignment::Isotropic)), Alignment::Isotropic);
  EXPECT_THROW(parse_alignment("diagonal"), std::invalid_argument);
}
