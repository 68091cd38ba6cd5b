#include <gtest/gtest.h>

#include <cmath>

#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"
#include "drivencp/polarizability.hpp"

using namespace dcp;

namespace {
const AtomParams kNa(3.71e-29, 3.24e15);
const double kD2 = kNa.d * kNa.d;
}

TEST(AlphaComplex, StaticLimit) {
  const double par = 2.0 * kD2 / (constants::hbar * kNa.omega10);
  EXPECT_NEAR(alpha_complex(kNa, 0.0, 0.0).value.real(), par, par * 1e-15);
  EXPECT_NEAR(alpha_complex(kNa, 0.0, 0.0, Alignment::Isotropic).value.real(), par / 3.0,
              par * 1e-15);
}

TEST(AlphaComplex, RealBelowResonance) {
  const double w = 0.8 * kNa.omega10;
  const auto a = alpha_complex(kNa, 0.0, w);
  const double expect = 2.0 * kNa.omega10 * kD2 /
                        (constants::hbar * (kNa.omega10 * kNa.omega10 - w * w));
  EXPECT_EQ(a.value.imag(), 0.0);
  EXPECT_NEAR(a.real(), expect, expect * 1e-12);
  EXPECT_NEAR(alpha_real(kNa, w).real(), expect, expect * 1e-12);
}

TEST(AlphaComplex, ReflectionSymmetry) {
  const std::complex<double> w(1e15, 0.3e15);
  for (double g : {0.0, 1e7}) {
    const auto a = alpha_complex(kNa, g, w).value;
    const auto b = alpha_complex(kNa, g, -std::conj(w)).value;
    EXPECT_NEAR(std::abs(b - std::conj(a)), 0.0, 1e-13 * std::abs(a));
  }
}

TEST(AlphaComplex, PoleOnResonance) {
  EXPECT_THROW(alpha_complex(kNa, 0.0, kNa.omega10), PoleError);
  EXPECT_THROW(alpha_complex(kNa, 0.0, -kNa.omega10), PoleError);
  EXPECT_NO_THROW(alpha_complex(kNa, 1e7, kNa.omega10));
}

TEST(AlphaComplex, AgreesWithRealForms) {
  for (double f : {0.1, 0.5, 0.99, 1.01, 2.0}) {
    const double w = f * kNa.omega10;
    const double par = alpha_real(kNa, w).real();
    EXPECT_NEAR(alpha_complex(kNa, 0.0, w).real(), par, std::abs(par) * 1e-12);
    EXPECT_NEAR(alpha_complex(kNa, 0.0, w, Alignment::Isotropic).real(),
                alpha_isotropic(kNa, w).real(), std::abs(par) * 1e-12);
    EXPECT_NEAR(alpha_isotropic(kNa, w).real(), par / 3.0, std::abs(par) * 1e-15);
  }
}

TEST(AlphaIsotropic, StaticValueOfSodium) {
  const double a0 = alpha_isotropic(kNa, 0.0).real();
  EXPECT_NEAR(a0, 2.0 * kD2 / (3.0 * constants::hbar * kNa.omega10), a0 * 1e-15);
  const double volume = a0 / (4.0 * constants::pi * constants::eps0);
  EXPECT_NEAR(volume, 24.11e-30, 24.11e-30 * 0.02);
}

TEST(AlphaIsotropic, DivergesBelowResonance) {
  double prev = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double v = alpha_isotropic(kNa, kNa.omega10 * (1.0 - eps)).real();
    EXPECT_GT(v, 0.0);
    EXPECT_GT(v, 10.0 * prev);
    prev = v;
  }
  EXPECT_THROW(alpha_isotropic(kNa, kNa.omega10), PoleError);
}

TEST(AlphaDetuning, SignScalingAndPole) {
  const double delta = 2.0 * constants::pi * 1e8;
  EXPECT_LT(alpha_detuning(kNa, delta).real(), 0.0);
  EXPECT_GT(alpha_detuning(kNa, -delta).real(), 0.0);
  EXPECT_NEAR(alpha_detuning(kNa, 2.0 * delta).real() / alpha_detuning(kNa, delta).real(), 0.5,
              1e-15);
  EXPECT_THROW(alpha_detuning(kNa, 0.0), PoleError);
}

TEST(AlphaDetuning, CloseToIsotropicAtSmallDetuning) {
  const double delta = 2.0 * constants::pi * 1e8; // |delta|/omega10 ~ 2e-7
  const double a = alpha_detuning(kNa, delta).real();
  const double b = alpha_isotropic(kNa, kNa.omega10 + delta).real();
  EXPECT_LT(std::abs(a - b) / std::abs(b), 1e-6);
}
