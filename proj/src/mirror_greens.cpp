#include "drivencp/mirror_greens.hpp"

#include <cmath>

#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"

namespace dcp {

namespace {

void check_args(double z, cdouble omega) {
  if (!(std::isfinite(z) && z > 0.0))
    throw DomainError("Green's tensor: distance z must be positive");
  if (omega == cdouble(0.0, 0.0))
    throw DomainError("Green's tensor: omega = 0 is a pole of the closed form");
}

} // namespace

DipoleWeights DipoleWeights::field_aligned(double d, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {d * d * s * s, 0.0, d * d * c * c};
}

GreensValue greens_scattering(double z, cdouble omega) {
  check_args(z, omega);
  using constants::c;
  using constants::pi;
  const cdouble x = c / (omega * z);
  const cdouble x2 = x * x;
  const cdouble x3 = x2 * x;
  const cdouble i(0.0, 1.0);
  const cdouble phase = std::exp(2.0 * i * omega * z / c);

  const cdouble gxx = omega / (32.0 * pi * c) * (x3 - 2.0 * i * x2 - 4.0 * x) * phase;
  const cdouble gzz = omega / (16.0 * pi * c) * (x3 - 2.0 * i * x2) * phase;
  return {gxx, gxx, gzz, z, omega};
}

GreensValue greens_nonretarded(double z, cdouble omega) {
  check_args(z, omega);
  using constants::c;
  using constants::pi;
  const cdouble x = c / (omega * z);
  const cdouble x3 = x * x * x;
  const cdouble gxx = omega / (32.0 * pi * c) * x3;
  const cdouble gzz = omega / (16.0 * pi * c) * x3;
  return {gxx, gxx, gzz, z, omega};
}

} // namespace dcp
