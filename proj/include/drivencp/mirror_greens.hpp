#pragma once

#include <complex>

namespace dcp {

using cdouble = std::complex<double>;

/// Squared Cartesian dipole components (d_x^2, d_y^2, d_z^2) [C^2 m^2].
/// Contracting d.G.d with a diagonal G only needs these.
struct DipoleWeights {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;

  // d along x with d_x^2 = d^2/3, the convention of the undriven and
  // Bloch-route potentials.
  static DipoleWeights x_third(double d) { return {d * d / 3.0, 0.0, 0.0}; }
  static DipoleWeights isotropic(double d) {
    const double w = d * d / 3.0;
    return {w, w, w};
  }
  // Dipole along E = E0 (sin theta, 0, cos theta).
  static DipoleWeights field_aligned(double d, double theta);
};

/// Diagonal scattering Green's tensor of a perfect mirror at coincident
/// points a distance z above the surface. Off-diagonal elements vanish.
struct GreensValue {
  cdouble gxx;
  cdouble gyy;
  cdouble gzz;
  double z;
  cdouble omega;

  cdouble contract(const DipoleWeights& w) const {
    return w.xx * gxx + w.yy * gyy + w.zz * gzz;
  }
};

/// Closed form for r_s = -1, r_p = 1:
///   G_xx = G_yy = w/(32 pi c) [x^3 - 2i x^2 - 4x] e^{2 i w z / c}
///   G_zz        = w/(16 pi c) [x^3 - 2i x^2]      e^{2 i w z / c}
/// with x = c/(w z). Valid for any complex w != 0, so w = i xi gives the
/// imaginary-axis values used in the nonresonant integrals.
GreensValue greens_scattering(double z, cdouble omega);

/// Leading x^3 term only, e^{2iwz/c} -> 1.
GreensValue greens_nonretarded(double z, cdouble omega);

} // namespace dcp
