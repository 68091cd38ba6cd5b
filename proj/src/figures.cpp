#include "drivencp/figures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "drivencp/constants.hpp"
#include "drivencp/kernels.hpp"

namespace dcp {

namespace {

std::vector<double> evaluate(const std::vector<double>& grid, const PointFn& f, bool parallel) {
  return parallel ? map_grid_parallel(grid, f) : map_grid_serial(grid, f);
}

PotentialCurve distance_curve(std::string label, Route route, DipoleConvention cv,
                              const std::vector<double>& zs, const PointFn& f,
                              bool parallel, TimeArg t = kTimeAveraged) {
  const auto values = evaluate(zs, f, parallel);
  PotentialCurve curve{std::move(label), route, cv, {}};
  curve.samples.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    curve.samples.push_back(make_sample(zs[i], t, values[i], route, cv));
  return curve;
}

std::string multiple_label(std::string_view route, double factor) {
  std::ostringstream os;
  os << route << " x" << factor;
  return os.str();
}

PotentialCurve perturbative_curve(const DrivenSystem& sys, std::string label,
                                  const std::vector<double>& zs, bool parallel) {
  const auto alpha = alpha_isotropic(sys.atom, sys.laser.omegaL);
  return distance_curve(std::move(label), Route::Perturbative, DipoleConvention::FieldAligned,
                        zs, [&](double z) { return u_lcp_perturbative(sys, alpha, z); },
                        parallel);
}

PotentialCurve bloch_curve(const DrivenSystem& sys, std::string label,
                           const std::vector<double>& zs, const FigureParams& p) {
  return distance_curve(std::move(label), Route::Bloch, DipoleConvention::XThird, zs,
                        [&](double z) {
                          return u_lcp_bloch(sys, z, kTimeAveraged, p.bloch_mode);
                        },
                        p.parallel);
}

PotentialCurve undriven_curve(const AtomParams& atom, const std::vector<double>& zs,
                              bool parallel) {
  return distance_curve("undriven", Route::Undriven, DipoleConvention::XThird, zs,
                        [&](double z) { return u_cp_undriven_excited(atom, z); }, parallel);
}

} // namespace

DrivenSystem figure_system(const FigureParams& p) {
  const AtomParams atom(p.d, p.omega10);
  const LaserParams laser(p.omega10 + p.delta, intensity_to_field(p.intensity), p.theta);
  return build_driven_system(atom, laser, p.alignment);
}

std::vector<PotentialCurve> figure_curves(int figure_id, const FigureParams& p) {
  if (figure_id < 1 || figure_id > 5)
    throw std::invalid_argument("unknown figure id " + std::to_string(figure_id) +
                                " (expected 1-5)");
  const DrivenSystem base = figure_system(p);
  const auto zs = log_space(p.z_min, p.z_max, p.z_count);
  std::vector<PotentialCurve> curves;

  switch (figure_id) {
  case 1: {
    const auto alpha = alpha_isotropic(base.atom, base.laser.omegaL);
    curves.push_back(perturbative_curve(base, "pert", zs, p.parallel));
    curves.push_back(distance_curve("perreault", Route::Perreault,
                                    DipoleConvention::FieldAligned, zs,
                                    [&](double z) { return u_lcp_perreault(base, alpha, z); },
                                    p.parallel));
    break;
  }
  case 2:
    for (double f : {5.0, 2.0, 1.0})
      curves.push_back(perturbative_curve(with_detuning(base, f * p.delta),
                                          multiple_label("pert", f), zs, p.parallel));
    curves.push_back(undriven_curve(base.atom, zs, p.parallel));
    break;
  case 3:
    for (double f : {0.1, 10.0, 1.0})
      curves.push_back(bloch_curve(with_detuning(base, f * p.delta),
                                   multiple_label("bloch", f), zs, p));
    curves.push_back(undriven_curve(base.atom, zs, p.parallel));
    break;
  case 4: {
    const double t_max =
        p.t_max > 0.0 ? p.t_max : 4.0 * constants::pi / base.omega_dressed;
    const auto ts = lin_space(0.0, t_max, p.t_count);
    for (double z : p.time_distances) {
      const auto values = evaluate(
          ts, [&](double t) { return u_lcp_bloch(base, z, t, p.bloch_mode); }, p.parallel);
      std::ostringstream label;
      label << "bloch z=" << z;
      PotentialCurve curve{label.str(), Route::Bloch, DipoleConvention::XThird, {}};
      for (std::size_t i = 0; i < ts.size(); ++i)
        curve.samples.push_back(
            make_sample(z, ts[i], values[i], Route::Bloch, DipoleConvention::XThird));
      curves.push_back(std::move(curve));
    }
    break;
  }
  case 5:
    curves.push_back(perturbative_curve(base, "pert", zs, p.parallel));
    curves.push_back(bloch_curve(base, "bloch", zs, p));
    curves.push_back(undriven_curve(base.atom, zs, p.parallel));
    break;
  }
  return curves;
}

} // namespace dcp
