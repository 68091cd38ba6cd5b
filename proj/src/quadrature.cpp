#include "drivencp/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"

namespace dcp {

namespace {

using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr std::size_t kEvalsPerPanel = 15;

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0;
  // max_depth = 0: a single Kronrod panel with its embedded Gauss error.
  const double v = GK15::integrate(f, a, b, 0, 0.0, &err);
  return {a, b, v, err};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureOptions& opts) {
  std::priority_queue<Panel> panels;
  panels.push(eval_panel(f, a, b));
  QuadratureResult res{panels.top().value, panels.top().error, kEvalsPerPanel};

  auto converged = [&] {
    return res.est_error <= std::max(opts.rel_tol * std::abs(res.value), opts.abs_floor);
  };

  while (!converged()) {
    if (res.n_evals + 2 * kEvalsPerPanel > opts.max_evals) {
      std::ostringstream msg;
      msg << "adaptive quadrature did not converge within " << opts.max_evals
          << " evaluations (value " << res.value << ", error " << res.est_error << ")";
      throw ConvergenceError(msg.str(), res);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = eval_panel(f, worst.a, mid);
    const Panel right = eval_panel(f, mid, worst.b);
    res.n_evals += 2 * kEvalsPerPanel;
    panels.push(left);
    panels.push(right);
    res.value += left.value + right.value - worst.value;
    res.est_error += left.error + right.error - worst.error;
  }

  // Exact re-sum of the final partition.
  res.value = 0.0;
  res.est_error = 0.0;
  while (!panels.empty()) {
    res.value += panels.top().value;
    res.est_error += panels.top().error;
    panels.pop();
  }
  return res;
}

double nonresonant_integrand(double xi, double z, double omegaL, const DipoleWeights& w) {
  if (xi == 0.0) return nonresonant_integrand_at_zero(z, omegaL, w);
  const cdouble g = greens_scattering(z, cdouble(0.0, xi)).contract(w);
  if (std::abs(g.imag()) > 1e-12 * std::abs(g.real()))
    throw std::logic_error("Green's tensor at imaginary frequency is not real");
  const double weight = omegaL * xi * xi / (xi * xi + omegaL * omegaL);
  return constants::mu0 / constants::pi * weight * g.real();
}

double nonresonant_integrand_at_zero(double z, double omegaL, const DipoleWeights& w) {
  using constants::c;
  using constants::pi;
  // xi^2 G_xx(i xi) -> -c^2 / (32 pi z^3), xi^2 G_zz(i xi) -> -c^2 / (16 pi z^3)
  const double trace = w.xx + w.yy + 2.0 * w.zz;
  return -constants::mu0 / pi * c * c * trace / (32.0 * pi * z * z * z * omegaL);
}

QuadratureResult integrate_nonresonant(double z, double omegaL, const DipoleWeights& w,
                                       const QuadratureOptions& opts) {
  if (!(std::isfinite(z) && z > 0.0))
    throw DomainError("integrate_nonresonant: z must be positive");
  if (!(std::isfinite(omegaL) && omegaL > 0.0))
    throw DomainError("integrate_nonresonant: omegaL must be positive");

  auto mapped = [&](double u) -> double {
    if (u >= 1.0) return 0.0;
    const double one_minus = 1.0 - u;
    const double xi = omegaL * u / one_minus;
    return nonresonant_integrand(xi, z, omegaL, w) * omegaL / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, opts);
}

} // namespace dcp
