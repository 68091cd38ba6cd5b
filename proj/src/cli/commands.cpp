#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "drivencp/bloch.hpp"
#include "drivencp/constants.hpp"
#include "drivencp/errors.hpp"
#include "drivencp/figures.hpp"
#include "drivencp/kernels.hpp"
#include "drivencp/verify.hpp"

namespace dcp::cli {

namespace {

constexpr double kQuotedLightPotential = -1.30e-27;

FigureParams figure_params(const RunConfig& cfg) {
  FigureParams p;
  p.d = cfg.d;
  p.omega10 = cfg.omega10;
  p.intensity = field_to_intensity(cfg.field_amplitude());
  p.delta = cfg.laser_frequency() - cfg.omega10;
  p.theta = cfg.theta;
  p.alignment = cfg.alignment;
  p.z_min = cfg.z_min;
  p.z_max = cfg.z_max;
  p.z_count = cfg.z_count;
  p.time_distances = cfg.distances;
  p.t_max = cfg.t_max;
  p.t_count = cfg.t_count;
  p.bloch_mode = cfg.bloch_mode;
  return p;
}

PotentialCurve route_curve(const RunConfig& cfg, const DrivenSystem& sys, RouteSel sel,
                           const std::vector<double>& zs) {
  PointFn f;
  Route route = Route::Perturbative;
  DipoleConvention cv = DipoleConvention::XThird;
  TimeArg t = kTimeAveraged;
  QuadratureOptions qopts;
  qopts.max_evals = cfg.quad_max_evals;
  switch (sel) {
  case RouteSel::Pert: {
    const auto alpha = alpha_isotropic(sys.atom, sys.laser.omegaL);
    f = [&sys, alpha](double z) { return u_lcp_perturbative(sys, alpha, z); };
    cv = DipoleConvention::FieldAligned;
    break;
  }
  case RouteSel::Perreault: {
    const auto alpha = alpha_isotropic(sys.atom, sys.laser.omegaL);
    f = [&sys, alpha](double z) { return u_lcp_perreault(sys, alpha, z); };
    route = Route::Perreault;
    cv = DipoleConvention::FieldAligned;
    break;
  }
  case RouteSel::Bloch:
    t = cfg.time;
    f = [&sys, &cfg, qopts](double z) {
      return u_lcp_bloch(sys, z, cfg.time, cfg.bloch_mode, qopts);
    };
    route = Route::Bloch;
    break;
  case RouteSel::Undriven:
    f = [&sys](double z) { return u_cp_undriven_excited(sys.atom, z); };
    route = Route::Undriven;
    break;
  case RouteSel::U0:
    f = [&sys, qopts](double z) {
      return u0_u1(sys.atom, sys.laser.omegaL, z, DipoleConvention::XThird, qopts).u0;
    };
    route = Route::U0;
    break;
  case RouteSel::U1:
    f = [&sys, qopts](double z) {
      return u0_u1(sys.atom, sys.laser.omegaL, z, DipoleConvention::XThird, qopts).u1;
    };
    route = Route::U1;
    break;
  }
  const auto values = map_grid_parallel(zs, f);
  PotentialCurve curve{std::string(to_string(sel)), route, cv, {}};
  curve.samples.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    curve.samples.push_back(make_sample(zs[i], t, values[i], route, cv));
  return curve;
}

void write_report(const DrivenSystem& sys, std::ostream& report) {
  report << "Omega_rad_s=" << format_number(sys.omega_rabi) << '\n';
  report << "Delta_rad_s=" << format_number(sys.delta) << '\n';
  report << "dressed_rad_s=" << format_number(sys.omega_dressed) << '\n';
  if (sys.delta != 0.0) report << "U_L_J=" << format_number(u_light(sys)) << '\n';
  else report << "U_L_J=undefined (zero detuning)\n";
  report << "U_L_quoted_J=" << format_number(kQuotedLightPotential) << '\n';
}

double default_t_max(const RunConfig& cfg, const DrivenSystem& sys) {
  if (cfg.t_max > 0.0) return cfg.t_max;
  if (sys.omega_dressed == 0.0)
    throw ConfigError("config", "t_max", "required when the dressed frequency is zero");
  return cfg.t_min + 4.0 * constants::pi / sys.omega_dressed;
}

} // namespace

std::vector<PotentialCurve> potential_curves(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.figure) return figure_curves(*cfg.figure, figure_params(cfg));
  const auto sys = make_system(cfg);
  const auto zs = log_space(cfg.z_min, cfg.z_max, cfg.z_count);
  std::vector<PotentialCurve> curves;
  for (auto sel : cfg.routes) curves.push_back(route_curve(cfg, sys, sel, zs));
  return curves;
}

std::vector<DynamicsRow> dynamics_rows(const RunConfig& cfg) {
  validate(cfg);
  const auto sys = make_system(cfg);
  const auto ts = lin_space(cfg.t_min, default_t_max(cfg, sys), cfg.t_count);
  std::vector<DynamicsRow> rows;
  rows.reserve(ts.size() * cfg.distances.size());
  for (double z : cfg.distances) {
    QuadratureOptions qopts;
    qopts.max_evals = cfg.quad_max_evals;
    const auto u = map_grid_parallel(
        ts, [&](double t) { return u_lcp_bloch(sys, z, t, cfg.bloch_mode, qopts); });
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto st = bloch_analytic(sys, ts[i]);
      rows.push_back({z, ts[i], st.p0, st.p1, st.a10, u[i]});
    }
  }
  return rows;
}

void cmd_potential(const RunConfig& cfg, std::ostream& csv, std::ostream& report) {
  const auto curves = potential_curves(cfg);
  write_report(make_system(cfg), report);
  write_potential_csv(csv, cfg, curves);
}

void cmd_dynamics(const RunConfig& cfg, std::ostream& csv, std::ostream& report) {
  const auto rows = dynamics_rows(cfg);
  write_report(make_system(cfg), report);
  write_dynamics_csv(csv, cfg, rows);
}

int cmd_verify(bool json, bool flip_rabi_sign, std::ostream& out) {
  VerifyOptions opts;
  opts.flip_rabi_sign = flip_rabi_sign;
  const auto results = run_consistency_suite(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (json) {
    nlohmann::json doc;
    doc["passed"] = all;
    doc["checks"] = nlohmann::json::array();
    for (const auto& r : results) {
      doc["checks"].push_back({{"name", r.name},
                               {"passed", r.passed},
                               {"measured", r.measured},
                               {"tolerance", r.tolerance},
                               {"detail", r.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << "  measured=" << format_number(r.measured)
          << " tol=" << format_number(r.tolerance);
      if (!r.detail.empty()) out << "  (" << r.detail << ')';
      out << '\n';
    }
    out << (all ? "all checks passed\n" : "some checks FAILED\n");
  }
  return all ? kOk : kNumericalError;
}

namespace {

struct CommonArgs {
  int figure = 0;
  std::string out;
  std::string config;
  std::string route;
  bool avg = false;
  double time = -1.0;
  std::vector<std::string> sets;
};

void add_common(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--figure", a.figure, "Figure preset 1-5 (sodium parameters)");
  sub->add_option("--out", a.out, "Output CSV path (default: stdout)");
  sub->add_option("--config", a.config, "Flat key=value config file");
  sub->add_option("--route", a.route, "pert, bloch, undriven, perreault, u0, u1 or all");
  auto* avg = sub->add_flag("--avg", a.avg, "Time-averaged Bloch potential (default)");
  auto* time = sub->add_option("--time", a.time, "Evaluate the Bloch potential at time t [s]");
  avg->excludes(time);
  sub->add_option("--set", a.sets, "KEY=VALUE override (repeatable)");
}

RunConfig resolve(const CommonArgs& a) {
  RunConfig cfg;
  if (a.figure != 0) apply_figure_preset(cfg, a.figure);
  if (!a.config.empty()) apply_config_file(cfg, a.config);
  if (!a.route.empty()) apply_assignment(cfg, "route=" + a.route, "--route");
  if (a.time >= 0.0) cfg.time = a.time;
  if (a.avg) cfg.time.reset();
  for (const auto& s : a.sets) apply_assignment(cfg, s, "--set");
  validate(cfg);
  return cfg;
}

template <class Command>
int run_data_command(const CommonArgs& a, Command cmd, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = resolve(a);
    if (cfg.out.empty() && a.out.empty()) {
      std::ostringstream report;
      cmd(cfg, out, report);
      err << report.str();
      return kOk;
    }
    const std::string path = a.out.empty() ? cfg.out : a.out;
    // Compute fully before touching the output file.
    std::ostringstream csv;
    cmd(cfg, csv, out);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file " << path << '\n';
      return kConfigError;
    }
    file << csv.str();
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const GridPointError& e) {
    err << "numerical failure at grid point " << e.index() << " (" << format_number(e.abscissa())
        << "): " << e.what() << '\n';
    return kNumericalError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  apply_thread_cap();

  CLI::App app{"Casimir-Polder potentials of a laser-driven two-level atom near a mirror"};
  app.require_subcommand(1);

  CommonArgs pot_args;
  auto* pot = app.add_subcommand("potential", "Potential curves U(z) as CSV");
  add_common(pot, pot_args);

  CommonArgs dyn_args;
  auto* dyn = app.add_subcommand("dynamics", "Populations, coherence and U_BE(t) as CSV");
  add_common(dyn, dyn_args);

  bool json = false;
  bool flip = false;
  auto* ver = app.add_subcommand("verify", "Cross-route consistency checks");
  ver->add_flag("--json", json, "Machine-readable report");
  ver->add_flag("--flip-rabi-sign", flip, "Debug: negate the Rabi frequency under test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kConfigError;
  }

  if (*pot) return run_data_command(pot_args, cmd_potential, out, err);
  if (*dyn) {
    if (dyn_args.figure != 0 && dyn_args.figure != 4) {
      err << "config error: --figure: dynamics only has the figure 4 preset\n";
      return kConfigError;
    }
    return run_data_command(dyn_args, cmd_dynamics, out, err);
  }
  return cmd_verify(json, flip, out);
}

} // namespace dcp::cli
