#include "cli/csv.hpp"

#include <charconv>

#include "drivencp/constants.hpp"

namespace dcp::cli {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
  return std::string(buf, res.ptr);
}

void write_header(std::ostream& os, const RunConfig& cfg, std::string_view command) {
  os << "# tool=driven_cp\n";
  os << "# command=" << command << '\n';
  os << "# config_hash=" << config_hash(cfg) << '\n';
  os << "# c=" << format_number(constants::c) << '\n';
  os << "# hbar=" << format_number(constants::hbar) << '\n';
  os << "# eps0=" << format_number(constants::eps0) << '\n';
  os << "# mu0=" << format_number(constants::mu0) << '\n';
  os << "# d=" << format_number(cfg.d) << '\n';
  os << "# omega10=" << format_number(cfg.omega10) << '\n';
  os << "# omegaL=" << format_number(cfg.laser_frequency()) << '\n';
  os << "# e0=" << format_number(cfg.field_amplitude()) << '\n';
  os << "# theta=" << format_number(cfg.theta) << '\n';
  os << "# alignment=" << to_string(cfg.alignment) << '\n';
  os << "# bloch_mode=" << to_string(cfg.bloch_mode) << '\n';
  os << "# time=" << (cfg.time ? format_number(*cfg.time) : std::string("avg")) << '\n';
  if (cfg.figure) os << "# figure=" << *cfg.figure << '\n';
}

void write_potential_csv(std::ostream& os, const RunConfig& cfg,
                         const std::vector<PotentialCurve>& curves) {
  bool timed = false;
  for (const auto& c : curves)
    for (const auto& s : c.samples) timed = timed || s.t.has_value();

  write_header(os, cfg, "potential");
  os << "z_m,route,label,value_J,convention" << (timed ? ",t_s" : "") << '\n';
  for (const auto& c : curves) {
    for (const auto& s : c.samples) {
      os << format_number(s.z) << ',' << to_string(s.route) << ',' << c.label << ','
         << format_number(s.value) << ',' << to_string(s.convention);
      if (timed) os << ',' << (s.t ? format_number(*s.t) : std::string());
      os << '\n';
    }
  }
}

void write_dynamics_csv(std::ostream& os, const RunConfig& cfg,
                        const std::vector<DynamicsRow>& rows) {
  write_header(os, cfg, "dynamics");
  os << "z_m,t_s,p0,p1,re_a10,im_a10,u_be_J\n";
  for (const auto& r : rows) {
    os << format_number(r.z) << ',' << format_number(r.t) << ',' << format_number(r.p0) << ','
       << format_number(r.p1) << ',' << format_number(r.a10.real()) << ','
       << format_number(r.a10.imag()) << ',' << format_number(r.u_be) << '\n';
  }
}

} // namespace dcp::cli
