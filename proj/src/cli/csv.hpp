#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cli/config.hpp"
#include "drivencp/potentials.hpp"

namespace dcp::cli {

/// Scientific notation, 12 significant digits, '.' separator whatever the
/// locale.
std::string format_number(double v);

/// `# key=value` block: command, config hash, constants, parameters.
void write_header(std::ostream& os, const RunConfig& cfg, std::string_view command);

/// Long format, one row per (curve, sample) in curve then grid order:
///   z_m,route,label,value_J,convention[,t_s]
/// The t_s column is present only when some sample carries a time.
void write_potential_csv(std::ostream& os, const RunConfig& cfg,
                         const std::vector<PotentialCurve>& curves);

struct DynamicsRow {
  double z;
  double t;
  double p0;
  double p1;
  std::complex<double> a10;
  double u_be;
};

void write_dynamics_csv(std::ostream& os, const RunConfig& cfg,
                        const std::vector<DynamicsRow>& rows);

} // namespace dcp::cli
