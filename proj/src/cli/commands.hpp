#pragma once

#include <ostream>
#include <vector>

#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "drivencp/potentials.hpp"

namespace dcp::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalError = 3 };

/// Curves requested by a configuration (figure preset or route list).
std::vector<PotentialCurve> potential_curves(const RunConfig& cfg);

std::vector<DynamicsRow> dynamics_rows(const RunConfig& cfg);

/// Writes the CSV to `csv` and the scalar summary (Omega, Delta, dressed
/// frequency, U_L) to `report`. Exceptions propagate; `run` maps them to
/// exit codes.
void cmd_potential(const RunConfig& cfg, std::ostream& csv, std::ostream& report);
void cmd_dynamics(const RunConfig& cfg, std::ostream& csv, std::ostream& report);

/// Runs the cross-route consistency suite; returns kOk iff every check passes.
int cmd_verify(bool json, bool flip_rabi_sign, std::ostream& out);

/// Full command line entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace dcp::cli
