#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drivencp/potentials.hpp"
#include "drivencp/types.hpp"

namespace dcp::cli {

/// Bad configuration; `where` is "file:line" or "--set", `field` the key.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string where, std::string field, const std::string& msg);

  const std::string& where() const noexcept { return where_; }
  const std::string& field() const noexcept { return field_; }

private:
  std::string where_;
  std::string field_;
};

enum class RouteSel { Pert, Bloch, Undriven, Perreault, U0, U1 };

std::string_view to_string(RouteSel r);

/// Flat run configuration. Defaults are the sodium preset.
struct RunConfig {
  double d = 3.71e-29;
  double omega10 = 3.24e15;
  // Laser frequency: omegaL if set, else omega10 + delta. Assigning delta
  // clears omegaL, so the later of the two keys wins.
  std::optional<double> omegaL;
  double delta = 2.0e8 * 3.14159265358979323846;
  // Field amplitude: e0 if set, else derived from intensity (later key wins).
  std::optional<double> e0;
  double intensity = 5.0e4;
  double theta = 1.57079632679489661923;
  Alignment alignment = Alignment::Parallel;

  std::vector<RouteSel> routes{RouteSel::Pert, RouteSel::Bloch, RouteSel::Undriven,
                               RouteSel::Perreault, RouteSel::U0, RouteSel::U1};
  BlochMode bloch_mode = BlochMode::PopulationWeighted;
  std::optional<double> time; // nullopt -> time-averaged

  double z_min = 3e-8;
  double z_max = 3e-6;
  std::size_t z_count = 400;
  double t_min = 0.0;
  double t_max = 0.0; // 0 -> two population periods
  std::size_t t_count = 400;
  std::vector<double> distances{1e-7, 2e-7};
  std::size_t quad_max_evals = 100000; // per nonresonant integral

  std::optional<int> figure;
  std::string out;

  double laser_frequency() const { return omegaL ? *omegaL : omega10 + delta; }
  double field_amplitude() const { return e0 ? *e0 : intensity_to_field(intensity); }
};

/// Applies one `key=value` assignment. Unknown keys and malformed values
/// raise ConfigError tagged with `where`.
void apply_assignment(RunConfig& cfg, std::string_view assignment, const std::string& where);

/// Parses a flat key=value file body; '#' starts a comment.
void apply_config_text(RunConfig& cfg, std::string_view text, const std::string& source);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Figure presets: sodium parameters, route set and grids of figure n.
void apply_figure_preset(RunConfig& cfg, int figure);

/// Grid and parameter checks (counts >= 2, positive ordered ranges, ...).
void validate(const RunConfig& cfg);

DrivenSystem make_system(const RunConfig& cfg);

/// Canonical `key=value` lines, one per field, full precision.
std::string canonical_dump(const RunConfig& cfg);
std::string config_hash(const RunConfig& cfg);

} // namespace dcp::cli
