#include "cli/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace dcp::cli {

ConfigError::ConfigError(std::string where, std::string field, const std::string& msg)
    : std::runtime_error(where + ": field '" + field + "': " + msg),
      where_(std::move(where)),
      field_(std::move(field)) {}

std::string_view to_string(RouteSel r) {
  switch (r) {
  case RouteSel::Pert: return "pert";
  case RouteSel::Bloch: return "bloch";
  case RouteSel::Undriven: return "undriven";
  case RouteSel::Perreault: return "perreault";
  case RouteSel::U0: return "u0";
  case RouteSel::U1: return "u1";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view v, const std::string& where, const std::string& key) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError(where, key, "expected a number, got '" + std::string(v) + "'");
  return out;
}

std::size_t parse_count(std::string_view v, const std::string& where, const std::string& key) {
  std::size_t out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError(where, key, "expected a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

std::vector<double> parse_list(std::string_view v, const std::string& where,
                               const std::string& key) {
  std::vector<double> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    out.push_back(parse_double(trim(v.substr(0, comma)), where, key));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError(where, key, "empty list");
  return out;
}

std::vector<RouteSel> parse_routes(std::string_view v, const std::string& where) {
  if (v == "all")
    return {RouteSel::Pert, RouteSel::Bloch, RouteSel::Undriven,
            RouteSel::Perreault, RouteSel::U0, RouteSel::U1};
  std::vector<RouteSel> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    const auto name = trim(v.substr(0, comma));
    bool found = false;
    for (auto r : {RouteSel::Pert, RouteSel::Bloch, RouteSel::Undriven, RouteSel::Perreault,
                   RouteSel::U0, RouteSel::U1}) {
      if (name == to_string(r)) {
        out.push_back(r);
        found = true;
      }
    }
    if (!found) throw ConfigError(where, "route", "unknown route '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError(where, "route", "no route given");
  return out;
}

void put(std::ostringstream& os, std::string_view key, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  os << key << '=' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
}

} // namespace

void apply_assignment(RunConfig& cfg, std::string_view assignment, const std::string& where) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError(where, std::string(trim(assignment)), "expected key=value");
  const std::string key(trim(assignment.substr(0, eq)));
  const std::string_view val = trim(assignment.substr(eq + 1));
  if (val.empty()) throw ConfigError(where, key, "missing value");

  auto num = [&] { return parse_double(val, where, key); };
  try {
    if (key == "d") cfg.d = num();
    else if (key == "omega10") cfg.omega10 = num();
    else if (key == "omegaL") cfg.omegaL = num();
    else if (key == "delta") { cfg.delta = num(); cfg.omegaL.reset(); }
    else if (key == "e0") cfg.e0 = num();
    else if (key == "intensity") { cfg.intensity = num(); cfg.e0.reset(); }
    else if (key == "theta") cfg.theta = num();
    else if (key == "alignment") cfg.alignment = parse_alignment(val);
    else if (key == "route") cfg.routes = parse_routes(val, where);
    else if (key == "bloch_mode") cfg.bloch_mode = parse_bloch_mode(val);
    else if (key == "time") {
      if (val == "avg") cfg.time.reset();
      else cfg.time = num();
    }
    else if (key == "z_min") cfg.z_min = num();
    else if (key == "z_max") cfg.z_max = num();
    else if (key == "z_count") cfg.z_count = parse_count(val, where, key);
    else if (key == "t_min") cfg.t_min = num();
    else if (key == "t_max") cfg.t_max = num();
    else if (key == "t_count") cfg.t_count = parse_count(val, where, key);
    else if (key == "quad_max_evals") cfg.quad_max_evals = parse_count(val, where, key);
    else if (key == "distances") cfg.distances = parse_list(val, where, key);
    else if (key == "out") cfg.out = std::string(val);
    else throw ConfigError(where, key, "unknown key");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where, key, e.what());
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text, const std::string& source) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    apply_assignment(cfg, line, source + ":" + std::to_string(line_no));
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, "config", "cannot open file");
  std::ostringstream body;
  body << in.rdbuf();
  apply_config_text(cfg, body.str(), path);
}

void apply_figure_preset(RunConfig& cfg, int figure) {
  if (figure < 1 || figure > 5)
    throw ConfigError("--figure", "figure", "expected 1-5, got " + std::to_string(figure));
  cfg = RunConfig{};
  cfg.figure = figure;
  cfg.bloch_mode = BlochMode::ResonantPrinted;
  switch (figure) {
  case 1: cfg.routes = {RouteSel::Pert, RouteSel::Perreault}; break;
  case 2: cfg.routes = {RouteSel::Pert, RouteSel::Undriven}; break;
  case 3: cfg.routes = {RouteSel::Bloch, RouteSel::Undriven}; break;
  case 4: cfg.routes = {RouteSel::Bloch}; break;
  case 5: cfg.routes = {RouteSel::Pert, RouteSel::Bloch, RouteSel::Undriven}; break;
  }
}

void validate(const RunConfig& cfg) {
  const std::string where = "config";
  if (!(cfg.d > 0.0)) throw ConfigError(where, "d", "must be positive");
  if (!(cfg.omega10 > 0.0)) throw ConfigError(where, "omega10", "must be positive");
  if (!(cfg.laser_frequency() > 0.0)) throw ConfigError(where, "omegaL", "laser frequency must be positive");
  if (cfg.e0 && !(*cfg.e0 >= 0.0)) throw ConfigError(where, "e0", "must be >= 0");
  if (!cfg.e0 && !(cfg.intensity >= 0.0)) throw ConfigError(where, "intensity", "must be >= 0");
  if (!(cfg.theta >= 0.0 && cfg.theta <= 1.5707963267948967))
    throw ConfigError(where, "theta", "must lie in [0, pi/2]");
  if (cfg.z_count < 2) throw ConfigError(where, "z_count", "grid count must be >= 2");
  if (cfg.t_count < 2) throw ConfigError(where, "t_count", "grid count must be >= 2");
  if (cfg.quad_max_evals < 15)
    throw ConfigError(where, "quad_max_evals", "must be >= 15 (one panel)");
  if (!(cfg.z_min > 0.0)) throw ConfigError(where, "z_min", "must be positive");
  if (!(cfg.z_max > cfg.z_min)) throw ConfigError(where, "z_max", "must exceed z_min");
  if (!(cfg.t_min >= 0.0)) throw ConfigError(where, "t_min", "must be >= 0");
  if (cfg.t_max != 0.0 && !(cfg.t_max > cfg.t_min))
    throw ConfigError(where, "t_max", "must exceed t_min");
  if (cfg.time && !(*cfg.time >= 0.0)) throw ConfigError(where, "time", "must be >= 0");
  for (double z : cfg.distances)
    if (!(z > 0.0)) throw ConfigError(where, "distances", "distances must be positive");
}

DrivenSystem make_system(const RunConfig& cfg) {
  const AtomParams atom(cfg.d, cfg.omega10);
  const LaserParams laser(cfg.laser_frequency(), cfg.field_amplitude(), cfg.theta);
  return build_driven_system(atom, laser, cfg.alignment);
}

std::string canonical_dump(const RunConfig& cfg) {
  std::ostringstream os;
  put(os, "d", cfg.d);
  put(os, "omega10", cfg.omega10);
  put(os, "omegaL", cfg.laser_frequency());
  put(os, "e0", cfg.field_amplitude());
  put(os, "theta", cfg.theta);
  os << "alignment=" << to_string(cfg.alignment) << '\n';
  os << "route=";
  for (std::size_t i = 0; i < cfg.routes.size(); ++i)
    os << (i ? "," : "") << to_string(cfg.routes[i]);
  os << '\n';
  os << "bloch_mode=" << to_string(cfg.bloch_mode) << '\n';
  if (cfg.time) put(os, "time", *cfg.time);
  else os << "time=avg\n";
  put(os, "z_min", cfg.z_min);
  put(os, "z_max", cfg.z_max);
  os << "z_count=" << cfg.z_count << '\n';
  put(os, "t_min", cfg.t_min);
  put(os, "t_max", cfg.t_max);
  os << "t_count=" << cfg.t_count << '\n';
  os << "quad_max_evals=" << cfg.quad_max_evals << '\n';
  os << "distances=";
  for (std::size_t i = 0; i < cfg.distances.size(); ++i) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, cfg.distances[i],
                                   std::chars_format::scientific, 16);
    os << (i ? "," : "") << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
  }
  os << '\n';
  if (cfg.figure) os << "figure=" << *cfg.figure << '\n';
  return os.str();
}

std::string config_hash(const RunConfig& cfg) {
  // 64-bit FNV-1a; stable across platforms, unlike std::hash.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical_dump(cfg)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  const auto res = std::to_chars(buf, buf + 16, h, 16);
  std::string hex(buf, res.ptr);
  return std::string(16 - hex.size(), '0') + hex;
}

} // namespace dcp::cli
