#include "cli/config.hpp"

#include <fstream>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <sstream>

#include "thermocap/errors.hpp"

namespace thermocap::cli {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) {
    throw ConfigError(std::string(where) + " must be a JSON object");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view key : allowed) {
      known = known || item.key() == key;
    }
    if (!known) {
      throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

double number_at(const json& object, const char* key, std::string_view where) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ConfigError(std::string(where) + "." + key + " is required");
  }
  if (!it->is_number()) {
    throw ConfigError(std::string(where) + "." + key + " must be a number");
  }
  return it->get<double>();
}

double number_or(const json& object, const char* key, std::string_view where, double fallback) {
  return object.contains(key) ? number_at(object, key, where) : fallback;
}

int integer_or(const json& object, const char* key, std::string_view where, int fallback) {
  const auto it = object.find(key);
  if (it == object.end()) {
    return fallback;
  }
  if (!it->is_number_integer()) {
    throw ConfigError(std::string(where) + "." + key + " must be an integer");
  }
  return it->get<int>();
}

bool bool_or(const json& object, const char* key, std::string_view where, bool fallback) {
  const auto it = object.find(key);
  if (it == object.end()) {
    return fallback;
  }
  if (!it->is_boolean()) {
    throw ConfigError(std::string(where) + "." + key + " must be true or false");
  }
  return it->get<bool>();
}

FluidParams parse_fluid(const json& fluid) {
  reject_unknown_keys(fluid, "fluid", {"A", "B", "rho_c", "T_c", "mu_c", "p_c", "C", "D", "E"});
  FluidConstants raw;
  raw.A = number_at(fluid, "A", "fluid");
  raw.B = number_at(fluid, "B", "fluid");
  raw.rho_c = number_at(fluid, "rho_c", "fluid");
  raw.T_c = number_at(fluid, "T_c", "fluid");
  raw.mu_c = number_at(fluid, "mu_c", "fluid");
  raw.p_c = number_at(fluid, "p_c", "fluid");
  raw.C = number_at(fluid, "C", "fluid");
  raw.D = number_at(fluid, "D", "fluid");
  raw.E = number_at(fluid, "E", "fluid");
  try {
    return validate_params(raw);
  } catch (const Error& e) {
    throw ConfigError(std::string("fluid: ") + e.what());
  }
}

BulkConditions parse_bulk(const json& bulk, const FluidParams& params) {
  reject_unknown_keys(bulk, "bulk", {"delta_T", "T0", "mu1"});
  const bool has_gap = bulk.contains("delta_T");
  const bool has_t0 = bulk.contains("T0");
  if (has_gap == has_t0) {
    throw ConfigError("bulk needs exactly one of delta_T or T0");
  }
  try {
    BulkConditions bc = has_gap ? BulkConditions::from_delta_t(params, number_at(bulk, "delta_T", "bulk"))
                                : BulkConditions::at_temperature(params, number_at(bulk, "T0", "bulk"));
    if (bulk.contains("mu1")) {
      bc = bc.with_chemical_potential(number_at(bulk, "mu1", "bulk"));
    }
    return bc;
  } catch (const Error& e) {
    throw ConfigError(std::string("bulk: ") + e.what());
  }
}

GridConfig parse_grid(const json& grid) {
  reject_unknown_keys(grid, "grid", {"half_width_in_zeta", "n_points"});
  GridConfig g;
  g.half_width_in_zeta = number_or(grid, "half_width_in_zeta", "grid", g.half_width_in_zeta);
  g.n_points = integer_or(grid, "n_points", "grid", g.n_points);
  return g;
}

NewtonOptions parse_solver(const json& solver) {
  reject_unknown_keys(solver, "solver", {"tolerance", "max_iterations", "max_damping_cuts"});
  NewtonOptions o;
  o.tolerance = number_or(solver, "tolerance", "solver", o.tolerance);
  o.max_iterations = integer_or(solver, "max_iterations", "solver", o.max_iterations);
  o.max_damping_cuts = integer_or(solver, "max_damping_cuts", "solver", o.max_damping_cuts);
  if (!(o.tolerance > 0.0) || o.max_iterations < 1 || o.max_damping_cuts < 0) {
    throw ConfigError("solver: tolerance must be > 0, max_iterations >= 1, max_damping_cuts >= 0");
  }
  return o;
}

void parse_sweep(const json& sweep, RunConfig& cfg) {
  reject_unknown_keys(sweep, "sweep", {"delta_t_values", "use_full_solver", "tolerance_closed", "tolerance_full"});
  if (sweep.contains("delta_t_values")) {
    const json& values = sweep.at("delta_t_values");
    if (!values.is_array()) {
      throw ConfigError("sweep.delta_t_values must be an array");
    }
    cfg.sweep.delta_t_values.clear();
    for (const json& v : values) {
      if (!v.is_number()) {
        throw ConfigError("sweep.delta_t_values must hold numbers");
      }
      cfg.sweep.delta_t_values.push_back(v.get<double>());
    }
  }
  cfg.sweep.use_full_solver = bool_or(sweep, "use_full_solver", "sweep", cfg.sweep.use_full_solver);
  cfg.tolerances.closed = number_or(sweep, "tolerance_closed", "sweep", cfg.tolerances.closed);
  cfg.tolerances.full = number_or(sweep, "tolerance_full", "sweep", cfg.tolerances.full);
  if (!(cfg.tolerances.closed > 0.0) || !(cfg.tolerances.full > 0.0)) {
    throw ConfigError("sweep tolerances must be > 0");
  }
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "both") return OutputFormat::Both;
  throw ConfigError("format must be csv, json or both");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Both: return "both";
  }
  return "both";
}

RunConfig default_config() {
  const FluidParams params = validate_params(reference_constants());
  return RunConfig{.params = params, .bc = BulkConditions::from_delta_t(params, 0.01), .grid = {}, .newton = {}, .sweep = {}, .tolerances = {}};
}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown_keys(doc, "config",
                      {"fluid", "bulk", "grid", "solver", "sweep", "output_dir", "format", "units", "seed"});
  if (!doc.contains("fluid") || !doc.contains("bulk")) {
    throw ConfigError("config needs both 'fluid' and 'bulk' sections");
  }

  const FluidParams params = parse_fluid(doc.at("fluid"));
  RunConfig cfg{.params = params, .bc = parse_bulk(doc.at("bulk"), params), .grid = {}, .newton = {}, .sweep = {}, .tolerances = {}};
  if (doc.contains("grid")) {
    cfg.grid = parse_grid(doc.at("grid"));
  }
  if (doc.contains("solver")) {
    cfg.newton = parse_solver(doc.at("solver"));
  }
  if (doc.contains("sweep")) {
    parse_sweep(doc.at("sweep"), cfg);
  }
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) {
      throw ConfigError("output_dir must be a string");
    }
    cfg.output_dir = doc.at("output_dir").get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc.at("format").is_string()) {
      throw ConfigError("format must be a string");
    }
    cfg.format = parse_format(doc.at("format").get<std::string>());
  }
  if (doc.contains("units")) {
    if (!doc.at("units").is_string()) {
      throw ConfigError("units must be a string");
    }
    cfg.units = doc.at("units").get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) {
      throw ConfigError("seed must be a non-negative integer");
    }
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }

  cfg.sweep.grid = cfg.grid;
  cfg.sweep.newton = cfg.newton;
  try {
    cfg.grid.validate();
    cfg.sweep.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace thermocap::cli
