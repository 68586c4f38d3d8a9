#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thermocap/eos.hpp"
#include "thermocap/equilibrium.hpp"
#include "thermocap/scaling.hpp"

namespace thermocap::cli {

// Malformed or inconsistent configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json, Both };

OutputFormat parse_format(std::string_view text);
std::string_view to_string(OutputFormat format);

struct RunConfig {
  FluidParams params;
  BulkConditions bc;
  GridConfig grid;
  NewtonOptions newton;
  SweepConfig sweep;
  ExponentTolerances tolerances;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::Both;
  std::uint64_t seed = 42;
  // Unit-system descriptor; carried into outputs, never used in kernels.
  std::string units = "reduced";

  bool writes_csv() const noexcept { return format != OutputFormat::Json; }
  bool writes_json() const noexcept { return format != OutputFormat::Csv; }
};

// Reference fluid at T_c - T0 = 0.01 with the default grid, solver and sweep.
RunConfig default_config();

// Strict parse of a JSON config document: unknown keys, wrong types and
// missing physical constants are rejected. "fluid" needs all nine constants;
// "bulk" needs exactly one of "delta_T" or "T0".
RunConfig parse_config(std::string_view json_text);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace thermocap::cli
