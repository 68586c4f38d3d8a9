#pragma once

#include <optional>
#include <ostream>

#include "cli/config.hpp"
#include "thermocap/waves.hpp"

namespace thermocap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitLawFailure = 4;

struct CommandOptions {
  bool full = false;                  // --full
  std::optional<WaveLocus> locus;     // --locus rho=.. a=.. g2=..
};

// Each command writes its artifacts into cfg.output_dir and returns the exit
// code. Library errors propagate as exceptions; run() maps them to codes.
int cmd_profile(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_celerity(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out);
int cmd_check(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out);

}  // namespace thermocap::cli
