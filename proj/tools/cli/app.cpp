#include "cli/app.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "thermocap/errors.hpp"

namespace thermocap::cli {
namespace {

double parse_number(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(fmt::format("--locus: cannot parse {}='{}'", key, text));
  }
  return value;
}

// Tokens of the form rho=.. a=.. g2=.., each exactly once, any order.
WaveLocus parse_locus(const std::vector<std::string>& tokens) {
  std::map<std::string, double> values;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("--locus: expected key=value, got '{}'", tok));
    }
    std::string key = tok.substr(0, eq);
    if (key != "rho" && key != "a" && key != "g2") {
      throw ConfigError(fmt::format("--locus: unknown key '{}'", key));
    }
    if (values.contains(key)) {
      throw ConfigError(fmt::format("--locus: duplicate key '{}'", key));
    }
    values[key] = parse_number(key, tok.substr(eq + 1));
  }
  if (values.size() != 3) {
    throw ConfigError("--locus requires rho=, a= and g2=");
  }
  WaveLocus locus{.rho = values["rho"], .grad_s_normal = values["a"], .grad_s_tg_sq = values["g2"]};
  try {
    locus.validate();
  } catch (const Error& e) {
    throw ConfigError(fmt::format("--locus: {}", e.what()));
  }
  return locus;
}

void print_report(const NewtonReport& r, std::ostream& err) {
  err << fmt::format("newton report: iterations={} residual={:.6e} tolerance={:.3e} converged={}\n", r.iterations,
                     r.residual_norm, r.tolerance, r.converged);
  for (std::size_t k = 0; k < r.residual_history.size(); ++k) {
    err << fmt::format("  iter {:>3}  residual {:.6e}", k, r.residual_history[k]);
    if (k < r.damping_history.size()) {
      err << fmt::format("  step {:.6g}", r.damping_history[k]);
    }
    err << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diffuse-interface equilibrium profiles, surface tension and interfacial wave celerity", "thermocap"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format;
  std::optional<std::uint64_t> seed;
  bool full = false;
  std::vector<std::string> locus_tokens;

  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--format", format, "Artifact format")->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_flag("--full", full, "Use the full two-field solver");

  using Command = int (*)(const RunConfig&, const CommandOptions&, std::ostream&);
  Command selected = nullptr;
  auto add = [&](const char* name, const char* help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&selected, cmd] { selected = cmd; });
    return sub;
  };
  add("profile", "Equilibrium interface profile and observables", cmd_profile);
  add("celerity", "Interfacial wave celerity", cmd_celerity)
      ->add_option("--locus", locus_tokens, "Override the wave locus: rho=.. a=.. g2=..")
      ->expected(3);
  add("sweep", "Temperature sweep and scaling-law fits", cmd_sweep);
  add("check", "Cross-module invariant checks", cmd_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    RunConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
    if (!out_dir.empty()) {
      cfg.output_dir = out_dir;
    }
    if (!format.empty()) {
      cfg.format = parse_format(format);
    }
    if (seed) {
      cfg.seed = *seed;
    }
    CommandOptions opts;
    opts.full = full;
    if (!locus_tokens.empty()) {
      opts.locus = parse_locus(locus_tokens);
    }
    return selected(cfg, opts, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    print_report(e.report(), err);
    return kExitSolver;
  } catch (const Error& e) {
    err << (is_solver_failure(e.kind()) ? "solver error: " : "error: ") << e.what() << "\n";
    return is_solver_failure(e.kind()) ? kExitSolver : kExitConfig;
  } catch (const std::exception& e) {
    err << "fatal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace thermocap::cli
