#include "cli/commands.hpp"

#include <fmt/format.h>

#include <cmath>
#include <filesystem>

#include "cli/checks.hpp"
#include "thermocap/equilibrium.hpp"
#include "thermocap/export.hpp"
#include "thermocap/scaling.hpp"

namespace thermocap::cli {
namespace {

// Fields every JSON artifact carries so a file can be traced back to its run.
JsonValue with_run_info(JsonValue body, const RunConfig& cfg) {
  body.set("seed", cfg.seed);
  body.set("units", cfg.units);
  return body;
}

void write(const RunConfig& cfg, const char* name, std::string_view content) {
  std::filesystem::create_directories(cfg.output_dir);
  io::write_file_atomic(cfg.output_dir / name, content);
}

}  // namespace

int cmd_profile(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out) {
  Profile prof = equilibrium::closed_profile(cfg.params, cfg.bc, cfg.grid);
  std::optional<NewtonReport> report;
  if (opts.full) {
    FullSolution sol = equilibrium::solve_full_bvp(cfg.params, cfg.bc, cfg.grid, cfg.newton);
    prof = std::move(sol.profile);
    report = std::move(sol.report);
  }
  const InterfaceObservables obs = equilibrium::observables(cfg.params, prof);

  if (cfg.writes_csv()) {
    write(cfg, "profile.csv", io::profile_csv(prof));
  }
  if (cfg.writes_json()) {
    JsonValue j = io::observables_json(obs);
    j.set("source", std::string(to_string(prof.source)));
    write(cfg, "observables.json", with_run_info(std::move(j), cfg).dump());
    if (report) {
      write(cfg, "newton.json", with_run_info(io::newton_json(*report), cfg).dump());
    }
  }

  out << fmt::format("profile ({}) n={} zeta={:.10g} rho_l={:.10g} rho_v={:.10g}\n", to_string(prof.source),
                     prof.size(), obs.zeta, obs.rho_l, obs.rho_v);
  out << fmt::format("sigma_closed={:.10g} sigma_quad={:.10g}\n", obs.sigma_closed, obs.sigma_quad);
  if (report) {
    out << fmt::format("newton: converged in {} iterations, residual {:.3e}\n", report->iterations,
                       report->residual_norm);
  }
  return kExitOk;
}

int cmd_celerity(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out) {
  const WaveLocus locus = opts.locus ? *opts.locus : waves::dividing_surface_locus(cfg.params, cfg.bc);
  const CelerityResult closed = waves::celerity_general(cfg.params, locus);

  JsonValue j = JsonValue::object();
  j.set("delta_T", cfg.bc.delta_T());
  j.set("locus_source", opts.locus ? "override" : "dividing-surface");
  j.set("closed_form", io::celerity_json(closed));
  if (!opts.locus) {
    const CelerityResult formula = waves::celerity_at_critical_density(cfg.params, cfg.bc);
    JsonValue f = JsonValue::object();
    f.set("v", formula.v);
    f.set("v_squared", formula.v_squared());
    j.set("critical_density_formula", std::move(f));
  }

  if (locus.grad_s_tg_sq > 0.0) {
    const CelerityResult root = waves::celerity_by_determinant(cfg.params, locus);
    const double rel = std::abs(root.v - closed.v) / closed.v;
    j.set("determinant_root", io::celerity_json(root));
    j.set("relative_difference", rel);
    out << fmt::format("v closed-form = {:.12e}\nv determinant = {:.12e}\nrelative difference = {:.3e}\n",
                       closed.v, root.v, rel);
  } else {
    j.set("determinant_root", JsonValue());
    j.set("relative_difference", 0.0);
    out << "v = 0 (no tangential entropy gradient; root finding skipped)\n";
  }
  write(cfg, "celerity.json", with_run_info(std::move(j), cfg).dump());
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out) {
  SweepConfig sweep = cfg.sweep;
  sweep.use_full_solver = sweep.use_full_solver || opts.full;
  const ScalingReport report = scaling::run_sweep(cfg.params, sweep);
  const VerificationSummary summary = scaling::verify_exponents(report, cfg.tolerances);

  if (cfg.writes_csv()) {
    write(cfg, "sweep.csv", io::sweep_csv(report));
  }
  if (cfg.writes_json()) {
    write(cfg, "scaling.json", with_run_info(io::scaling_json(report, summary), cfg).dump());
  }

  out << fmt::format("{:<10} {:>8} {:>12} {:>10}  {}\n", "law", "target", "slope", "tol", "verdict");
  for (const LawVerdict& v : summary.verdicts) {
    out << fmt::format("{:<10} {:>8.3f} {:>12.6f} {:>10.2e}  {}\n", to_string(v.law), v.target, v.slope,
                       v.tolerance, v.passed ? "pass" : "FAIL");
  }
  for (const ScalingRow& row : report.rows) {
    if (!row.ok) {
      out << fmt::format("row dT={:.3e} failed: {}\n", row.delta_T, row.error);
    }
  }
  return summary.all_passed ? kExitOk : kExitLawFailure;
}

int cmd_check(const RunConfig& cfg, const CommandOptions&, std::ostream& out) {
  const std::vector<CheckResult> results = run_checks(cfg);
  bool all = true;
  JsonValue rows = JsonValue::array();
  out << fmt::format("{:<32} {:>12} {:>10}  {}\n", "check", "value", "threshold", "verdict");
  for (const CheckResult& r : results) {
    all = all && r.passed;
    out << fmt::format("{:<32} {:>12.3e} {:>10.1e}  {}{}\n", r.name, r.value, r.threshold,
                       r.passed ? "pass" : "FAIL", r.detail.empty() ? "" : "  (" + r.detail + ")");
    JsonValue o = JsonValue::object();
    o.set("name", r.name);
    o.set("value", r.value);
    o.set("threshold", r.threshold);
    o.set("passed", r.passed);
    if (!r.detail.empty()) {
      o.set("detail", r.detail);
    }
    rows.push(std::move(o));
  }
  JsonValue j = JsonValue::object();
  j.set("checks", std::move(rows));
  j.set("all_passed", all);
  write(cfg, "check.json", with_run_info(std::move(j), cfg).dump());
  return all ? kExitOk : kExitLawFailure;
}

}  // namespace thermocap::cli
