#include "cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "thermocap/errors.hpp"
#include "thermocap/stress.hpp"
#include "thermocap/waves.hpp"

namespace thermocap::cli {
namespace {

double max_abs(const std::vector<double>& values) {
  double worst = 0.0;
  for (double v : values) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

CheckResult guarded(const std::string& name, double threshold, const std::function<double()>& measure) {
  CheckResult r{.name = name, .value = 0.0, .threshold = threshold, .passed = false, .detail = {}};
  try {
    r.value = measure();
    r.passed = std::isfinite(r.value) && r.value <= threshold;
  } catch (const std::exception& e) {
    r.value = std::nan("");
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

std::vector<CheckResult> run_checks(const RunConfig& cfg) {
  const FluidParams& p = cfg.params;
  const BulkConditions& bc = cfg.bc;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<CheckResult> results;

  results.push_back(guarded("eos_gradient_fd", 1e-6, [&] {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const double rho = p.rho_c() * (0.9 + 0.2 * i / 9.0);
        const double s = -0.05 + 0.1 * j / 9.0;
        const double h = 1e-5 * std::max({1.0, std::abs(rho), std::abs(s)});
        const EnergyPartials d = eos::bulk_energy_partials(p, ThermoState{rho, s});
        const double fd_rho = (eos::bulk_energy(p, {rho + h, s}) - eos::bulk_energy(p, {rho - h, s})) / (2.0 * h);
        const double fd_s = (eos::bulk_energy(p, {rho, s + h}) - eos::bulk_energy(p, {rho, s - h})) / (2.0 * h);
        worst = std::max({worst, relative(fd_rho, d.d_rho), relative(fd_s, d.d_s)});
      }
    }
    return worst;
  }));

  results.push_back(guarded("slaving_consistency", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const BulkConditions sample = BulkConditions::from_delta_t(p, 0.1 * unit(rng));
      const auto bulk = equilibrium::bulk_states(p, sample);
      const double rho = bulk.vapor.rho + (bulk.liquid.rho - bulk.vapor.rho) * unit(rng);
      const double T = eos::temperature(p, {rho, eos::entropy_slave(p, rho, sample)});
      worst = std::max(worst, std::abs(T - sample.T0()));
    }
    return worst;
  }));

  results.push_back(guarded("coexistence_identity", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const BulkConditions sample = BulkConditions::from_delta_t(p, 0.1 * unit(rng));
      const double rho = p.rho_c() * (0.5 + unit(rng));
      const double mu_full = eos::chemical_potential_full(p, {rho, eos::entropy_slave(p, rho, sample)}, sample);
      worst = std::max(worst, std::abs(mu_full - eos::chemical_potential_cubic(p, rho, sample)));
    }
    return worst;
  }));

  results.push_back(guarded("closed_reduced_residual", 1e-7, [&] {
    return max_abs(equilibrium::reduced_residual(p, bc, equilibrium::closed_profile(p, bc, cfg.grid)));
  }));

  results.push_back(guarded("closed_first_integral_residual", 1e-7, [&] {
    return max_abs(equilibrium::first_integral_residual(p, bc, equilibrium::closed_profile(p, bc, cfg.grid)));
  }));

  results.push_back(guarded("surface_tension_agreement", 1e-6, [&] {
    const double closed = equilibrium::surface_tension_closed(p, bc);
    const double quad = equilibrium::surface_tension_quadrature(p, equilibrium::closed_profile(p, bc, cfg.grid));
    return std::abs(quad - closed) / closed;
  }));

  results.push_back(guarded("full_solver_stress_residual", 1e-7, [&] {
    const FullSolution sol = equilibrium::solve_full_bvp(p, bc, cfg.grid, cfg.newton);
    return equilibrium::equilibrium_stress_residual(p, sol.profile);
  }));

  results.push_back(guarded("jump_determinant_identity", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const WaveLocus locus{.rho = p.rho_c() * (0.5 + unit(rng)),
                            .grad_s_normal = 2.0 * unit(rng) - 1.0,
                            .grad_s_tg_sq = std::pow(10.0, -12.0 + 12.0 * unit(rng))};
      const double v = 2.0 * unit(rng) * waves::celerity_general(p, locus).v;
      const double numeric = waves::jump_determinant(waves::jump_matrix(p, locus, v));
      const double closed = -locus.rho * (p.gradient_determinant() * locus.grad_s_tg_sq -
                                          p.C() * locus.rho * v * v);
      const double scale = locus.rho * (p.gradient_determinant() * locus.grad_s_tg_sq +
                                        p.C() * locus.rho * v * v);
      worst = std::max(worst, std::abs(numeric - closed) / scale);
    }
    return worst;
  }));

  results.push_back(guarded("celerity_root_vs_closed", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const WaveLocus locus{.rho = p.rho_c() * (0.5 + unit(rng)),
                            .grad_s_normal = 2.0 * unit(rng) - 1.0,
                            .grad_s_tg_sq = std::pow(10.0, -12.0 + 12.0 * unit(rng))};
      const double closed = waves::celerity_general(p, locus).v;
      const double root = waves::celerity_by_determinant(p, locus).v;
      worst = std::max(worst, std::abs(root - closed) / closed);
    }
    return worst;
  }));

  results.push_back(guarded("dividing_surface_celerity", 1e-12, [&] {
    const double general = waves::celerity_general(p, waves::dividing_surface_locus(p, bc)).v_squared();
    const double formula = waves::celerity_at_critical_density(p, bc).v_squared();
    return formula > 0.0 ? std::abs(general - formula) / formula : std::abs(general);
  }));

  return results;
}

}  // namespace thermocap::cli
