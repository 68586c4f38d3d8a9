#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "thermocap/equilibrium.hpp"

namespace thermocap::equilibrium {
namespace {

double inf_norm(const std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) {
      return std::numeric_limits<double>::infinity();
    }
    norm = std::max(norm, std::abs(x));
  }
  return norm;
}

// Stacked residual [F1(1), F2(1), ..., F1(n-2), F2(n-2)] of the second-order
// discretisation; end values act as Dirichlet data.
std::vector<double> stacked_residual(const FluidParams& p, const BulkConditions& bc, double h,
                                     std::span<const double> rho, std::span<const double> s) {
  const std::size_t n = rho.size();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> r(2 * (n - 2));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d2rho = (rho[i - 1] - 2.0 * rho[i] + rho[i + 1]) * inv_h2;
    const double d2s = (s[i - 1] - 2.0 * s[i] + s[i + 1]) * inv_h2;
    const EnergyPartials d = eos::bulk_energy_partials(p, ThermoState{rho[i], s[i]});
    const std::size_t k = 2 * (i - 1);
    r[k] = p.C() * d2rho + p.D() * d2s - (d.d_rho - s[i] * bc.T0() - bc.mu1());
    r[k + 1] = p.D() * d2rho + p.E() * d2s - (d.d_s - rho[i] * bc.T0());
  }
  return r;
}

Eigen::SparseMatrix<double> jacobian(const FluidParams& p, const BulkConditions& bc, double h,
                                     std::span<const double> rho, std::span<const double> s) {
  const std::size_t n = rho.size();
  const auto unknowns = static_cast<Eigen::Index>(2 * (n - 2));
  const double inv_h2 = 1.0 / (h * h);
  const double C = p.C() * inv_h2;
  const double D = p.D() * inv_h2;
  const double E = p.E() * inv_h2;

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(12 * (n - 2));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const EnergyHessian hess = eos::bulk_energy_hessian(p, ThermoState{rho[i], s[i]});
    const auto r = static_cast<Eigen::Index>(2 * (i - 1));
    const double coupling = hess.rho_s - bc.T0();
    entries.emplace_back(r, r, -2.0 * C - hess.rho_rho);
    entries.emplace_back(r, r + 1, -2.0 * D - coupling);
    entries.emplace_back(r + 1, r, -2.0 * D - coupling);
    entries.emplace_back(r + 1, r + 1, -2.0 * E - hess.s_s);
    if (i > 1) {
      entries.emplace_back(r, r - 2, C);
      entries.emplace_back(r, r - 1, D);
      entries.emplace_back(r + 1, r - 2, D);
      entries.emplace_back(r + 1, r - 1, E);
    }
    if (i + 2 < n) {
      entries.emplace_back(r, r + 2, C);
      entries.emplace_back(r, r + 3, D);
      entries.emplace_back(r + 1, r + 2, D);
      entries.emplace_back(r + 1, r + 3, E);
    }
  }
  Eigen::SparseMatrix<double> J(unknowns, unknowns);
  J.setFromTriplets(entries.begin(), entries.end());
  J.makeCompressed();
  return J;
}

}  // namespace

std::vector<double> full_residual(const FluidParams& p, const BulkConditions& bc, const Profile& prof) {
  if (prof.size() < 3 || prof.rho.size() != prof.size() || prof.s.size() != prof.size()) {
    throw Error(ErrorKind::InvalidProfile, "profile arrays must share a length >= 3");
  }
  return stacked_residual(p, bc, prof.spacing(), prof.rho, prof.s);
}

FullSolution solve_full_bvp(const FluidParams& p, const BulkConditions& bc, const GridConfig& grid,
                            const NewtonOptions& options) {
  Profile prof = closed_profile(p, bc, grid);
  prof.source = ProfileSource::FullSolver;
  const BulkStates bulk = bulk_states(p, bc);
  prof.rho.front() = bulk.vapor.rho;
  prof.s.front() = bulk.vapor.s;
  prof.rho.back() = bulk.liquid.rho;
  prof.s.back() = bulk.liquid.s;

  const double h = prof.spacing();
  const std::size_t n = prof.size();

  NewtonReport report;
  report.tolerance = options.tolerance;

  std::vector<double> residual = stacked_residual(p, bc, h, prof.rho, prof.s);
  double norm = inf_norm(residual);

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  bool pattern_ready = false;

  std::vector<double> trial_rho(n);
  std::vector<double> trial_s(n);

  for (;;) {
    report.residual_history.push_back(norm);
    report.residual_norm = norm;
    if (norm <= options.tolerance) {
      report.converged = true;
      break;
    }
    if (report.iterations >= options.max_iterations) {
      throw SolverError(ErrorKind::MaxIterations,
                        "no convergence after " + std::to_string(report.iterations) + " iterations",
                        report);
    }

    const Eigen::SparseMatrix<double> J = jacobian(p, bc, h, prof.rho, prof.s);
    if (!pattern_ready) {
      lu.analyzePattern(J);
      pattern_ready = true;
    }
    lu.factorize(J);
    if (lu.info() != Eigen::Success) {
      throw SolverError(ErrorKind::NewtonDiverged, "singular Jacobian", report);
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(residual.data(), static_cast<Eigen::Index>(residual.size()));
    const Eigen::VectorXd step = lu.solve(-rhs);
    if (lu.info() != Eigen::Success || !step.allFinite()) {
      throw SolverError(ErrorKind::NewtonDiverged, "linear solve failed", report);
    }

    double length = 1.0;
    bool accepted = false;
    for (int cut = 0; cut <= options.max_damping_cuts; ++cut) {
      trial_rho = prof.rho;
      trial_s = prof.s;
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto k = static_cast<Eigen::Index>(2 * (i - 1));
        trial_rho[i] += length * step[k];
        trial_s[i] += length * step[k + 1];
      }
      std::vector<double> trial_residual = stacked_residual(p, bc, h, trial_rho, trial_s);
      const double trial_norm = inf_norm(trial_residual);
      if (trial_norm < norm) {
        prof.rho.swap(trial_rho);
        prof.s.swap(trial_s);
        residual.swap(trial_residual);
        norm = trial_norm;
        accepted = true;
        break;
      }
      length *= 0.5;
    }
    if (!accepted) {
      throw SolverError(ErrorKind::NewtonDiverged,
                        "residual grew after " + std::to_string(options.max_damping_cuts) +
                            " damping cuts",
                        report);
    }
    report.damping_history.push_back(length);
    ++report.iterations;
  }

  return FullSolution{.profile = std::move(prof), .report = std::move(report)};
}

}  // namespace thermocap::equilibrium
