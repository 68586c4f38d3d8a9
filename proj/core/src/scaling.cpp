#include "thermocap/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermocap/waves.hpp"

namespace thermocap {

void SweepConfig::validate() const {
  if (delta_t_values.size() < 4) {
    throw Error(ErrorKind::InvalidSweep, "sweep needs at least 4 temperature gaps");
  }
  for (std::size_t i = 0; i < delta_t_values.size(); ++i) {
    const double dT = delta_t_values[i];
    if (!std::isfinite(dT) || dT <= 0.0) {
      throw Error(ErrorKind::InvalidSweep, "temperature gaps must be > 0");
    }
    if (i > 0 && !(dT < delta_t_values[i - 1])) {
      throw Error(ErrorKind::InvalidSweep, "temperature gaps must be strictly decreasing");
    }
  }
  if (std::log10(delta_t_values.front() / delta_t_values.back()) < 2.0 - 1e-12) {
    throw Error(ErrorKind::InvalidSweep, "temperature gaps must span at least two decades");
  }
  grid.validate();
}

std::string_view to_string(Law law) {
  switch (law) {
    case Law::AmpRho: return "amp_rho";
    case Law::AmpS: return "amp_s";
    case Law::Zeta: return "zeta";
    case Law::Sigma: return "sigma";
    case Law::Celerity: return "v";
    case Law::Deviation: return "deviation";
  }
  return "unknown";
}

double target_exponent(Law law) {
  switch (law) {
    case Law::AmpRho: return 0.5;
    case Law::AmpS: return 1.0;
    case Law::Zeta: return -0.5;
    case Law::Sigma: return 1.5;
    case Law::Celerity: return 2.0;
    case Law::Deviation: return 1.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

namespace scaling {

ExponentFit fit_exponent(std::span<const LogPoint> points) {
  if (points.size() < 2) {
    throw Error(ErrorKind::DegenerateSpan, "a power-law fit needs at least two points");
  }
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = 0.0;
  for (const LogPoint& pt : points) {
    if (!(pt.x > 0.0) || !(pt.y > 0.0) || !std::isfinite(pt.x) || !std::isfinite(pt.y)) {
      throw Error(ErrorKind::NonPositiveData, "log-log fit needs positive finite data");
    }
    x_min = std::min(x_min, pt.x);
    x_max = std::max(x_max, pt.x);
  }
  if (std::log10(x_max / x_min) < 1.0 - 1e-12) {
    throw Error(ErrorKind::DegenerateSpan, "abscissae span less than one decade");
  }

  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const LogPoint& pt : points) {
    mean_x += std::log(pt.x);
    mean_y += std::log(pt.y);
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const LogPoint& pt : points) {
    const double dx = std::log(pt.x) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(pt.y) - mean_y);
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (const LogPoint& pt : points) {
    const double predicted = fit.slope * std::log(pt.x) + fit.intercept;
    fit.max_residual = std::max(fit.max_residual, std::abs(std::log(pt.y) - predicted));
  }
  return fit;
}

double measured_width(const FluidParams& p, const Profile& prof) {
  const BulkStates bulk = equilibrium::bulk_states(p, prof.bc);
  const double band = std::tanh(1.0) * 0.5 * (bulk.liquid.rho - bulk.vapor.rho);

  // y where rho - rho_c first reaches `level` going left to right.
  const auto crossing = [&](double level) {
    for (std::size_t i = 1; i < prof.size(); ++i) {
      const double a = prof.rho[i - 1] - p.rho_c() - level;
      const double b = prof.rho[i] - p.rho_c() - level;
      if (a <= 0.0 && b >= 0.0 && b > a) {
        return prof.y[i - 1] + (prof.y[i] - prof.y[i - 1]) * (-a) / (b - a);
      }
    }
    throw Error(ErrorKind::InvalidProfile, "profile never crosses the central band edge");
  };
  return 0.25 * (crossing(band) - crossing(-band));
}

namespace {

ScalingRow measure_row(const FluidParams& p, const SweepConfig& cfg, double dT) {
  ScalingRow row;
  row.delta_T = dT;
  const BulkConditions bc = BulkConditions::from_delta_t(p, dT);
  const Profile closed = equilibrium::closed_profile(p, bc, cfg.grid);

  Profile measured = closed;
  if (cfg.use_full_solver) {
    FullSolution solution = equilibrium::solve_full_bvp(p, bc, cfg.grid, cfg.newton);
    row.newton_iterations = solution.report.iterations;
    measured = std::move(solution.profile);
    double dev = 0.0;
    for (std::size_t i = 0; i < measured.size(); ++i) {
      dev = std::max(dev, std::abs(measured.rho[i] - closed.rho[i]));
    }
    const BulkStates bulk = equilibrium::bulk_states(p, bc);
    row.deviation = dev;
    row.scaled_deviation = dev / (bulk.liquid.rho - bulk.vapor.rho);
  } else {
    row.deviation = std::numeric_limits<double>::quiet_NaN();
    row.scaled_deviation = std::numeric_limits<double>::quiet_NaN();
  }

  for (double rho : measured.rho) {
    row.amp_rho = std::max(row.amp_rho, std::abs(rho - p.rho_c()));
  }
  row.amp_s = std::abs(measured.s[measured.mid()]);
  row.zeta_measured = measured_width(p, measured);
  row.sigma_quad = equilibrium::surface_tension_quadrature(p, measured);
  row.v = waves::celerity_at_critical_density(p, bc).v;
  return row;
}

double column(const ScalingRow& row, Law law) {
  switch (law) {
    case Law::AmpRho: return row.amp_rho;
    case Law::AmpS: return row.amp_s;
    case Law::Zeta: return row.zeta_measured;
    case Law::Sigma: return row.sigma_quad;
    case Law::Celerity: return row.v;
    case Law::Deviation: return row.deviation;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

ScalingReport run_sweep(const FluidParams& p, const SweepConfig& cfg) {
  cfg.validate();
  ScalingReport report;
  report.full_solver = cfg.use_full_solver;
  report.rows.reserve(cfg.delta_t_values.size());
  for (double dT : cfg.delta_t_values) {
    try {
      report.rows.push_back(measure_row(p, cfg, dT));
    } catch (const Error& e) {
      ScalingRow failed;
      failed.delta_T = dT;
      failed.ok = false;
      failed.error = e.what();
      const double nan = std::numeric_limits<double>::quiet_NaN();
      failed.amp_rho = failed.amp_s = failed.zeta_measured = nan;
      failed.sigma_quad = failed.deviation = failed.scaled_deviation = nan;
      // The celerity column is closed-form and survives a failed profile.
      failed.v = waves::celerity_at_critical_density(p, BulkConditions::from_delta_t(p, dT)).v;
      report.rows.push_back(std::move(failed));
    }
  }

  std::vector<Law> laws{Law::AmpRho, Law::AmpS, Law::Zeta, Law::Sigma, Law::Celerity};
  if (cfg.use_full_solver) {
    laws.push_back(Law::Deviation);
  }
  for (Law law : laws) {
    LawFit entry;
    entry.law = law;
    entry.target = target_exponent(law);
    entry.full_solver_column = cfg.use_full_solver && law != Law::Celerity;
    std::vector<LogPoint> points;
    for (const ScalingRow& row : report.rows) {
      if (row.ok || (law == Law::Celerity && std::isfinite(row.v))) {
        points.push_back(LogPoint{row.delta_T, column(row, law)});
      }
    }
    try {
      entry.fit = fit_exponent(points);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    report.fits.push_back(std::move(entry));
  }
  return report;
}

VerificationSummary verify_exponents(const ScalingReport& report, const ExponentTolerances& tolerances) {
  VerificationSummary summary;
  summary.all_passed = !report.fits.empty();
  for (const LawFit& entry : report.fits) {
    LawVerdict verdict;
    verdict.law = entry.law;
    verdict.target = entry.target;
    verdict.tolerance = entry.full_solver_column ? tolerances.full : tolerances.closed;
    if (entry.fit) {
      verdict.slope = entry.fit->slope;
      verdict.passed = std::abs(entry.fit->slope - entry.target) <= verdict.tolerance;
    } else {
      verdict.slope = std::numeric_limits<double>::quiet_NaN();
      verdict.passed = false;
    }
    summary.all_passed = summary.all_passed && verdict.passed;
    summary.verdicts.push_back(verdict);
  }
  return summary;
}

}  // namespace scaling
}  // namespace thermocap
