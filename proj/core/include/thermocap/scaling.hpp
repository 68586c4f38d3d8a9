#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thermocap/eos.hpp"
#include "thermocap/equilibrium.hpp"

namespace thermocap {

// Temperature-gap sweep. The grid is given in units of zeta, so L / zeta is
// the same for every row.
struct SweepConfig {
  std::vector<double> delta_t_values{1e-1, 1e-2, 1e-3, 1e-4};
  bool use_full_solver = false;
  GridConfig grid;
  NewtonOptions newton;

  // Throws InvalidSweep unless there are >= 4 strictly positive, strictly
  // decreasing values spanning at least two decades; also validates the grid.
  void validate() const;
};

struct ScalingRow {
  double delta_T = 0.0;
  double amp_rho = 0.0;        // max |rho - rho_c|
  double amp_s = 0.0;          // |s| on the dividing surface (y = 0 node)
  double zeta_measured = 0.0;  // quarter of the tanh(+-1) band width
  double sigma_quad = 0.0;
  double v = 0.0;              // celerity on the dividing surface
  // |rho_full - rho_tanh|_inf and the same divided by rho_l - rho_v; NaN in
  // closed-form sweeps.
  double deviation = 0.0;
  double scaled_deviation = 0.0;
  int newton_iterations = 0;
  bool ok = true;
  std::string error;
};

enum class Law { AmpRho, AmpS, Zeta, Sigma, Celerity, Deviation };

std::string_view to_string(Law law);
double target_exponent(Law law);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // max |ln y - (slope ln x + intercept)|
};

struct LawFit {
  Law law = Law::AmpRho;
  double target = 0.0;
  bool full_solver_column = false;
  std::optional<ExponentFit> fit;
  std::string error;  // why the fit is missing
};

struct ScalingReport {
  bool full_solver = false;
  std::vector<ScalingRow> rows;
  std::vector<LawFit> fits;
};

struct ExponentTolerances {
  double closed = 0.02;
  double full = 0.1;
};

struct LawVerdict {
  Law law = Law::AmpRho;
  double target = 0.0;
  double tolerance = 0.0;
  double slope = 0.0;  // NaN when no fit is available
  bool passed = false;
};

struct VerificationSummary {
  std::vector<LawVerdict> verdicts;
  bool all_passed = false;
};

struct LogPoint {
  double x = 0.0;
  double y = 0.0;
};

namespace scaling {

// Ordinary least squares on (ln x, ln y). Needs >= 2 points, all positive,
// with x spanning at least one decade; throws NonPositiveData / DegenerateSpan.
ExponentFit fit_exponent(std::span<const LogPoint> points);

// Width from the central band |rho - rho_c| <= tanh(1) (rho_l - rho_v) / 2,
// located by linear interpolation; equals zeta for the tanh profile.
double measured_width(const FluidParams& p, const Profile& prof);

// One row per temperature gap. Solver failures mark the row and do not abort
// the sweep; fits use the successful rows only, except the closed-form
// celerity column which is filled for every row.
ScalingReport run_sweep(const FluidParams& p, const SweepConfig& cfg);

VerificationSummary verify_exponents(const ScalingReport& report, const ExponentTolerances& tolerances = {});

}  // namespace scaling
}  // namespace thermocap
