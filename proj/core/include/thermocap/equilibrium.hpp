#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thermocap/eos.hpp"
#include "thermocap/errors.hpp"

namespace thermocap {

// Uniform grid on [-L, L] with L = half_width_in_zeta * zeta. n_points must be
// odd so that a node sits on y = 0.
struct GridConfig {
  double half_width_in_zeta = 15.0;
  int n_points = 1001;

  // Throws InvalidGrid unless n_points >= 51, n_points odd and
  // half_width_in_zeta >= 8.
  void validate() const;
};

enum class ProfileSource { ClosedForm, FullSolver, External };

std::string_view to_string(ProfileSource source);

// Planar equilibrium profile sampled on a uniform grid.
struct Profile {
  std::vector<double> y;
  std::vector<double> rho;
  std::vector<double> s;
  BulkConditions bc;
  ProfileSource source = ProfileSource::External;

  std::size_t size() const noexcept { return y.size(); }
  double spacing() const { return y.at(1) - y.at(0); }
  // Index of the y = 0 node.
  std::size_t mid() const noexcept { return y.size() / 2; }
};

struct BulkStates {
  ThermoState liquid;
  ThermoState vapor;
};

struct InterfaceObservables {
  double zeta = 0.0;
  double rho_l = 0.0;
  double rho_v = 0.0;
  double sigma_closed = 0.0;
  double sigma_quad = 0.0;
  double f0 = 0.0;
  double delta_T = 0.0;
};

struct NewtonOptions {
  double tolerance = 1e-10;  // residual infinity-norm
  int max_iterations = 50;
  int max_damping_cuts = 20;
};

struct NewtonReport {
  int iterations = 0;
  double residual_norm = 0.0;
  double tolerance = 0.0;
  bool converged = false;
  std::vector<double> residual_history;  // norm before each step, then the final norm
  std::vector<double> damping_history;   // accepted step length per iteration
};

// Solver failure carrying the Newton trace up to the point of failure.
class SolverError : public Error {
 public:
  SolverError(ErrorKind kind, const std::string& message, NewtonReport report)
      : Error(kind, message), report_(std::move(report)) {}

  const NewtonReport& report() const noexcept { return report_; }

 private:
  NewtonReport report_;
};

struct FullSolution {
  Profile profile;
  NewtonReport report;
};

namespace equilibrium {

// Liquid and vapour states rho_c +/- sqrt(A dT / B) with slaved entropies.
// At dT = 0 both collapse onto (rho_c, 0).
BulkStates bulk_states(const FluidParams& p, const BulkConditions& bc);

// zeta = sqrt(C / (2 A dT)); throws CriticalIsotherm at dT = 0.
double interface_width(const FluidParams& p, const BulkConditions& bc);

// f0 = A^2 dT^2 / (4B).
double first_integral_constant(const FluidParams& p, const BulkConditions& bc);

// rho(y) = rho_c + (rho_l - rho_v)/2 tanh(y / 2 zeta) with entropy slaved to
// T = T0 at every node.
Profile closed_profile(const FluidParams& p, const BulkConditions& bc, const GridConfig& grid);

// sigma = sqrt(C)/(3B) (2 A dT)^{3/2}.
double surface_tension_closed(const FluidParams& p, const BulkConditions& bc);

// Simpson quadrature of C rho'^2 with fourth-order differences. Throws
// UndecayedTail when the profile ends are not within 1e-6 (rho_l - rho_v) of
// the bulk densities.
double surface_tension_quadrature(const FluidParams& p, const Profile& prof);

// C rho'' - [B m^3 - A dT m + mu_c - mu1] at nodes 1..n-2 (size n-2).
std::vector<double> reduced_residual(const FluidParams& p, const BulkConditions& bc, const Profile& prof);

// C rho'^2 / 2 - [sqrt(B)/2 m^2 - A/(2 sqrt(B)) dT]^2 at nodes 1..n-2 (size n-2).
std::vector<double> first_integral_residual(const FluidParams& p, const BulkConditions& bc,
                                            const Profile& prof);

InterfaceObservables observables(const FluidParams& p, const Profile& prof);

// Throws InvalidProfile on ragged arrays, non-uniform grids or densities
// outside [rho_v - d, rho_l + d] with d = 1e-6 (rho_l - rho_v).
void validate_profile(const FluidParams& p, const Profile& prof);

// Damped Newton on the coupled two-field system
//   C rho'' + D s'' = d(rho alpha)/d rho - s T0 - mu1
//   D rho'' + E s'' = d(rho alpha)/d s - rho T0
// with second-order differences, Dirichlet bulk states at +/-L and the closed
// profile as the initial guess.
FullSolution solve_full_bvp(const FluidParams& p, const BulkConditions& bc, const GridConfig& grid,
                            const NewtonOptions& options = {});

// Residual of the discrete two-field system at the interior nodes, stacked as
// [F1(1), F2(1), F1(2), ...]; exposed for diagnostics and tests.
std::vector<double> full_residual(const FluidParams& p, const BulkConditions& bc, const Profile& prof);

}  // namespace equilibrium
}  // namespace thermocap
