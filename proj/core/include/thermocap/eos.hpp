#pragma once

#include <optional>

#include "thermocap/errors.hpp"

namespace thermocap {

// Unvalidated candidate for the fluid constants; turn it into FluidParams with
// validate_params().
struct FluidConstants {
  double A = 0.0;      // entropy coupling of the critical expansion
  double B = 0.0;      // quartic stiffness
  double rho_c = 0.0;  // critical matter density
  double T_c = 0.0;    // critical temperature
  double mu_c = 0.0;   // critical chemical potential
  double p_c = 0.0;    // critical pressure
  double C = 0.0;      // density-gradient coefficient
  double D = 0.0;      // cross-gradient coefficient
  double E = 0.0;      // entropy-gradient coefficient
};

// Reduced-unit reference fluid: A = B = rho_c = T_c = C = E = 1, D = 0.2,
// mu_c = p_c = 0.
FluidConstants reference_constants();

// Critical-point constants with A, B, rho_c, T_c > 0, C > 0 and CE - D^2 > 0.
// Only constructible through validate_params().
class FluidParams {
 public:
  double A() const noexcept { return c_.A; }
  double B() const noexcept { return c_.B; }
  double rho_c() const noexcept { return c_.rho_c; }
  double T_c() const noexcept { return c_.T_c; }
  double mu_c() const noexcept { return c_.mu_c; }
  double p_c() const noexcept { return c_.p_c; }
  double C() const noexcept { return c_.C; }
  double D() const noexcept { return c_.D; }
  double E() const noexcept { return c_.E; }

  // CE - D^2, strictly positive.
  double gradient_determinant() const noexcept { return c_.C * c_.E - c_.D * c_.D; }

  const FluidConstants& constants() const noexcept { return c_; }

 private:
  friend FluidParams validate_params(const FluidConstants& raw);
  explicit FluidParams(const FluidConstants& c) : c_(c) {}

  FluidConstants c_;
};

// Throws ParameterError (NonPositiveConstant naming the field, or
// IndefiniteGradientForm when C <= 0 or CE - D^2 <= 0).
FluidParams validate_params(const FluidConstants& raw);

// Local state: matter density and specific entropy (s = 0 at the critical point).
struct ThermoState {
  double rho = 0.0;
  double s = 0.0;
};

// Bulk temperature T0 <= T_c shared by both phases, and the bulk chemical
// potential mu1 (equal to mu_c unless overridden).
class BulkConditions {
 public:
  // Throws NegativeTemperatureGap when T0 > T_c.
  static BulkConditions at_temperature(const FluidParams& p, double T0);
  static BulkConditions from_delta_t(const FluidParams& p, double delta_T);

  // Copy with a different bulk chemical potential. Profiles solved with
  // mu1 != mu_c are not guaranteed to connect two bulk phases.
  BulkConditions with_chemical_potential(double mu1) const;

  double T0() const noexcept { return T0_; }
  double mu1() const noexcept { return mu1_; }
  // T_c - T0, never negative.
  double delta_T() const noexcept { return delta_T_; }

 private:
  BulkConditions(double T0, double mu1, double delta_T) : T0_(T0), mu1_(mu1), delta_T_(delta_T) {}

  double T0_;
  double mu1_;
  double delta_T_;
};

struct EnergyPartials {
  double d_rho = 0.0;  // d(rho alpha)/d rho at fixed s
  double d_s = 0.0;    // d(rho alpha)/d s at fixed rho
};

struct EnergyHessian {
  double rho_rho = 0.0;
  double rho_s = 0.0;
  double s_s = 0.0;
};

namespace eos {

// Volumetric bulk energy rho*alpha(rho, s) of the critical expansion
//   (B / 2A^2) [ (A (rho - rho_c)^2 + rho s)^2 + (rho s)^2 ] + mu_c rho + T_c rho s - p_c.
double bulk_energy(const FluidParams& p, const ThermoState& st);

EnergyPartials bulk_energy_partials(const FluidParams& p, const ThermoState& st);

// Second derivatives of bulk_energy in (rho, s); used for Newton Jacobians.
EnergyHessian bulk_energy_hessian(const FluidParams& p, const ThermoState& st);

// Kelvin temperature (1/rho) d(rho alpha)/ds.
double temperature(const FluidParams& p, const ThermoState& st);

// Specific enthalpy h0 = d(rho alpha)/d rho.
double enthalpy(const FluidParams& p, const ThermoState& st);

// Bulk pressure rho h0 - rho alpha.
double pressure(const FluidParams& p, const ThermoState& st);

// mu0 = h0 - s T0.
double chemical_potential_full(const FluidParams& p, const ThermoState& st, const BulkConditions& bc);

// mu_c + B (rho - rho_c)^3 - A (T_c - T0)(rho - rho_c): mu0 restricted to the
// manifold T = T0.
double chemical_potential_cubic(const FluidParams& p, double rho, const BulkConditions& bc);

// Specific entropy that puts (rho, s) on the isotherm T = T0:
//   2 rho s = (A^2 / B)(T0 - T_c) - A (rho - rho_c)^2.
double entropy_slave(const FluidParams& p, double rho, const BulkConditions& bc);

}  // namespace eos
}  // namespace thermocap
