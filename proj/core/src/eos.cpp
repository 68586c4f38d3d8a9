#include "thermocap/eos.hpp"

#include <cmath>
#include <string>

#include "thermocap/errors.hpp"

namespace thermocap {

FluidConstants reference_constants() {
  return FluidConstants{.A = 1.0, .B = 1.0, .rho_c = 1.0, .T_c = 1.0, .mu_c = 0.0,
                        .p_c = 0.0, .C = 1.0, .D = 0.2, .E = 1.0};
}

namespace {

void require_positive(double value, const char* field) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ParameterError(ErrorKind::NonPositiveConstant, field,
                         std::string(field) + " must be finite and > 0");
  }
}

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw ParameterError(ErrorKind::NonPositiveConstant, field,
                         std::string(field) + " must be finite");
  }
}

}  // namespace

FluidParams validate_params(const FluidConstants& raw) {
  require_positive(raw.A, "A");
  require_positive(raw.B, "B");
  require_positive(raw.rho_c, "rho_c");
  require_positive(raw.T_c, "T_c");
  require_finite(raw.mu_c, "mu_c");
  require_finite(raw.p_c, "p_c");
  require_finite(raw.C, "C");
  require_finite(raw.D, "D");
  require_finite(raw.E, "E");
  if (raw.C <= 0.0) {
    throw ParameterError(ErrorKind::IndefiniteGradientForm, "C", "C must be > 0");
  }
  if (raw.C * raw.E - raw.D * raw.D <= 0.0) {
    throw ParameterError(ErrorKind::IndefiniteGradientForm, "D",
                         "gradient form requires C*E - D^2 > 0");
  }
  return FluidParams(raw);
}

BulkConditions BulkConditions::at_temperature(const FluidParams& p, double T0) {
  if (!std::isfinite(T0)) {
    throw Error(ErrorKind::NegativeTemperatureGap, "T0 must be finite");
  }
  const double gap = p.T_c() - T0;
  if (gap < 0.0) {
    throw Error(ErrorKind::NegativeTemperatureGap, "T0 above the critical temperature");
  }
  return BulkConditions(T0, p.mu_c(), gap);
}

BulkConditions BulkConditions::from_delta_t(const FluidParams& p, double delta_T) {
  if (!std::isfinite(delta_T) || delta_T < 0.0) {
    throw Error(ErrorKind::NegativeTemperatureGap, "T_c - T0 must be >= 0");
  }
  return BulkConditions(p.T_c() - delta_T, p.mu_c(), delta_T);
}

BulkConditions BulkConditions::with_chemical_potential(double mu1) const {
  return BulkConditions(T0_, mu1, delta_T_);
}

namespace eos {

double bulk_energy(const FluidParams& p, const ThermoState& st) {
  const double m = st.rho - p.rho_c();
  const double eta = st.rho * st.s;
  const double a = p.A() * m * m + eta;
  return p.B() / (2.0 * p.A() * p.A()) * (a * a + eta * eta) + p.mu_c() * st.rho +
         p.T_c() * eta - p.p_c();
}

EnergyPartials bulk_energy_partials(const FluidParams& p, const ThermoState& st) {
  const double A = p.A();
  const double B = p.B();
  const double m = st.rho - p.rho_c();
  const double rho = st.rho;
  const double s = st.s;
  EnergyPartials d;
  d.d_rho = 2.0 * B * m * m * m + (B / A) * m * m * s + 2.0 * (B / A) * rho * s * m +
            2.0 * (B / (A * A)) * rho * s * s + p.mu_c() + p.T_c() * s;
  d.d_s = (B / A) * rho * m * m + 2.0 * (B / (A * A)) * rho * rho * s + p.T_c() * rho;
  return d;
}

EnergyHessian bulk_energy_hessian(const FluidParams& p, const ThermoState& st) {
  const double A = p.A();
  const double B = p.B();
  const double m = st.rho - p.rho_c();
  const double rho = st.rho;
  const double s = st.s;
  EnergyHessian h;
  h.rho_rho = 6.0 * B * m * m + 4.0 * (B / A) * m * s + 2.0 * (B / A) * rho * s +
              2.0 * (B / (A * A)) * s * s;
  h.rho_s = (B / A) * m * m + 2.0 * (B / A) * rho * m + 4.0 * (B / (A * A)) * rho * s + p.T_c();
  h.s_s = 2.0 * (B / (A * A)) * rho * rho;
  return h;
}

double temperature(const FluidParams& p, const ThermoState& st) {
  const double m = st.rho - p.rho_c();
  return p.B() / (p.A() * p.A()) * (p.A() * m * m + 2.0 * st.rho * st.s) + p.T_c();
}

double enthalpy(const FluidParams& p, const ThermoState& st) {
  return bulk_energy_partials(p, st).d_rho;
}

double pressure(const FluidParams& p, const ThermoState& st) {
  return st.rho * enthalpy(p, st) - bulk_energy(p, st);
}

double chemical_potential_full(const FluidParams& p, const ThermoState& st, const BulkConditions& bc) {
  return enthalpy(p, st) - st.s * bc.T0();
}

double chemical_potential_cubic(const FluidParams& p, double rho, const BulkConditions& bc) {
  const double m = rho - p.rho_c();
  return p.mu_c() + p.B() * m * m * m - p.A() * bc.delta_T() * m;
}

double entropy_slave(const FluidParams& p, double rho, const BulkConditions& bc) {
  const double m = rho - p.rho_c();
  return (-(p.A() * p.A() / p.B()) * bc.delta_T() - p.A() * m * m) / (2.0 * rho);
}

}  // namespace eos
}  // namespace thermocap
