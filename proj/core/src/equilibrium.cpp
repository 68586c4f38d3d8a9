#include "thermocap/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "finite_difference.hpp"

namespace thermocap {

void GridConfig::validate() const {
  if (n_points < 51 || n_points % 2 == 0) {
    throw Error(ErrorKind::InvalidGrid,
                "n_points must be odd and >= 51, got " + std::to_string(n_points));
  }
  if (!std::isfinite(half_width_in_zeta) || half_width_in_zeta < 8.0) {
    throw Error(ErrorKind::InvalidGrid, "half_width_in_zeta must be >= 8");
  }
}

std::string_view to_string(ProfileSource source) {
  switch (source) {
    case ProfileSource::ClosedForm: return "closed-form";
    case ProfileSource::FullSolver: return "full-solver";
    case ProfileSource::External: return "external";
  }
  return "unknown";
}

namespace equilibrium {

BulkStates bulk_states(const FluidParams& p, const BulkConditions& bc) {
  const double jump = std::sqrt(p.A() * bc.delta_T() / p.B());
  const double rho_l = p.rho_c() + jump;
  const double rho_v = p.rho_c() - jump;
  return BulkStates{
      .liquid = ThermoState{rho_l, eos::entropy_slave(p, rho_l, bc)},
      .vapor = ThermoState{rho_v, eos::entropy_slave(p, rho_v, bc)},
  };
}

double interface_width(const FluidParams& p, const BulkConditions& bc) {
  if (bc.delta_T() <= 0.0) {
    throw Error(ErrorKind::CriticalIsotherm, "interface width diverges at T0 = T_c");
  }
  return std::sqrt(p.C() / (2.0 * p.A() * bc.delta_T()));
}

double first_integral_constant(const FluidParams& p, const BulkConditions& bc) {
  const double dT = bc.delta_T();
  return p.A() * p.A() * dT * dT / (4.0 * p.B());
}

Profile closed_profile(const FluidParams& p, const BulkConditions& bc, const GridConfig& grid) {
  grid.validate();
  const double zeta = interface_width(p, bc);
  const BulkStates bulk = bulk_states(p, bc);
  const double half_jump = 0.5 * (bulk.liquid.rho - bulk.vapor.rho);

  const auto n = static_cast<std::size_t>(grid.n_points);
  const std::size_t mid = n / 2;
  const double h = 2.0 * grid.half_width_in_zeta * zeta / static_cast<double>(n - 1);

  Profile prof{.y = std::vector<double>(n),
               .rho = std::vector<double>(n),
               .s = std::vector<double>(n),
               .bc = bc,
               .source = ProfileSource::ClosedForm};
  for (std::size_t i = 0; i < n; ++i) {
    const double y = (static_cast<double>(i) - static_cast<double>(mid)) * h;
    prof.y[i] = y;
    prof.rho[i] = p.rho_c() + half_jump * std::tanh(y / (2.0 * zeta));
    prof.s[i] = eos::entropy_slave(p, prof.rho[i], bc);
  }
  return prof;
}

double surface_tension_closed(const FluidParams& p, const BulkConditions& bc) {
  return std::sqrt(p.C()) / (3.0 * p.B()) * std::pow(2.0 * p.A() * bc.delta_T(), 1.5);
}

void validate_profile(const FluidParams& p, const Profile& prof) {
  const std::size_t n = prof.y.size();
  if (n < 5 || prof.rho.size() != n || prof.s.size() != n) {
    throw Error(ErrorKind::InvalidProfile, "profile arrays must share a length >= 5");
  }
  const double h = prof.y[1] - prof.y[0];
  if (!(h > 0.0)) {
    throw Error(ErrorKind::InvalidProfile, "grid must be strictly increasing");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((prof.y[i] - prof.y[i - 1]) - h) > 1e-9 * h) {
      throw Error(ErrorKind::InvalidProfile, "grid spacing is not uniform");
    }
  }
  const BulkStates bulk = bulk_states(p, prof.bc);
  const double slack = 1e-6 * (bulk.liquid.rho - bulk.vapor.rho);
  const auto [lo, hi] = std::minmax_element(prof.rho.begin(), prof.rho.end());
  if (*lo < bulk.vapor.rho - slack || *hi > bulk.liquid.rho + slack) {
    throw Error(ErrorKind::InvalidProfile, "density leaves the coexistence range");
  }
}

double surface_tension_quadrature(const FluidParams& p, const Profile& prof) {
  const std::size_t n = prof.size();
  if (n < 5 || n % 2 == 0 || prof.rho.size() != n) {
    throw Error(ErrorKind::InvalidProfile, "quadrature needs an odd number of nodes >= 5");
  }
  const BulkStates bulk = bulk_states(p, prof.bc);
  const double allowed = 1e-6 * (bulk.liquid.rho - bulk.vapor.rho);
  if (std::abs(prof.rho.front() - bulk.vapor.rho) > allowed ||
      std::abs(prof.rho.back() - bulk.liquid.rho) > allowed) {
    throw Error(ErrorKind::UndecayedTail, "profile ends have not reached the bulk densities");
  }
  const double h = prof.spacing();
  std::vector<double> integrand = detail::first_derivative(prof.rho, h);
  for (double& d : integrand) {
    d = p.C() * d * d;
  }
  return detail::simpson(integrand, h);
}

std::vector<double> reduced_residual(const FluidParams& p, const BulkConditions& bc, const Profile& prof) {
  const std::size_t n = prof.size();
  const std::vector<double> d2 = detail::second_derivative(prof.rho, prof.spacing());
  std::vector<double> r(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double m = prof.rho[i] - p.rho_c();
    const double rhs = p.B() * m * m * m - p.A() * bc.delta_T() * m + p.mu_c() - bc.mu1();
    r[i - 1] = p.C() * d2[i] - rhs;
  }
  return r;
}

std::vector<double> first_integral_residual(const FluidParams& p, const BulkConditions& bc,
                                            const Profile& prof) {
  const std::size_t n = prof.size();
  const std::vector<double> d1 = detail::first_derivative(prof.rho, prof.spacing());
  const double sqrt_b = std::sqrt(p.B());
  std::vector<double> r(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double m = prof.rho[i] - p.rho_c();
    const double root = 0.5 * sqrt_b * m * m - p.A() / (2.0 * sqrt_b) * bc.delta_T();
    r[i - 1] = 0.5 * p.C() * d1[i] * d1[i] - root * root;
  }
  return r;
}

InterfaceObservables observables(const FluidParams& p, const Profile& prof) {
  const BulkStates bulk = bulk_states(p, prof.bc);
  InterfaceObservables obs;
  obs.zeta = interface_width(p, prof.bc);
  obs.rho_l = bulk.liquid.rho;
  obs.rho_v = bulk.vapor.rho;
  obs.sigma_closed = surface_tension_closed(p, prof.bc);
  obs.sigma_quad = surface_tension_quadrature(p, prof);
  obs.f0 = first_integral_constant(p, prof.bc);
  obs.delta_T = prof.bc.delta_T();
  return obs;
}

}  // namespace equilibrium
}  // namespace thermocap
