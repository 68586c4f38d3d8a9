#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "thermocap/equilibrium.hpp"

namespace {

using namespace thermocap;

const FluidParams& p0() {
  static const FluidParams p = validate_params(reference_constants());
  return p;
}

double inf_norm(const std::vector<double>& v) {
  double n = 0.0;
  for (double x : v) n = std::max(n, std::abs(x));
  return n;
}

TEST(BulkStates, ReferenceGap) {
  const BulkStates b = equilibrium::bulk_states(p0(), BulkConditions::from_delta_t(p0(), 0.01));
  EXPECT_NEAR(b.liquid.rho, 1.1, 1e-15);
  EXPECT_NEAR(b.vapor.rho, 0.9, 1e-15);
  EXPECT_NEAR(b.liquid.s, -0.02 / 2.2, 1e-16);
  EXPECT_NEAR(b.vapor.s, -0.02 / 1.8, 1e-16);
}

TEST(BulkStates, CollapseAtCriticalIsotherm) {
  const BulkStates b = equilibrium::bulk_states(p0(), BulkConditions::from_delta_t(p0(), 0.0));
  EXPECT_EQ(b.liquid.rho, 1.0);
  EXPECT_EQ(b.vapor.rho, 1.0);
  EXPECT_EQ(b.liquid.s, 0.0);
}

TEST(BulkStates, AreIsothermalRootsOfTheCubic) {
  for (double dT : {1e-4, 1e-3, 1e-2, 1e-1}) {
    const BulkConditions bc = BulkConditions::from_delta_t(p0(), dT);
    const BulkStates b = equilibrium::bulk_states(p0(), bc);
    for (const ThermoState& st : {b.liquid, b.vapor}) {
      EXPECT_NEAR(eos::temperature(p0(), st), bc.T0(), 1e-12);
      EXPECT_NEAR(eos::chemical_potential_full(p0(), st, bc), 0.0, 1e-12);
    }
  }
}

TEST(InterfaceWidth, Examples) {
  EXPECT_NEAR(equilibrium::interface_width(p0(), BulkConditions::from_delta_t(p0(), 0.01)), std::sqrt(50.0), 1e-12);
  EXPECT_NEAR(equilibrium::interface_width(p0(), BulkConditions::from_delta_t(p0(), 1e-4)), 70.71068, 1e-5);
  try {
    equilibrium::interface_width(p0(), BulkConditions::from_delta_t(p0(), 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CriticalIsotherm);
  }
}

TEST(ClosedProfile, MidpointAndShape) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  ASSERT_EQ(prof.size(), 1001u);
  const std::size_t mid = prof.mid();
  EXPECT_EQ(prof.y[mid], 0.0);
  EXPECT_EQ(prof.rho[mid], 1.0);
  EXPECT_NEAR(prof.s[mid], -0.005, 1e-17);
  EXPECT_NEAR(prof.y.back(), 15.0 * std::sqrt(50.0), 1e-12);
  EXPECT_NEAR(prof.rho.back(), 1.1, 1e-6);
  EXPECT_NEAR(prof.rho.front(), 0.9, 1e-6);
  EXPECT_TRUE(std::is_sorted(prof.rho.begin(), prof.rho.end()));
  for (std::size_t i = 0; i < prof.size(); ++i) {
    EXPECT_NEAR(prof.rho[i] - 1.0, -(prof.rho[prof.size() - 1 - i] - 1.0), 1e-15) << "odd about y=0";
  }
}

TEST(ClosedProfile, ValueAtTwoWidths) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  // 2 zeta sits on a node when n - 1 divides evenly: n = 601 over +-15 zeta.
  const Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{.half_width_in_zeta = 15, .n_points = 601});
  const std::size_t i = prof.mid() + 40;
  EXPECT_NEAR(prof.y[i], 2.0 * std::sqrt(50.0), 1e-12);
  EXPECT_NEAR(prof.rho[i], 1.0 + 0.1 * std::tanh(1.0), 1e-12);
}

TEST(ClosedProfile, RejectsCriticalIsothermAndBadGrids) {
  EXPECT_THROW(equilibrium::closed_profile(p0(), BulkConditions::from_delta_t(p0(), 0.0), GridConfig{}), Error);
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  EXPECT_THROW(equilibrium::closed_profile(p0(), bc, GridConfig{.half_width_in_zeta = 15, .n_points = 1000}), Error);
  EXPECT_THROW(equilibrium::closed_profile(p0(), bc, GridConfig{.half_width_in_zeta = 2, .n_points = 1001}), Error);
}

TEST(SurfaceTension, ClosedFormExamples) {
  const oracle::Fluid f;
  EXPECT_NEAR(equilibrium::surface_tension_closed(p0(), BulkConditions::from_delta_t(p0(), 0.01)), 9.428090e-4, 1e-10);
  EXPECT_EQ(equilibrium::surface_tension_closed(p0(), BulkConditions::from_delta_t(p0(), 0.0)), 0.0);
  const double s4 = equilibrium::surface_tension_closed(p0(), BulkConditions::from_delta_t(p0(), 0.04));
  EXPECT_NEAR(s4, 7.542472e-3, 1e-9);
  EXPECT_NEAR(s4, oracle::tension(f, 0.04), 1e-15);
}

TEST(SurfaceTension, QuadratureMatchesClosedForm) {
  for (double dT : {1e-4, 1e-3, 1e-2, 1e-1}) {
    const BulkConditions bc = BulkConditions::from_delta_t(p0(), dT);
    const Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{.half_width_in_zeta = 15, .n_points = 2001});
    const double closed = equilibrium::surface_tension_closed(p0(), bc);
    EXPECT_LE(std::abs(equilibrium::surface_tension_quadrature(p0(), prof) - closed) / closed, 1e-8) << dT;
  }
}

TEST(SurfaceTension, ConstantProfileHasNoTension) {
  Profile prof = equilibrium::closed_profile(p0(), BulkConditions::from_delta_t(p0(), 0.01), GridConfig{});
  std::fill(prof.rho.begin(), prof.rho.end(), 1.0);
  std::fill(prof.s.begin(), prof.s.end(), 0.0);
  // Bulk states coincide with rho_c only on the critical isotherm.
  prof.bc = BulkConditions::from_delta_t(p0(), 0.0);
  EXPECT_EQ(equilibrium::surface_tension_quadrature(p0(), prof), 0.0);
  prof.bc = BulkConditions::from_delta_t(p0(), 0.01);
  EXPECT_THROW(equilibrium::surface_tension_quadrature(p0(), prof), Error);
}

TEST(SurfaceTension, TruncatedTailIsRejected) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  // Keep only the central +-3 zeta so the ends are far from bulk.
  const std::size_t keep = 201, start = prof.mid() - keep / 2;
  Profile cut = prof;
  cut.y.assign(prof.y.begin() + start, prof.y.begin() + start + keep);
  cut.rho.assign(prof.rho.begin() + start, prof.rho.begin() + start + keep);
  cut.s.assign(prof.s.begin() + start, prof.s.begin() + start + keep);
  try {
    equilibrium::surface_tension_quadrature(p0(), cut);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndecayedTail);
  }
}

TEST(ReducedResidual, ClosedProfileAtDefaults) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  EXPECT_LE(inf_norm(equilibrium::reduced_residual(p0(), bc, prof)), 1e-7);
  EXPECT_LE(inf_norm(equilibrium::first_integral_residual(p0(), bc, prof)), 1e-7);
}

TEST(ReducedResidual, BulkConstantProfileIsExact) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const BulkStates b = equilibrium::bulk_states(p0(), bc);
  Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  std::fill(prof.rho.begin(), prof.rho.end(), b.liquid.rho);
  std::fill(prof.s.begin(), prof.s.end(), b.liquid.s);
  EXPECT_LE(inf_norm(equilibrium::reduced_residual(p0(), bc, prof)), 1e-14);
  EXPECT_LE(inf_norm(equilibrium::first_integral_residual(p0(), bc, prof)), 1e-12);
}

TEST(ReducedResidual, LocalisesAPerturbation) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  const double y0 = 20.0, w = 3.0;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    prof.rho[i] += 0.01 * std::exp(-std::pow((prof.y[i] - y0) / w, 2));
  }
  const std::vector<double> r = equilibrium::reduced_residual(p0(), bc, prof);
  const auto peak = std::max_element(r.begin(), r.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  const double y_peak = prof.y[static_cast<std::size_t>(peak - r.begin()) + 1];
  EXPECT_GT(std::abs(*peak), 1e-5);
  EXPECT_LT(std::abs(y_peak - y0), 2.0 * w);
  EXPECT_LT(std::abs(r.front()), 1e-7);
  EXPECT_LT(std::abs(r.back()), 1e-7);
}

TEST(FirstIntegral, BalanceAtTheDividingSurface) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const double zeta = std::sqrt(50.0);
  const double slope = 0.1 / (2.0 * zeta);  // rho'(0)
  EXPECT_NEAR(0.5 * slope * slope, 2.5e-5, 1e-18);
  EXPECT_NEAR(equilibrium::first_integral_constant(p0(), bc), 2.5e-5, 1e-18);
}

// Observed order of the residual under refinement at fixed L.
double observed_order(const std::vector<double>& errors) {
  return std::log2(errors[errors.size() - 2] / errors.back());
}

TEST(ReducedResidual, ConvergesAtFourthOrder) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  std::vector<double> r20, r21;
  for (int n : {251, 501, 1001, 2001}) {
    const Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{.half_width_in_zeta = 15, .n_points = n});
    r20.push_back(inf_norm(equilibrium::reduced_residual(p0(), bc, prof)));
    r21.push_back(inf_norm(equilibrium::first_integral_residual(p0(), bc, prof)));
  }
  EXPECT_GE(observed_order(r20), 3.5);
  EXPECT_GE(observed_order(r21), 3.5);
}

TEST(Observables, ReferenceValues) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const InterfaceObservables obs = equilibrium::observables(p0(), equilibrium::closed_profile(p0(), bc, GridConfig{}));
  EXPECT_NEAR(obs.zeta, std::sqrt(50.0), 1e-12);
  EXPECT_NEAR(obs.rho_l, 1.1, 1e-15);
  EXPECT_NEAR(obs.rho_v, 0.9, 1e-15);
  EXPECT_NEAR(obs.f0, 2.5e-5, 1e-18);
  EXPECT_EQ(obs.delta_T, 0.01);
  EXPECT_NEAR(obs.sigma_quad, obs.sigma_closed, 1e-6 * obs.sigma_closed);
}

TEST(ValidateProfile, RejectsMismatchedArrays) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  prof.s.pop_back();
  EXPECT_THROW(equilibrium::validate_profile(p0(), prof), Error);
}

}  // namespace
