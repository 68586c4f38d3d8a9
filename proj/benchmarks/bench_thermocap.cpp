#include <benchmark/benchmark.h>

#include "thermocap/equilibrium.hpp"
#include "thermocap/scaling.hpp"
#include "thermocap/waves.hpp"

namespace {

using namespace thermocap;

const FluidParams& p0() {
  static const FluidParams p = validate_params(reference_constants());
  return p;
}

void BM_ClosedProfile(benchmark::State& state) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const GridConfig grid{.half_width_in_zeta = 15, .n_points = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equilibrium::closed_profile(p0(), bc, grid));
  }
}
BENCHMARK(BM_ClosedProfile)->Arg(1001)->Arg(4001);

void BM_TensionQuadrature(benchmark::State& state) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const Profile prof = equilibrium::closed_profile(p0(), bc, GridConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(equilibrium::surface_tension_quadrature(p0(), prof));
  }
}
BENCHMARK(BM_TensionQuadrature);

void BM_FullBvp(benchmark::State& state) {
  const BulkConditions bc = BulkConditions::from_delta_t(p0(), 0.01);
  const GridConfig grid{.half_width_in_zeta = 15, .n_points = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equilibrium::solve_full_bvp(p0(), bc, grid));
  }
}
BENCHMARK(BM_FullBvp)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_CelerityRoot(benchmark::State& state) {
  const WaveLocus locus = waves::dividing_surface_locus(p0(), BulkConditions::from_delta_t(p0(), 0.01));
  for (auto _ : state) {
    benchmark::DoNotOptimize(waves::celerity_by_determinant(p0(), locus));
  }
}
BENCHMARK(BM_CelerityRoot);

void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.use_full_solver = state.range(0) != 0;
  cfg.delta_t_values = {3e-2, 1e-2, 1e-3, 1e-4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scaling::run_sweep(p0(), cfg));
  }
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
