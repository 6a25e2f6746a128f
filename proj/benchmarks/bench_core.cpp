#include <benchmark/benchmark.h>

#include "hunter/integrate.hpp"
#include "hunter/params.hpp"
#include "hunter/series.hpp"
#include "hunter/shoot.hpp"
#include "hunter/sonic.hpp"
#include "hunter/system.hpp"

namespace {

void BM_DeriveParams(benchmark::State& state) {
  double g = 1.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hunter::derive_params(g));
    g = g < 1.15 ? g + 1e-6 : 1.05;
  }
}
BENCHMARK(BM_DeriveParams);

void BM_Rhs(benchmark::State& state) {
  const hunter::GammaParams p = hunter::derive_params(1.1);
  const hunter::State s{0.05, -0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hunter::rhs_rho_u(p, 0.4, s));
  }
}
BENCHMARK(BM_Rhs);

void BM_SonicSeries(benchmark::State& state) {
  const hunter::GammaParams p = hunter::derive_params(1.1);
  const hunter::SonicPointData sp = hunter::solve_sonic(p, 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hunter::taylor_at_sonic(p, sp, 10));
  }
}
BENCHMARK(BM_SonicSeries);

void BM_ShootInward(benchmark::State& state) {
  const hunter::GammaParams p = hunter::derive_params(1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hunter::shoot_inward(p, 0.05));
  }
}
BENCHMARK(BM_ShootInward);

}  // namespace

BENCHMARK_MAIN();
