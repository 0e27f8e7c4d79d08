#include <benchmark/benchmark.h>

#include "double_sum_reference.hpp"
#include "thermaljc/thermaljc.hpp"

namespace {

using namespace thermaljc;

// Arguments: mean photon number times 10.
double mean_of(const benchmark::State& state) { return state.range(0) / 10.0; }

void BM_Factorised(benchmark::State& state) {
  const ThermalDistribution d(mean_of(state));
  const auto params = SystemParams::with_detuning(1.0, 1);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_matrix(params, d, d, t));
    t += 1e-3;
  }
  state.counters["n_max"] = d.n_max();
}
BENCHMARK(BM_Factorised)->Arg(1)->Arg(5)->Arg(50);

void BM_Resonant(benchmark::State& state) {
  const ThermalDistribution d(mean_of(state));
  const auto params = SystemParams::with_detuning(0.0, 1);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_matrix_resonant(params, d, d, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_Resonant)->Arg(1)->Arg(5)->Arg(50);

void BM_DoubleSum(benchmark::State& state) {
  const ThermalDistribution d(mean_of(state));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::double_sum_state(d, d, 0.7 * t, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_DoubleSum)->Arg(1)->Arg(5)->Arg(50);

void BM_Oracle(benchmark::State& state) {
  const ThermalDistribution d(mean_of(state));
  const auto params = SystemParams::with_detuning(1.0, 1);
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_joint_density(params, d, d, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(5);

void BM_TimeSeries(benchmark::State& state) {
  const ThermalDistribution d(mean_of(state));
  const auto params = SystemParams::with_detuning(0.0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_series(params, d, d, 25.0, 2000));
  }
}
BENCHMARK(BM_TimeSeries)->Arg(1)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_WoottersGeneral(benchmark::State& state) {
  const ThermalDistribution d(1.0);
  const auto params = SystemParams::with_detuning(1.0, 1);
  const auto rho = JointDensity::from_atomic(density_matrix(params, d, d, 1.3)).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence_general(rho));
}
BENCHMARK(BM_WoottersGeneral);

}  // namespace

BENCHMARK_MAIN();
