#include <benchmark/benchmark.h>

#include <cmath>

#include "qpair/dynamics.hpp"
#include "qpair/experiment.hpp"
#include "qpair/measurement.hpp"
#include "qpair/ratapprox.hpp"
#include "qpair/repreparation.hpp"

namespace dyn = qpair::dynamics;
namespace msr = qpair::measurement;
namespace rep = qpair::repreparation;
namespace ra = qpair::ratapprox;

static void bm_propagator(benchmark::State& state) {
  auto p = dyn::HamiltonianParams::make(1.0, 2.0, 1.0);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(dyn::propagator(p, t));
  }
}
BENCHMARK(bm_propagator);

static void bm_distort_analytic(benchmark::State& state) {
  auto p = dyn::HamiltonianParams::make(1.0, 2.0, 1.0);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(
        dyn::distort_analytic(p, dyn::DimensionlessTime(t), 2, 0.7));
  }
}
BENCHMARK(bm_distort_analytic);

static void bm_reconstruct(benchmark::State& state) {
  auto p = dyn::HamiltonianParams::from_dimensionless(0.26, 0.9);
  auto c = dyn::make_control_auto_m(p, 2, 1, 1.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(dyn::reconstruct(p, c, 2, 0.7));
}
BENCHMARK(bm_reconstruct);

static void bm_helstrom(benchmark::State& state) {
  auto set = msr::builtin_set(msr::SetLabel::MBPrime);
  auto [b1, b2] = msr::reconstructed_states(0.7, 3, 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(msr::helstrom(set, b1, b2));
}
BENCHMARK(bm_helstrom);

static void bm_reprepare(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rep::reprepare(rep::Outcome::O11, 0.7));
}
BENCHMARK(bm_reprepare);

static void bm_pipeline_average(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qpair::cli::pipeline_average(0.7, 2, 0.03));
}
BENCHMARK(bm_pipeline_average);

static void bm_search_best(benchmark::State& state) {
  const long long n_max = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ra::search_best(M_PI / 10.0, 5, n_max));
}
BENCHMARK(bm_search_best)->Arg(1000)->Arg(10000)->Arg(100000);

static void bm_sweep(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ra::sweep(100, 5, 2000, 42));
}
BENCHMARK(bm_sweep);

BENCHMARK_MAIN();
