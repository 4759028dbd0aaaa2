#include <benchmark/benchmark.h>

#include <cmath>

#include "nskernel/experiments.hpp"
#include "nskernel/extremal.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/metric.hpp"

using namespace nskernel;

namespace {

CPoint point(int n) {
  CPoint z(n);
  for (int i = 0; i < n; ++i) z[i] = Complex(0.1 * (i + 1), -0.05 * i);
  return z;
}

const DomainSpec& reinhardt() {
  static const DomainSpec d =
      DomainSpec::smooth_reinhardt(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{2, 0}, 0.1}, {{0, 0}, -1.0}});
  return d;
}

}  // namespace

static void BM_BuildBallModel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_model(DomainSpec::ball(3), 1, N));
}
BENCHMARK(BM_BuildBallModel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_BuildReinhardtModel(benchmark::State& state) {
  BuildOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_model(reinhardt(), 0, static_cast<int>(state.range(0)), o));
}
BENCHMARK(BM_BuildReinhardtModel)->Args({10, 1})->Args({20, 1})->Args({20, 0})->Unit(benchmark::kMillisecond);

static void BM_SeriesEvaluate(benchmark::State& state) {
  const KernelModel m = build_model(DomainSpec::ball(2), 1, static_cast<int>(state.range(0)));
  const CPoint z = point(2);
  for (auto _ : state) benchmark::DoNotOptimize(m.evaluate(z, z));
}
BENCHMARK(BM_SeriesEvaluate)->Arg(10)->Arg(30)->Arg(60);

static void BM_SeriesJet(benchmark::State& state) {
  const KernelModel m = build_model(DomainSpec::ball(2), 1, static_cast<int>(state.range(0)));
  const CPoint z = point(2);
  for (auto _ : state) benchmark::DoNotOptimize(m.jet(z));
}
BENCHMARK(BM_SeriesJet)->Arg(10)->Arg(30)->Arg(60);

static void BM_ClosedMetricTensor(benchmark::State& state) {
  const ClosedKernel k = ClosedKernel::ball(3, 1);
  const CPoint z = point(3);
  for (auto _ : state) benchmark::DoNotOptimize(metric_tensor(k, z));
}
BENCHMARK(BM_ClosedMetricTensor);

static void BM_MinimumIntegral(benchmark::State& state) {
  const KernelModel m = build_model(DomainSpec::ball(2), 1, 30);
  const CPoint p = point(2);
  CVector v(2);
  v << 1.0, 0.5;
  const MinIntegralKind kind = state.range(0) == 0 ? MinIntegralKind::i2() : MinIntegralKind::m();
  for (auto _ : state) benchmark::DoNotOptimize(minimum_integral(m, kind, p, v));
}
BENCHMARK(BM_MinimumIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_AsymptoticsSweep(benchmark::State& state) {
  const ClosedKernel k = ClosedKernel::diagonal_ball({4.0, 1.0}, 1);
  const DomainSpec D = DomainSpec::diagonal_ball({4.0, 1.0});
  CPoint p0(2), v(2);
  p0 << 0.0, 1.0;
  v << 0.6, 0.8;
  std::vector<double> deltas;
  for (int i = 0; i <= 10; ++i) deltas.push_back(1e-3 * std::pow(2.0, -i));
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics_sweep(D, k, p0, v, deltas));
}
BENCHMARK(BM_AsymptoticsSweep)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
