#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sul/bounds.hpp"
#include "sul/optimize.hpp"
#include "sul/radius.hpp"
#include "sul/reps.hpp"
#include "sul/specialfn.hpp"
#include "sul/transform_check.hpp"

using namespace sul;

static void BM_LogGamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(x));
    x = x < 100.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_LogGamma);

static void BM_LaguerreAll(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laguerre_all(k, 5.0, 12.3));
}
BENCHMARK(BM_LaguerreAll)->Arg(20)->Arg(80);

static void BM_GaussLaguerreRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre_rule(n, 0.5));
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(32)->Arg(128);

static void BM_FourierTransform(benchmark::State& state) {
  const GaussianMixture f = build_f0(power_weight(12, 0.0), 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_transform(f));
}
BENCHMARK(BM_FourierTransform);

static void BM_WeightedIntegral(benchmark::State& state) {
  const Weight w = power_weight(8, 1.5);
  const GaussianMixture f = build_f0(w, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_integral(f, w));
}
BENCHMARK(BM_WeightedIntegral);

static void BM_RadiusGaussian(benchmark::State& state) {
  const Weight w = power_weight(12, 0.0);
  const GaussianMixture f = build_f0(w, 1.0 + 1.0 / std::sqrt(12.0));
  for (auto _ : state) benchmark::DoNotOptimize(last_sign_change(f, w));
}
BENCHMARK(BM_RadiusGaussian);

static void BM_RadiusLaguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> c(n);
  for (int k = 0; k < n; ++k) c[k] = std::sin(1.7 * k + 0.3);
  const LaguerreFunction f = make_laguerre(8, HarmonicFactor::one(), c);
  const Weight w = power_weight(8, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(last_sign_change(f, w));
}
BENCHMARK(BM_RadiusLaguerre)->Arg(10)->Arg(40)->Arg(80)->Unit(benchmark::kMicrosecond);

static void BM_SolveAtRadius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigenbasis b = eigenbasis(1, 12, HarmonicFactor::one(), n);
  const Weight w = power_weight(12, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_at_radius(b, w, 1.5));
}
BENCHMARK(BM_SolveAtRadius)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_Thm1Upper(benchmark::State& state) {
  const Weight w = power_weight(8, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(thm1_upper(-1, w));
}
BENCHMARK(BM_Thm1Upper)->Unit(benchmark::kMicrosecond);

static void BM_NumericFourier2D(benchmark::State& state) {
  const GaussianMixture f = make_mixture(2, HarmonicFactor::coordinate_product(1), {{1.0, 0.7}, {-0.4, 2.1}});
  const double xi[] = {0.3, -0.8};
  for (auto _ : state) benchmark::DoNotOptimize(numeric_fourier(f, xi));
}
BENCHMARK(BM_NumericFourier2D)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
