#include "besselint/functions.hpp"
#include "besselint/identities.hpp"
#include "besselint/polys.hpp"
#include "besselint/quadrature.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace besselint;

static void BM_BesselJSeries(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bessel_j(0.0, x).value);
}
BENCHMARK(BM_BesselJSeries)->Arg(1)->Arg(10)->Arg(30);

static void BM_StruveSeries(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(struve_h(0.5, x).value);
}
BENCHMARK(BM_StruveSeries)->Arg(1)->Arg(10)->Arg(30);

static void BM_WrightSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wright_w(0.5, 1.0, -4.0).value);
}
BENCHMARK(BM_WrightSeries);

static void BM_Hermite2(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hermite2(n, 1.3, -0.7));
}
BENCHMARK(BM_Hermite2)->Arg(4)->Arg(16);

static void BM_FiniteQuadrature(benchmark::State& state) {
    auto f = [](double x) { return std::exp(-x) * std::sin(10.0 * x); };
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_finite(f, 0.0, 5.0, 1e-10).value);
}
BENCHMARK(BM_FiniteQuadrature);

static void BM_OscillatoryQuadrature(benchmark::State& state) {
    OscillationHint hint{std::numbers::pi, 2.404825557695773};
    auto f = [](double x) { return bessel_j(0.0, x).value; };
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_semi_oscillatory(f, hint, 1e-9).value);
}
BENCHMARK(BM_OscillatoryQuadrature);

static void BM_VerifyGaussianMoment(benchmark::State& state) {
    const Params p{{"n", 2.0}, {"a", 1.0}, {"b", 0.5}, {"alpha", 1.0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify("gaussian-moment", p).passed);
}
BENCHMARK(BM_VerifyGaussianMoment);

static void BM_VerifyStruveMellin(benchmark::State& state) {
    const Params p{{"mu", -1.0}, {"nu", 0.0}};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify("struve-mellin", p).passed);
}
BENCHMARK(BM_VerifyStruveMellin);

BENCHMARK_MAIN();
