#include <hypersob/analysis.hpp>
#include <hypersob/hypergeometric.hpp>
#include <hypersob/quadrature.hpp>
#include <hypersob/sobolev.hpp>

#include <benchmark/benchmark.h>

namespace {

using hypersob::LParams;
using hypersob::PParams;
using hypersob::Rational;

PParams<Rational> jacobi_params() { return {Rational(1, 2), Rational(1, 3), {Rational(1, 3), Rational(1)}, {1, 2}}; }
LParams<Rational> laguerre_params() { return {Rational(1, 2), {Rational(1, 3), Rational(1, 4)}, {1, 2}}; }

void BM_SobolevJacobiExact(benchmark::State& state) {
    const auto p = jacobi_params();
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::sobolev_jacobi(n, p));
}
BENCHMARK(BM_SobolevJacobiExact)->Arg(8)->Arg(16)->Arg(32);

void BM_SobolevLaguerreFloat(benchmark::State& state) {
    const LParams<double> p{0.5, {1.0 / 3.0, 0.25}, {1, 2}};
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::sobolev_laguerre(n, p));
}
BENCHMARK(BM_SobolevLaguerreFloat)->Arg(8)->Arg(16)->Arg(32);

void BM_GramJacobiExact(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    const auto form = hypersob::SobolevForm<Rational>::jacobi_type(jacobi_params(), n_max);
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::gram(form, n_max));
}
BENCHMARK(BM_GramJacobiExact)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GramLaguerreReduced(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    const auto form = hypersob::SobolevForm<Rational>::laguerre_type(laguerre_params(), n_max);
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::gram(form, n_max, hypersob::InnerPath::reduced));
}
BENCHMARK(BM_GramLaguerreReduced)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GaussJacobi01(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::gauss_jacobi01(n, 0.5, 1.0 / 3.0));
}
BENCHMARK(BM_GaussJacobi01)->Arg(16)->Arg(64)->Arg(256);

void BM_GaussLaguerre(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::gauss_laguerre(n, 0.5));
}
BENCHMARK(BM_GaussLaguerre)->Arg(16)->Arg(64)->Arg(128);

void BM_Zeros(benchmark::State& state) {
    const hypersob::GenParams<Rational> g{Rational(2), {Rational(1, 2)}, {Rational(3), Rational(2)}};
    const auto p = hypersob::to_float(hypersob::hyper_jacobi(static_cast<unsigned>(state.range(0)), g));
    for (auto _ : state) benchmark::DoNotOptimize(hypersob::zeros(p));
}
BENCHMARK(BM_Zeros)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
