#include <benchmark/benchmark.h>

#include <numbers>

#include "qrmt/gap.hpp"
#include "qrmt/kernels.hpp"
#include "qrmt/moments.hpp"
#include "qrmt/swpoly.hpp"

using namespace qrmt;

static void BM_sw_poly(benchmark::State& state) {
    QParams p = QParams::from_qN(1, 0.5);
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sw_poly_logu(l, 1.7, p));
}
BENCHMARK(BM_sw_poly)->Arg(8)->Arg(32)->Arg(128);

static void BM_kernel_swe(benchmark::State& state) {
    QParams p = QParams::from_cNL(static_cast<int>(state.range(0)), 1.0,
                                  2 * std::numbers::pi);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_swe(0.37, -0.21, p));
}
BENCHMARK(BM_kernel_swe)->Arg(8)->Arg(32);

static void BM_kernel_edge(benchmark::State& state) {
    QParams p = QParams::from_cNL(1, 1.0, 2 * std::numbers::pi);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_edge(0.9, 0.4, p));
}
BENCHMARK(BM_kernel_edge);

static void BM_power_sum_moment(benchmark::State& state) {
    QParams p = QParams::from_qN(static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(power_sum_moment(6, p).value);
}
BENCHMARK(BM_power_sum_moment)->Arg(4)->Arg(64);

static void BM_gap_probability(benchmark::State& state) {
    QParams p = QParams::from_cNL(1, 1.0, 2 * std::numbers::pi);
    FredholmConfig cfg;
    cfg.nodes = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gap_probability(0.0, p, cfg));
}
BENCHMARK(BM_gap_probability)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
