// Throughput of the counting kernels and the series expansion. The fast/brute
// pair documents the cubic vs quartic gap; the threads sweep shows the slice
// partition scaling on one fixed prime.

#include <benchmark/benchmark.h>

#include "bnq/arith.hpp"
#include "bnq/qseries.hpp"
#include "bnq/varieties.hpp"

namespace {

void bm_count_u_fast(benchmark::State& state) {
    const bnq::PrimeField F(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bnq::count_U(F));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_count_u_fast)->Arg(31)->Arg(61)->Arg(127)->Arg(251)->Complexity();

void bm_count_u_brute(benchmark::State& state) {
    const bnq::PrimeField F(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bnq::count_U_bruteforce(F));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_count_u_brute)->Arg(31)->Arg(61)->Complexity();

void bm_count_u_threads(benchmark::State& state) {
    const bnq::PrimeField F(151);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bnq::count_U(F, threads));
}
BENCHMARK(bm_count_u_threads)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void bm_eta_expansion(benchmark::State& state) {
    const std::int64_t N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(bnq::f_coefficients(N));
    state.SetComplexityN(N);
}
BENCHMARK(bm_eta_expansion)->Arg(100)->Arg(1000)->Arg(10000)->Complexity();

void bm_cayley_cover(benchmark::State& state) {
    const bnq::PrimeField F(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bnq::count_cayley_resolved_cover(F));
}
BENCHMARK(bm_cayley_cover)->Arg(31)->Arg(61);

}  // namespace

BENCHMARK_MAIN();
