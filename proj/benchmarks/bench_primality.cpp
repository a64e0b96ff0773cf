#include <benchmark/benchmark.h>

#include <random>

#include <permprime/primality.hpp>
#include <permprime/repunit.hpp>

using namespace permprime;

static void BM_IsPrimeSmall10Digit(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> dist(1'000'000'000ull, 9'999'999'999ull);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_prime_small(dist(rng)));
}
BENCHMARK(BM_IsPrimeSmall10Digit);

static void BM_IsPrimeSmallNearMax(benchmark::State& state) {
    std::uint64_t n = 18446744073709551557ull;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_prime_small(n));
}
BENCHMARK(BM_IsPrimeSmallNearMax);

static void BM_BpswRepunit(benchmark::State& state) {
    WideNat r = repunit(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_probable_prime(r, 0));
}
BENCHMARK(BM_BpswRepunit)->Arg(317)->Arg(1031);

BENCHMARK_MAIN();
