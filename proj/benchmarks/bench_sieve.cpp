#include <benchmark/benchmark.h>

#include <permprime/sieve.hpp>

using namespace permprime;

static void BM_CountPrimes(benchmark::State& state) {
    std::uint64_t hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_primes(0, hi));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_CountPrimes)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000);

static void BM_SegmentSize(benchmark::State& state) {
    SieveOptions opts;
    opts.segment_odds = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_primes(0, 10'000'000, opts));
}
BENCHMARK(BM_SegmentSize)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20)->Arg(1 << 23);

BENCHMARK_MAIN();
