#include <benchmark/benchmark.h>

#include <permprime/survey.hpp>

using namespace permprime;

static void BM_Survey1379(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(survey_1379(n));
}
BENCHMARK(BM_Survey1379)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Survey1379Workers(benchmark::State& state) {
    SurveyOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(survey_1379(9, opts));
}
BENCHMARK(BM_Survey1379Workers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SurveyAll(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(survey_all(n));
}
BENCHMARK(BM_SurveyAll)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
