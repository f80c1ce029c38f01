// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nestrec/kernels.hpp"

using namespace nestrec;

static void BM_ClassifyBoxSerial(benchmark::State& state) {
    const std::int64_t j = state.range(0);
    const auto box = ParameterBox::standard(j);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::classify_box_serial(j, box));
    state.SetItemsProcessed(state.iterations() * box.total());
}

static void BM_ClassifyBoxParallel(benchmark::State& state) {
    const std::int64_t j = state.range(0);
    const auto box = ParameterBox::standard(j);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::classify_box_parallel(j, box));
    state.SetItemsProcessed(state.iterations() * box.total());
    state.counters["threads"] = kernels::max_threads();
}

static void BM_EvalCRangeSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::eval_C_range_serial(state.range(0), -1'000'000, 1'000'000));
    state.SetItemsProcessed(state.iterations() * 2'000'001);
}

static void BM_EvalCRangeParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::eval_C_range_parallel(state.range(0), -1'000'000, 1'000'000));
    state.SetItemsProcessed(state.iterations() * 2'000'001);
}

BENCHMARK(BM_ClassifyBoxSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyBoxParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalCRangeSerial)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalCRangeParallel)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
