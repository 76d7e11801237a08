// Serial reference vs OpenMP kernel for the divisor search.

#include <benchmark/benchmark.h>

#include "fppcert/divisor_search.hpp"

namespace {

using fppcert::divisor::SearchOptions;

void BM_SearchSerialReference(benchmark::State& state)
{
    SearchOptions o;
    o.modulus = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fppcert::divisor::search_lemma3_serial(o).feasible_pairs);
    state.SetItemsProcessed(state.iterations() * 4767 * 5040);
}

void BM_SearchOpenMP(benchmark::State& state)
{
    SearchOptions o;
    o.modulus = static_cast<int>(state.range(0));
    o.jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(fppcert::divisor::search_lemma3(o).feasible_pairs);
    state.SetItemsProcessed(state.iterations() * 4767 * 5040);
}

}  // namespace

BENCHMARK(BM_SearchSerialReference)->Arg(3)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOpenMP)
    ->ArgsProduct({{3, 1}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
