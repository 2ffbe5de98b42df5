#include <benchmark/benchmark.h>

#include "ansig/oracle.hpp"

using namespace ansig;

namespace {

// Full pair sweep for [1;3] on A_6, the largest known exception.
void BM_PairSweepA6(benchmark::State& state)
{
    const Signature s = parse_signature("1;3");
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(prove_nonexistence(6, s, workers));
    state.SetItemsProcessed(state.iterations() * 129600);
}
BENCHMARK(BM_PairSweepA6)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_RandomizedSearch(benchmark::State& state)
{
    const Signature s = parse_signature("1;3,5");
    std::uint64_t seed = 1;
    for (auto _ : state) {
        SearchBudget b;
        b.seed = seed++;
        benchmark::DoNotOptimize(search_vector(static_cast<int>(state.range(0)), s, b));
    }
}
BENCHMARK(BM_RandomizedSearch)->Arg(9)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace
