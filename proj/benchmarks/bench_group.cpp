#include <benchmark/benchmark.h>

#include "ansig/constructions.hpp"
#include "ansig/group.hpp"

using namespace ansig;

namespace {

GeneratorSet alternating_gens(int n)
{
    return GeneratorSet({Permutation::long_cycle(n, 1, 3),
                         n % 2 == 1 ? Permutation::long_cycle(n, 1, n) : Permutation::long_cycle(n, 2, n - 1)});
}

void BM_GroupOrder(benchmark::State& state)
{
    const GeneratorSet gs = alternating_gens(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(group_order(gs));
}
BENCHMARK(BM_GroupOrder)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Recognition(benchmark::State& state)
{
    const GeneratorSet gs = alternating_gens(static_cast<int>(state.range(0)));
    RecognitionOptions fast;
    fast.compute_exact = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_full_alternating(gs, {}, fast));
}
BENCHMARK(BM_Recognition)->Arg(16)->Arg(64);

void BM_BertramFactorization(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    // (1 2 3)(4 5 6) ... on the first multiple of 3 values.
    std::vector<std::vector<int>> cycles;
    for (int v = 1; v + 2 <= n - n % 3; v += 3)
        cycles.push_back({v, v + 1, v + 2});
    const Permutation c = Permutation::from_cycles(n, cycles);
    const int l = bertram_lower_bound(c);
    for (auto _ : state)
        benchmark::DoNotOptimize(bertram_factorization(c, l));
}
BENCHMARK(BM_BertramFactorization)->Arg(12)->Arg(30)->Arg(60);

}  // namespace
