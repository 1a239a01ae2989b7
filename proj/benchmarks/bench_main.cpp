#include "posetsat/chain.hpp"
#include "posetsat/chain_checks.hpp"
#include "posetsat/containers.hpp"
#include "posetsat/matching.hpp"
#include "posetsat/supersat.hpp"

#include <benchmark/benchmark.h>

using namespace posetsat;

static void BM_SliceRecursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MuDistribution mu(n);
        benchmark::DoNotOptimize(mu.slice_probability(n, n / 2));
    }
}
BENCHMARK(BM_SliceRecursion)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ConditionalBound(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_conditional_bound(n, 1).passed());
    }
}
BENCHMARK(BM_ConditionalBound)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BruteMinComp(benchmark::State& state) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(static_cast<int>(state.range(0))));
    const long m = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_min_comp(poset, m).min);
    }
}
BENCHMARK(BM_BruteMinComp)->Args({4, 8})->Args({5, 12})->Args({5, 20})->Unit(benchmark::kMillisecond);

static void BM_MinCompProfile(benchmark::State& state) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_comp_profile(poset).size());
    }
}
BENCHMARK(BM_MinCompProfile)->Unit(benchmark::kMillisecond);

static void BM_CountAntichains(benchmark::State& state) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_antichains(poset));
    }
}
BENCHMARK(BM_CountAntichains)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ContainerFamily(benchmark::State& state) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(static_cast<int>(state.range(0))));
    StageConfig config = find_certified_stages(poset, {2, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_family(poset, config).containers.size());
    }
}
BENCHMARK(BM_ContainerFamily)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Width(benchmark::State& state) {
    RankedPoset poset = RankedPoset::build(FamilySpec::multiset(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(width(poset).size);
    }
}
BENCHMARK(BM_Width)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
