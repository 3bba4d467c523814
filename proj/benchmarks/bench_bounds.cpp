#include <benchmark/benchmark.h>

#include "povmbound/fuzz.hpp"
#include "povmbound/scenarios.hpp"

using namespace povmbound;

static void BenchCrossOverlapMixed(benchmark::State& state) {
    const Eigen::Index dim = state.range(0);
    const Povm m = random_povm({1, dim, 4, false, 1});
    const Povm n = random_povm({2, dim, 3, false, 1});
    const DensityMatrix rho = random_density_matrix({3, dim, 0, false, dim});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_overlap(m, n, rho));
    }
}
BENCHMARK(BenchCrossOverlapMixed)->Arg(2)->Arg(4)->Arg(6);

static void BenchMaxCrossNorm(benchmark::State& state) {
    const Eigen::Index dim = state.range(0);
    const Povm m = random_povm({4, dim, 4, false, 1});
    const Povm n = random_povm({5, dim, 3, false, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_cross_norm(m, n));
    }
}
BENCHMARK(BenchMaxCrossNorm)->Arg(2)->Arg(4)->Arg(6);

static void BenchCheckInstanceExample(benchmark::State& state) {
    const DiscriminationScenario scenario = discrimination_scenario();
    const DensityMatrix rho = pure_density(scenario.psi1);
    const ConjugatePair pair = ConjugatePair::of(RenyiOrder::of(2.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            check_instance(scenario.unambiguous, scenario.helstrom, rho, pair));
    }
}
BENCHMARK(BenchCheckInstanceExample);

static void BenchFuzzTrials(benchmark::State& state) {
    FuzzConfig config;
    config.trials = 16;
    config.dim_lo = config.dim_hi = state.range(0);
    config.outcomes_lo = 2;
    config.outcomes_hi = 5;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        config.seed = seed++;
        benchmark::DoNotOptimize(run_fuzz(config));
    }
    state.SetItemsProcessed(state.iterations() * config.trials);
}
BENCHMARK(BenchFuzzTrials)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
