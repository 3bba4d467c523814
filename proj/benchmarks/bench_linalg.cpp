#include <benchmark/benchmark.h>

#include "povmbound/linalg.hpp"
#include "povmbound/sampling.hpp"

using namespace povmbound;

namespace {

ComplexMatrix hermitian_input(Eigen::Index n) {
    SplitMix64 rng(static_cast<std::uint64_t>(n) * 1000 + 1);
    ComplexMatrix a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            a(r, c) = rng.complex_gaussian();
        }
    }
    return ((a + a.adjoint()) / 2.0).eval();
}

} // namespace

static void BenchHermitianEig(benchmark::State& state) {
    const ComplexMatrix a = hermitian_input(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BenchHermitianEig)->RangeMultiplier(2)->Range(2, 32)->Complexity();

static void BenchPsdSqrt(benchmark::State& state) {
    const ComplexMatrix h = hermitian_input(state.range(0));
    const ComplexMatrix a = h * h.adjoint();
    for (auto _ : state) {
        benchmark::DoNotOptimize(psd_sqrt(a));
    }
}
BENCHMARK(BenchPsdSqrt)->Arg(4)->Arg(8)->Arg(16);

static void BenchOperatorNorm(benchmark::State& state) {
    SplitMix64 rng(7);
    ComplexMatrix q(state.range(0), state.range(0));
    for (Eigen::Index r = 0; r < q.rows(); ++r) {
        for (Eigen::Index c = 0; c < q.cols(); ++c) {
            q(r, c) = rng.complex_gaussian();
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_norm(q));
    }
}
BENCHMARK(BenchOperatorNorm)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
