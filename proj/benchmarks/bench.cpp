#include <benchmark/benchmark.h>

#include <random>

#include "ffred/int_ring.hpp"
#include "ffred/matmul.hpp"
#include "ffred/metrics.hpp"
#include "ffred/solver.hpp"

using namespace ffred;

namespace {

Matrix<Int> random_square(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-99, 99);
    Matrix<Int> a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = Int(entry(rng));
        }
    }
    return a;
}

void BM_matmul(benchmark::State& state, const MulBackend& backend) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix<Int> a = random_square(n, 1);
    const Matrix<Int> b = random_square(n, 2);
    for (auto _ : state) {
        OpCounts ops;
        benchmark::DoNotOptimize(mat_mul(a, b, backend, ops));
    }
    state.SetComplexityN(state.range(0));
}

void BM_matmul_classical(benchmark::State& state) {
    BM_matmul(state, MulBackend::classical());
}

void BM_matmul_strassen(benchmark::State& state) {
    BM_matmul(state, MulBackend::strassen(16));
}

void BM_solve(benchmark::State& state, const PartitionStrategy& strategy) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    const Matrix<Int> a = random_int_system(n, n + 1, rng);
    const MulBackend backend = MulBackend::classical();
    for (auto _ : state) {
        OpCounts ops;
        benchmark::DoNotOptimize(solve(a, strategy, backend, ops));
    }
    state.SetComplexityN(state.range(0));
}

void BM_solve_dichotomous(benchmark::State& state) {
    BM_solve(state, PartitionStrategy::dichotomous());
}

void BM_solve_one_pass(benchmark::State& state) {
    BM_solve(state, PartitionStrategy::one_pass());
}

void BM_solve_forward(benchmark::State& state) {
    BM_solve(state, PartitionStrategy::forward_backup());
}

}  // namespace

BENCHMARK(BM_matmul_classical)->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_matmul_strassen)->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_solve_dichotomous)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_solve_one_pass)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_solve_forward)->RangeMultiplier(2)->Range(8, 64)->Complexity();

BENCHMARK_MAIN();
