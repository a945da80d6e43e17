// Microbenchmarks for the hot paths: exact elimination, the graded
// differential, word-ball growth, and harmonic-space assembly.  Run the
// binary directly; google-benchmark owns the command line.

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "folrig/dynamics/harmonic.hpp"
#include "folrig/dynamics/word_ball.hpp"
#include "folrig/exactnum/matrix.hpp"
#include "folrig/exactnum/rational.hpp"
#include "folrig/liealg/builtin.hpp"
#include "folrig/liealg/cohomology.hpp"

using folrig::exactnum::ExactMatrix;
using folrig::exactnum::Rational;

namespace {

ExactMatrix<Rational> random_rational_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    ExactMatrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

void bareiss_rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_rational_matrix(n, 0xb5 + n);
    for (auto _ : state) benchmark::DoNotOptimize(folrig::exactnum::exact_rank(m));
}

void ce_differential(benchmark::State& state) {
    const auto g = folrig::liealg::special_orthogonal(static_cast<std::size_t>(state.range(0)));
    const auto k = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(folrig::liealg::ce_differential(g, k));
}

void word_ball(benchmark::State& state) {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    Eigen::MatrixXd a(3, 3), b(3, 3);
    a << std::cos(golden), -std::sin(golden), 0, std::sin(golden), std::cos(golden), 0, 0, 0, 1;
    b << 1, 0, 0, 0, std::cos(1.0), -std::sin(1.0), 0, std::sin(1.0), std::cos(1.0);
    const std::vector<Eigen::MatrixXd> gens = {a, b};
    const auto radius = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(folrig::dynamics::enumerate_ball(gens, radius, 1e-9));
}

void harmonic_space(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(folrig::dynamics::harmonic_space(n, d));
}

}  // namespace

BENCHMARK(bareiss_rank)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(ce_differential)->Args({4, 2})->Args({5, 2})->Args({5, 3})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(word_ball)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(harmonic_space)->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
