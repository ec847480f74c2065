#include "kothe/counterexample.hpp"
#include "kothe/fin_seq.hpp"
#include "kothe/lp.hpp"
#include "kothe/weight.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace kothe;

namespace {

FinSeq dense_sequence(std::mt19937& rng, int support, Index max_index) {
    std::uniform_int_distribution<Index> index_dist(1, max_index);
    std::uniform_int_distribution<int> num_dist(1, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    std::vector<FinSeq::Term> terms;
    for (int t = 0; t < support; ++t) {
        terms.emplace_back(index_dist(rng),
                           make_rational(num_dist(rng), den_dist(rng)));
    }
    return FinSeq::from_terms(std::move(terms));
}

void BM_MinProduct(benchmark::State& state) {
    std::mt19937 rng(1);
    const int support = static_cast<int>(state.range(0));
    const FinSeq a = dense_sequence(rng, support, 4 * support);
    const FinSeq b = dense_sequence(rng, support, 4 * support);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_product(a, b));
    }
}
BENCHMARK(BM_MinProduct)->Arg(16)->Arg(64)->Arg(256);

void BM_BruteProduct(benchmark::State& state) {
    std::mt19937 rng(1);
    const int support = static_cast<int>(state.range(0));
    const FinSeq a = dense_sequence(rng, support, 4 * support);
    const FinSeq b = dense_sequence(rng, support, 4 * support);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_product(a, b));
    }
}
BENCHMARK(BM_BruteProduct)->Arg(16)->Arg(64)->Arg(256);

void BM_Seminorm(benchmark::State& state) {
    std::mt19937 rng(2);
    const FinSeq a = dense_sequence(rng, 256, 2000);
    const Weight p = cex_weight(static_cast<Index>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(seminorm(a, p));
    }
}
BENCHMARK(BM_Seminorm)->Arg(1)->Arg(8);

void BM_PhiRoundtrip(benchmark::State& state) {
    Index n = 1;
    for (auto _ : state) {
        const auto [i, j] = phi_inv(n);
        benchmark::DoNotOptimize(phi(i, j));
        n = n % 100000 + 1;
    }
}
BENCHMARK(BM_PhiRoundtrip);

void BM_SolveMinimax(benchmark::State& state) {
    const Index D = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            lp::solve_minimax(lp::diagonal_instance(Rational(1), D, D + 3, 5)));
    }
}
BENCHMARK(BM_SolveMinimax)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
