/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <benchmark/benchmark.h>

#include "sierpdom/construction.hpp"
#include "sierpdom/domination.hpp"
#include "sierpdom/exact_solver.hpp"

using namespace sierpdom;

namespace {

void BM_neighbor_ranks(benchmark::State& state) {
    GraphParams g(static_cast<std::uint32_t>(state.range(0)),
                  static_cast<std::uint32_t>(state.range(1)));
    std::vector<std::uint64_t> out;
    std::uint64_t r = 0;
    for (auto _ : state) {
        out.clear();
        neighbor_ranks(g, r, out);
        benchmark::DoNotOptimize(out.data());
        r = (r + 7919) % g.vertex_count();
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_neighbor_ranks)->Args({3, 10})->Args({10, 6});

void BM_neighbors_words(benchmark::State& state) {
    GraphParams g(5, 8);
    Word v = word_at_rank(g, 123456);
    for (auto _ : state) {
        benchmark::DoNotOptimize(neighbors(g, v));
    }
}
BENCHMARK(BM_neighbors_words);

void BM_build_dominating_set(benchmark::State& state) {
    GraphParams g(static_cast<std::uint32_t>(state.range(0)),
                  static_cast<std::uint32_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dominating_set(g));
    }
    state.SetItemsProcessed(state.iterations() * dominating_set_size(g));
}
BENCHMARK(BM_build_dominating_set)->Args({3, 9})->Args({6, 7})->Args({2, 15});

void BM_is_dominating(benchmark::State& state) {
    GraphParams g(static_cast<std::uint32_t>(state.range(0)),
                  static_cast<std::uint32_t>(state.range(1)));
    VertexSet set = build_dominating_set(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_dominating(set));
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_is_dominating)->Args({10, 6})->Args({4, 9});

void BM_double_roman_verify(benchmark::State& state) {
    GraphParams g(5, 8);
    Labeling f = double_roman_labeling(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_double_roman(f));
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_double_roman_verify);

void BM_distance_bfs(benchmark::State& state) {
    GraphParams g(3, 12);
    const Word a = Word::all_ones(12);
    const Word b = Word::constant(3, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance(g, a, b));
    }
}
BENCHMARK(BM_distance_bfs);

void BM_min_pairwise_distance(benchmark::State& state) {
    GraphParams g(3, 6);
    VertexSet set = build_dominating_set(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimum_pairwise_distance(set));
    }
}
BENCHMARK(BM_min_pairwise_distance);

void BM_exact_gamma(benchmark::State& state) {
    GraphParams g(3, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_domination_number(g));
    }
}
BENCHMARK(BM_exact_gamma);

void BM_exact_double_roman(benchmark::State& state) {
    GraphParams g(2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_double_roman_domination_number(g));
    }
}
BENCHMARK(BM_exact_double_roman);

}  // namespace

BENCHMARK_MAIN();
