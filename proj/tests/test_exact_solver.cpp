/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sierpdom/construction.hpp"
#include "sierpdom/exact_solver.hpp"

using namespace sierpdom;

namespace {

Word W(std::initializer_list<Label> labels) { return Word(std::vector<Label>(labels)); }

struct Triple {
    std::uint64_t plain, roman, dbl;
};

Triple solve_all(const GraphParams& g) {
    return {exact_domination_number(g), exact_roman_domination_number(g),
            exact_double_roman_domination_number(g)};
}

}  // namespace

TEST_CASE("solver agrees with brute-force enumeration and frozen values") {
    // Path on 4 vertices.
    {
        GraphParams g(2, 2);
        auto dense = oracle::DenseGraph::make(2, 2);
        Triple got = solve_all(g);
        CHECK(got.plain == 2);
        CHECK(got.roman == 3);
        CHECK(got.dbl == 5);
        CHECK(got.plain == static_cast<std::uint64_t>(oracle::brute_min_dominating(dense)));
        CHECK(got.roman == static_cast<std::uint64_t>(oracle::brute_min_roman(dense)));
        CHECK(got.dbl ==
              static_cast<std::uint64_t>(oracle::brute_min_double_roman(dense, true)));
    }
    // Triangle.
    {
        GraphParams g(3, 1);
        Triple got = solve_all(g);
        CHECK(got.plain == 1);
        CHECK(got.roman == 2);
        CHECK(got.dbl == 3);
    }
    // Path on 8 vertices.
    {
        GraphParams g(2, 3);
        auto dense = oracle::DenseGraph::make(2, 3);
        Triple got = solve_all(g);
        CHECK(got.plain == 3);
        CHECK(got.roman == 6);
        CHECK(got.dbl == 9);
        CHECK(got.plain == static_cast<std::uint64_t>(oracle::brute_min_dominating(dense)));
        CHECK(got.roman == static_cast<std::uint64_t>(oracle::brute_min_roman(dense)));
        CHECK(got.dbl ==
              static_cast<std::uint64_t>(oracle::brute_min_double_roman(dense, true)));
    }
    // Nine vertices, three bridged triangles.
    {
        GraphParams g(3, 2);
        auto dense = oracle::DenseGraph::make(3, 2);
        Triple got = solve_all(g);
        CHECK(got.plain == 3);
        CHECK(got.roman == 5);
        CHECK(got.dbl == 8);
        CHECK(got.plain == static_cast<std::uint64_t>(oracle::brute_min_dominating(dense)));
        CHECK(got.roman == static_cast<std::uint64_t>(oracle::brute_min_roman(dense)));
        CHECK(got.dbl ==
              static_cast<std::uint64_t>(oracle::brute_min_double_roman(dense, true)));
    }
}

TEST_CASE("solver agrees with subset enumeration on 16-vertex instances") {
    for (auto [n, t] : {std::pair{2, 4}, std::pair{4, 2}}) {
        GraphParams g(n, t);
        auto dense = oracle::DenseGraph::make(n, t);
        CHECK(exact_domination_number(g) ==
              static_cast<std::uint64_t>(oracle::brute_min_dominating(dense)));
    }
}

TEST_CASE("complete graphs have fixed optima") {
    for (std::uint32_t n : {2u, 4u, 7u}) {
        GraphParams g(n, 1);
        CHECK(exact_domination_number(g) == 1);
        CHECK(exact_roman_domination_number(g) == 2);
        CHECK(exact_double_roman_domination_number(g) == 3);
    }
}

TEST_CASE("value-restricted double-Roman search matches the full search") {
    for (auto [n, t] : {std::pair{2u, 2u}, std::pair{2u, 4u}, std::pair{3u, 2u},
                        std::pair{4u, 2u}, std::pair{5u, 1u}}) {
        GraphParams g(n, t);
        SolverConfig restricted;
        restricted.variant = Variant::double_roman;
        restricted.restrict_values = true;
        SolverConfig full = restricted;
        full.restrict_values = false;
        CHECK(solve_exact(g, restricted) == solve_exact(g, full));
    }
}

TEST_CASE("solver matches closed forms on a spread of instances") {
    for (auto [n, t] : {std::pair{2u, 4u}, std::pair{2u, 5u}, std::pair{3u, 3u},
                        std::pair{4u, 2u}, std::pair{5u, 2u}, std::pair{6u, 1u}}) {
        GraphParams g(n, t);
        CHECK(exact_domination_number(g) == domination_number(g));
    }
    CHECK(exact_roman_domination_number(GraphParams(2, 4)) ==
          roman_domination_number(GraphParams(2, 4)));
    CHECK(exact_double_roman_domination_number(GraphParams(2, 4)) ==
          double_roman_domination_number(GraphParams(2, 4)));

    // 64-vertex instances sit exactly at the default solver cap.
    for (auto [n, t] : {std::pair{4u, 3u}, std::pair{2u, 6u}}) {
        GraphParams g(n, t);
        CHECK(exact_domination_number(g) == domination_number(g));
        CHECK(exact_roman_domination_number(g) == roman_domination_number(g));
        CHECK(exact_double_roman_domination_number(g) ==
              double_roman_domination_number(g));
    }
}

TEST_CASE("witness structures are optimal on solved instances") {
    for (auto [n, t] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
        GraphParams g(n, t);
        CHECK(build_dominating_set(g).size() == exact_domination_number(g));
        CHECK(roman_labeling(g).weight() == exact_roman_domination_number(g));
        CHECK(double_roman_labeling(g).weight() == exact_double_roman_domination_number(g));
    }
}

TEST_CASE("solver caps and determinism") {
    CHECK_THROWS_AS(exact_domination_number(GraphParams(3, 4)), capacity_error);

    SolverConfig wide;
    wide.vertex_cap = 100;
    CHECK(exact_domination_number(GraphParams(3, 4), wide) == 21);

    GraphParams g(3, 2);
    SolverConfig plain_cfg;
    CHECK(solve_exact(g, plain_cfg) == solve_exact(g, plain_cfg));

    SolverConfig unbounded;
    unbounded.lower_bound = SolverConfig::LowerBound::none;
    CHECK(exact_roman_domination_number(g, unbounded) == exact_roman_domination_number(g));
}

TEST_CASE("counting lower bound never exceeds a solved optimum") {
    for (auto [n, t] : {std::pair{2u, 2u}, std::pair{2u, 4u}, std::pair{3u, 2u},
                        std::pair{3u, 3u}, std::pair{4u, 2u}, std::pair{7u, 1u}}) {
        GraphParams g(n, t);
        CHECK(counting_lower_bound(g, Variant::plain) <= exact_domination_number(g));
        CHECK(counting_lower_bound(g, Variant::roman) <= exact_roman_domination_number(g));
        CHECK(counting_lower_bound(g, Variant::double_roman) <=
              exact_double_roman_domination_number(g));
    }
}

TEST_CASE("time budget raises a typed partial result") {
    GraphParams g(2, 5);
    SolverConfig cfg;
    cfg.variant = Variant::double_roman;
    cfg.restrict_values = false;
    cfg.time_budget = std::chrono::milliseconds(0);
    try {
        solve_exact(g, cfg);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.lower_bound() == counting_lower_bound(g, Variant::double_roman));
        if (e.incumbent()) CHECK(*e.incumbent() >= e.lower_bound());
    }
}

TEST_CASE("solver trace emits branch lines") {
    GraphParams g(2, 2);
    std::ostringstream trace;
    SolverConfig cfg;
    cfg.trace = &trace;
    CHECK(solve_exact(g, cfg) == 2);
    CHECK(trace.str().find("depth=0") != std::string::npos);
    CHECK(trace.str().find("choice=") != std::string::npos);
}

TEST_CASE("minimum pairwise distance") {
    CHECK(minimum_pairwise_distance(build_dominating_set(GraphParams(2, 3))) == 3);
    CHECK(minimum_pairwise_distance(build_dominating_set(GraphParams(3, 3))) == 3);

    GraphParams g22(2, 2);
    CHECK(minimum_pairwise_distance(
              VertexSet::from_words(g22, {W({1, 1}), W({1, 2})})) == 1);

    CHECK_THROWS_AS(
        minimum_pairwise_distance(VertexSet::from_words(g22, {W({1, 1})})),
        invalid_set_error);
    GraphParams big(10, 9);
    CHECK_THROWS_AS(minimum_pairwise_distance(VertexSet::from_words(
                        big, {Word::all_ones(9), Word::constant(2, 9)})),
                    capacity_error);
}

TEST_CASE("minimum pairwise distance agrees with pairwise BFS on random sets") {
    std::mt19937_64 rng(20240811);
    for (auto [n, t] : {std::pair{2, 4}, std::pair{3, 3}}) {
        GraphParams g(n, t);
        auto dense = oracle::DenseGraph::make(n, t);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> picks;
            std::uniform_int_distribution<int> pick(0, dense.size() - 1);
            while (picks.size() < 4) {
                const int c = pick(rng);
                if (std::find(picks.begin(), picks.end(), c) == picks.end()) {
                    picks.push_back(c);
                }
            }
            std::vector<Word> words;
            for (int p : picks) {
                std::vector<Label> labels(dense.words[p].begin(), dense.words[p].end());
                words.emplace_back(std::move(labels));
            }
            int expected = INT32_MAX;
            for (std::size_t a = 0; a < picks.size(); ++a) {
                for (std::size_t b = a + 1; b < picks.size(); ++b) {
                    expected = std::min(expected, dense.dist(picks[a], picks[b]));
                }
            }
            CHECK(minimum_pairwise_distance(VertexSet::from_words(g, std::move(words))) ==
                  static_cast<std::uint32_t>(expected));
        }
    }
}
