/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include "sierpdom/construction.hpp"
#include "sierpdom/domination.hpp"

using namespace sierpdom;

namespace {

Word W(std::initializer_list<Label> labels) { return Word(std::vector<Label>(labels)); }

Labeling all_value(const GraphParams& g, LabelingMode mode, std::uint8_t value) {
    Labeling f(g, mode);
    for (std::uint64_t r = 0; r < g.vertex_count(); ++r) f.assign(word_at_rank(g, r), value);
    return f;
}

}  // namespace

TEST_CASE("labeling storage invariants") {
    GraphParams g(2, 2);
    Labeling f(g, LabelingMode::roman);
    CHECK_THROWS_AS(f.assign(W({1, 1}), 0), invalid_word_error);
    CHECK_THROWS_AS(f.assign(W({1, 1}), 3), invalid_word_error);
    f.assign(W({1, 2}), 2);
    f.assign(W({2, 1}), 1);
    CHECK(f.weight() == 3);
    CHECK(f.support_size() == 2);
    CHECK(f.value(W({1, 2})) == 2);
    CHECK(f.value(W({2, 2})) == 0);
    f.assign(W({2, 1}), 2);  // overwrite adjusts weight
    CHECK(f.weight() == 4);

    Labeling d(g, LabelingMode::double_roman);
    CHECK_NOTHROW(d.assign(W({1, 1}), 3));
}

TEST_CASE("domination check examples") {
    CHECK(is_dominating(build_dominating_set(GraphParams(2, 3))));

    GraphParams g31(3, 1);
    CHECK(is_dominating(VertexSet::from_words(g31, {W({2})})));

    GraphParams g22(2, 2);
    VertexSet lone = VertexSet::from_words(g22, {W({1, 1})});
    CHECK_FALSE(is_dominating(lone));
    CHECK(find_undominated(lone) == W({2, 1}));
}

TEST_CASE("roman check examples") {
    GraphParams g22(2, 2);
    CHECK(is_roman(all_value(g22, LabelingMode::roman, 2)));

    Labeling two_twos(g22, LabelingMode::roman);
    two_twos.assign(W({1, 2}), 2);
    two_twos.assign(W({2, 1}), 2);
    CHECK(is_roman(two_twos));

    Labeling lone(g22, LabelingMode::roman);
    lone.assign(W({1, 1}), 2);
    CHECK_FALSE(is_roman(lone));
    CHECK(find_roman_violation(lone) == W({2, 1}));

    CHECK_THROWS_AS(is_roman(all_value(g22, LabelingMode::double_roman, 2)), mode_error);
}

TEST_CASE("double roman check examples") {
    GraphParams g22(2, 2);
    CHECK(is_double_roman(all_value(g22, LabelingMode::double_roman, 3)));

    Labeling weak(g22, LabelingMode::double_roman);
    weak.assign(W({1, 2}), 3);
    weak.assign(W({2, 1}), 2);
    CHECK_FALSE(is_double_roman(weak));  // 2.2's only neighbor carries a 2

    Labeling good(g22, LabelingMode::double_roman);
    good.assign(W({1, 2}), 3);
    good.assign(W({2, 2}), 2);
    CHECK(is_double_roman(good));

    Labeling one_needs_three(g22, LabelingMode::double_roman);
    one_needs_three.assign(W({1, 1}), 1);
    one_needs_three.assign(W({1, 2}), 2);
    one_needs_three.assign(W({2, 1}), 3);
    one_needs_three.assign(W({2, 2}), 2);
    CHECK(find_double_roman_violation(one_needs_three) == W({1, 1}));

    CHECK_THROWS_AS(is_double_roman(all_value(g22, LabelingMode::roman, 2)), mode_error);
}

TEST_CASE("canonical roman labeling") {
    CHECK(roman_labeling(GraphParams(2, 3)).weight() == 6);
    CHECK(roman_labeling(GraphParams(2, 2)).weight() == 3);

    Labeling f = roman_labeling(GraphParams(3, 2));
    CHECK(f.weight() == 5);
    CHECK(f.value(W({1, 1})) == 1);  // all-ones steps down for even t
    CHECK(f.value(W({2, 1})) == 2);
    CHECK(f.value(W({3, 1})) == 2);
    CHECK(is_roman(f));
}

TEST_CASE("canonical double roman labeling") {
    CHECK(double_roman_labeling(GraphParams(2, 3)).weight() == 9);
    CHECK(double_roman_labeling(GraphParams(2, 2)).weight() == 5);

    Labeling f = double_roman_labeling(GraphParams(3, 2));
    CHECK(f.weight() == 8);
    CHECK(f.value(W({1, 1})) == 2);
    CHECK(f.value(W({2, 1})) == 3);
    CHECK(is_double_roman(f));
}

TEST_CASE("closed forms") {
    CHECK(domination_number(GraphParams(3, 4)) == 21);
    CHECK(roman_domination_number(GraphParams(4, 2)) == 7);
    CHECK(double_roman_domination_number(GraphParams(2, 3)) == 9);
    CHECK(closed_form_number(GraphParams(3, 2), Variant::double_roman) == 8);
}

TEST_CASE("roman closed form equals the tight fraction forms") {
    for (std::uint64_t n = 2; n <= 8; ++n) {
        for (std::uint32_t t = 1; t <= 8; ++t) {
            GraphParams g(n, t);
            const std::uint64_t v = g.vertex_count();
            if (t % 2 == 1) {
                REQUIRE((2 * v + 2) % (n + 1) == 0);
                CHECK(roman_domination_number(g) == (2 * v + 2) / (n + 1));
            } else {
                REQUIRE((2 * v + n - 1) % (n + 1) == 0);
                CHECK(roman_domination_number(g) == (2 * v + n - 1) / (n + 1));
            }
        }
    }
}

TEST_CASE("variant numbers nest between the standard sandwich bounds") {
    for (std::uint64_t n = 2; n <= 6; ++n) {
        for (std::uint32_t t = 1; t <= 6; ++t) {
            GraphParams g(n, t);
            const std::uint64_t plain = domination_number(g);
            const std::uint64_t roman = roman_domination_number(g);
            const std::uint64_t dbl = double_roman_domination_number(g);
            CHECK(plain <= roman);
            CHECK(roman <= 2 * plain);
            CHECK(2 * plain <= dbl);
            CHECK(dbl <= 3 * plain);
        }
    }
}

TEST_CASE("witnesses validate and match the closed forms on small instances") {
    for (int n = 2; n <= 3; ++n) {
        for (int t = 1; t <= 3; ++t) {
            GraphParams g(n, t);
            VertexSet set = build_dominating_set(g);
            CHECK(is_dominating(set));
            CHECK(set.size() == domination_number(g));

            Labeling r = roman_labeling(g);
            CHECK(is_roman(r));
            CHECK(r.weight() == roman_domination_number(g));

            Labeling d = double_roman_labeling(g);
            CHECK(is_double_roman(d));
            CHECK(d.weight() == double_roman_domination_number(g));
        }
    }
}

TEST_CASE("verifier capacity") {
    GraphParams big(10, 9);
    VertexSet s = VertexSet::from_words(big, {Word::all_ones(9)});
    CHECK_THROWS_AS(is_dominating(s), capacity_error);
    Labeling f(big, LabelingMode::roman);
    f.assign(Word::all_ones(9), 2);
    CHECK_THROWS_AS(is_roman(f), capacity_error);
    CHECK_NOTHROW(is_dominating(build_dominating_set(GraphParams(2, 4)), 16));
}
