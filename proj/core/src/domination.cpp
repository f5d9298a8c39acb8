/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sierpdom/domination.hpp"

#include <string>

#include "sierpdom/construction.hpp"
#include "rank_bitset.hpp"

namespace sierpdom {

namespace {

void require_scan_cap(const GraphParams& g, std::uint64_t cap, const char* op) {
    if (g.vertex_count() > cap) {
        throw capacity_error(std::string(op) + ": scanning " +
                             std::to_string(g.vertex_count()) +
                             " vertices exceeds the cap of " + std::to_string(cap));
    }
}

void require_mode(const Labeling& f, LabelingMode wanted, const char* op) {
    if (f.mode() != wanted) {
        throw mode_error(std::string(op) + ": labeling has the wrong mode");
    }
}

// ceil(k * n^t / (n+1)) without overflow: n^t = q*(n+1) + r.
std::uint64_t ceil_scaled(const GraphParams& g, std::uint64_t k) {
    const std::uint64_t m = g.n() + 1;
    const std::uint64_t q = g.vertex_count() / m;
    const std::uint64_t r = g.vertex_count() % m;
    return k * q + (k * r + m - 1) / m;
}

}  // namespace

void Labeling::assign(const Word& w, std::uint8_t value) {
    if (value < 1 || value > max_value()) {
        throw invalid_word_error("label value " + std::to_string(value) +
                                 " outside [1, " + std::to_string(max_value()) + "]");
    }
    const std::uint64_t r = word_rank(params_, w);
    auto [it, inserted] = values_.try_emplace(r, value);
    if (!inserted) {
        weight_ -= it->second;
        it->second = value;
    }
    weight_ += value;
}

std::uint8_t Labeling::value(const Word& w) const {
    auto it = values_.find(word_rank(params_, w));
    return it == values_.end() ? 0 : it->second;
}

void Labeling::for_each_assignment(
    const std::function<void(const Word&, std::uint8_t)>& fn) const {
    for (const auto& [rank, value] : values_) {
        fn(word_at_rank(params_, rank), value);
    }
}

std::optional<Word> find_undominated(const VertexSet& s, std::uint64_t vertex_cap) {
    const GraphParams& g = s.params();
    require_scan_cap(g, vertex_cap, "find_undominated");
    detail::RankBitset covered(g.vertex_count());
    std::vector<std::uint64_t> nbrs;
    for (const Word& w : s) {
        const std::uint64_t r = word_rank(g, w);
        covered.set(r);
        nbrs.clear();
        neighbor_ranks(g, r, nbrs);
        for (std::uint64_t y : nbrs) covered.set(y);
    }
    const std::uint64_t miss =
        covered.first_rank_where([&](std::size_t i) { return ~covered.chunks()[i]; });
    if (miss == g.vertex_count()) return std::nullopt;
    return word_at_rank(g, miss);
}

bool is_dominating(const VertexSet& s, std::uint64_t vertex_cap) {
    return !find_undominated(s, vertex_cap).has_value();
}

std::optional<Word> find_roman_violation(const Labeling& f, std::uint64_t vertex_cap) {
    require_mode(f, LabelingMode::roman, "find_roman_violation");
    const GraphParams& g = f.params();
    require_scan_cap(g, vertex_cap, "find_roman_violation");
    detail::RankBitset nonzero(g.vertex_count());
    detail::RankBitset guarded(g.vertex_count());  // has a 2-valued neighbor
    std::vector<std::uint64_t> nbrs;
    for (const auto& [rank, value] : f.by_rank()) {
        nonzero.set(rank);
        if (value == 2) {
            nbrs.clear();
            neighbor_ranks(g, rank, nbrs);
            for (std::uint64_t y : nbrs) guarded.set(y);
        }
    }
    const std::uint64_t bad = nonzero.first_rank_where([&](std::size_t i) {
        return ~nonzero.chunks()[i] & ~guarded.chunks()[i];
    });
    if (bad == g.vertex_count()) return std::nullopt;
    return word_at_rank(g, bad);
}

bool is_roman(const Labeling& f, std::uint64_t vertex_cap) {
    return !find_roman_violation(f, vertex_cap).has_value();
}

std::optional<Word> find_double_roman_violation(const Labeling& f, std::uint64_t vertex_cap) {
    require_mode(f, LabelingMode::double_roman, "find_double_roman_violation");
    const GraphParams& g = f.params();
    require_scan_cap(g, vertex_cap, "find_double_roman_violation");
    const std::uint64_t count = g.vertex_count();
    detail::RankBitset nonzero(count), ones(count), has3(count), once(count), twice(count);
    std::vector<std::uint64_t> nbrs;
    for (const auto& [rank, value] : f.by_rank()) {
        nonzero.set(rank);
        if (value == 1) ones.set(rank);
        if (value < 2) continue;
        nbrs.clear();
        neighbor_ranks(g, rank, nbrs);
        for (std::uint64_t y : nbrs) {
            if (value == 3) {
                has3.set(y);
            } else if (once.test(y)) {
                twice.set(y);
            } else {
                once.set(y);
            }
        }
    }
    // 0-valued words need a 3-neighbor or two 2-neighbors; 1-valued words a 3-neighbor.
    const std::uint64_t bad = nonzero.first_rank_where([&](std::size_t i) {
        const std::uint64_t ok0 = has3.chunks()[i] | twice.chunks()[i];
        const std::uint64_t viol0 = ~nonzero.chunks()[i] & ~ok0;
        const std::uint64_t viol1 = ones.chunks()[i] & ~has3.chunks()[i];
        return viol0 | viol1;
    });
    if (bad == count) return std::nullopt;
    return word_at_rank(g, bad);
}

bool is_double_roman(const Labeling& f, std::uint64_t vertex_cap) {
    return !find_double_roman_violation(f, vertex_cap).has_value();
}

namespace {

// Shared builder for the two canonical labelings: `high` on every member of
// the canonical set, except that for even t the all-ones word steps down to
// high - 1. Correct because for even t no other member is adjacent to the
// all-ones word; that fact is re-checked here at run time.
Labeling labeling_from_set(const GraphParams& g, LabelingMode mode, std::uint8_t high,
                           std::uint64_t member_cap) {
    VertexSet set = build_dominating_set(g, member_cap);
    Labeling f(g, mode);
    const bool even = g.t() % 2 == 0;
    const Word ones = Word::all_ones(g.t());
    if (even) {
        for (const Word& nb : neighbors(g, ones)) {
            if (set.contains(nb)) {
                throw error("all-ones word unexpectedly adjacent to a set member");
            }
        }
    }
    for (const Word& w : set) {
        if (even && w == ones) {
            f.assign(w, static_cast<std::uint8_t>(high - 1));
        } else {
            f.assign(w, high);
        }
    }
    return f;
}

}  // namespace

Labeling roman_labeling(const GraphParams& g, std::uint64_t member_cap) {
    return labeling_from_set(g, LabelingMode::roman, 2, member_cap);
}

Labeling double_roman_labeling(const GraphParams& g, std::uint64_t member_cap) {
    return labeling_from_set(g, LabelingMode::double_roman, 3, member_cap);
}

std::uint64_t domination_number(const GraphParams& g) {
    return dominating_set_size(g);
}

std::uint64_t roman_domination_number(const GraphParams& g) {
    const std::uint64_t q = dominating_set_size(g);
    return 2 * q - (g.t() % 2 == 0 ? 1 : 0);
}

std::uint64_t double_roman_domination_number(const GraphParams& g) {
    const std::uint64_t q = dominating_set_size(g);
    return 3 * q - (g.t() % 2 == 0 ? 1 : 0);
}

std::uint64_t closed_form_number(const GraphParams& g, Variant v) {
    switch (v) {
        case Variant::plain: return domination_number(g);
        case Variant::roman: return roman_domination_number(g);
        case Variant::double_roman: return double_roman_domination_number(g);
    }
    throw error("unknown variant");
}

std::uint64_t counting_lower_bound(const GraphParams& g, Variant v) {
    switch (v) {
        case Variant::plain: return ceil_scaled(g, 1);
        case Variant::roman: return ceil_scaled(g, 2);
        case Variant::double_roman: return ceil_scaled(g, 3);
    }
    throw error("unknown variant");
}

}  // namespace sierpdom
