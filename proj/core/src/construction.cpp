/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sierpdom/construction.hpp"

#include <algorithm>
#include <string>

namespace sierpdom {

namespace {

// Throws unless the parent has the length required for a two-level lift.
void require_parent(const GraphParams& g, const Word& parent) {
    if (g.t() < 3) {
        throw invalid_word_error("extension blocks need t >= 3, got t=" + std::to_string(g.t()));
    }
    if (parent.length() != g.t() - 2) {
        throw invalid_word_error("parent length " + std::to_string(parent.length()) +
                                 " does not match t-2=" + std::to_string(g.t() - 2));
    }
    for (Label l : parent.labels()) {
        if (l < 1 || l > g.n()) {
            throw invalid_word_error("parent label " + std::to_string(l) + " outside [1, " +
                                     std::to_string(g.n()) + "]");
        }
    }
}

std::vector<Label> to_vec(const Word& w) {
    return {w.labels().begin(), w.labels().end()};
}

// The words 1^(t-2) . a . 1 surrounding the all-ones corner; the even-t
// replacement for the all-ones parent's blocks.
std::vector<Word> all_ones_bridge_block(const GraphParams& g) {
    std::vector<Word> out;
    out.reserve(g.n());
    std::vector<Label> buf(g.t(), 1);
    for (Label a = 1; a <= g.n(); ++a) {
        buf[g.t() - 2] = a;
        out.emplace_back(buf);
    }
    return out;
}

struct LiftSink {
    std::vector<Word>* materialized = nullptr;
    const std::function<void(const Word&)>* stream = nullptr;
    std::uint64_t emitted = 0;

    void operator()(Word&& w) {
        ++emitted;
        if (materialized) materialized->push_back(std::move(w));
        else (*stream)(w);
    }
    void operator()(const Word& w) {
        ++emitted;
        if (materialized) materialized->push_back(w);
        else (*stream)(w);
    }
};

// Emits the full two-level lift of `parents` (the set at level t-2) to level
// g.t(), in deterministic order: special all-ones blocks first, then the
// three extension blocks of every non-constant parent in sorted order.
void emit_lift(const GraphParams& g, const std::vector<Word>& parents, LiftSink& sink) {
    const std::uint32_t t = g.t();
    const Word ones = Word::all_ones(t - 2);
    if (parents.empty() || parents.front() != ones) {
        throw error("canonical set at level " + std::to_string(t - 2) +
                    " does not start with the all-ones word");
    }
    if (t % 2 == 1) {
        for (const Word& w : double_tail_block(g, ones)) sink(w);
        for (const Word& w : insert_pair_block(g, ones)) sink(w);
    } else {
        for (Word& w : all_ones_bridge_block(g)) sink(std::move(w));
    }
    for (std::size_t i = 1; i < parents.size(); ++i) {
        const Word& parent = parents[i];
        for (const Word& w : double_tail_block(g, parent)) sink(w);
        for (const Word& w : insert_pair_block(g, parent)) sink(w);
        for (const Word& w : flip_tail_block(g, parent)) sink(w);
    }
}

std::vector<Word> base_level_words(const GraphParams& g, std::uint32_t level) {
    if (level == 1) return {Word::all_ones(1)};
    std::vector<Word> out;
    out.reserve(g.n());
    for (Label a = 1; a <= g.n(); ++a) out.emplace_back(std::vector<Label>{a, 1});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::uint32_t last_mismatch_index(const Word& w) {
    for (std::uint32_t i = w.length() > 1 ? w.length() - 1 : 0; i-- > 0;) {
        if (w.at(i) != w.at(i + 1)) return i + 1;  // 1-based
    }
    throw constant_word_error("last mismatch index undefined on a constant word");
}

Word flip(const Word& w) {
    const std::uint32_t ell = last_mismatch_index(w);  // 1-based; throws on constant
    const std::uint32_t i = ell - 1;
    std::vector<Label> out = to_vec(w);
    const Label pivot = w.at(i);
    out[i] = w.at(i + 1);
    for (std::uint32_t j = i + 1; j < w.length(); ++j) out[j] = pivot;
    return Word(std::move(out));
}

VertexSet double_tail_block(const GraphParams& g, const Word& parent) {
    require_parent(g, parent);
    std::vector<Word> out;
    out.reserve(g.n());
    std::vector<Label> buf = to_vec(parent);
    buf.resize(g.t());
    for (Label a = 1; a <= g.n(); ++a) {
        buf[g.t() - 2] = a;
        buf[g.t() - 1] = a;
        out.emplace_back(buf);
    }
    return VertexSet::from_sorted_unchecked(g, std::move(out));
}

VertexSet insert_pair_block(const GraphParams& g, const Word& parent) {
    require_parent(g, parent);
    const Label anchor = parent.at(parent.length() - 1);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(g.n() - 1) * (g.n() - 1));
    std::vector<Label> buf = to_vec(parent);
    buf.resize(g.t());
    buf[g.t() - 1] = anchor;
    for (Label a = 1; a <= g.n(); ++a) {
        if (a == anchor) continue;
        buf[g.t() - 3] = a;
        for (Label b = 1; b <= g.n(); ++b) {
            if (b == anchor) continue;
            buf[g.t() - 2] = b;
            out.emplace_back(buf);
        }
    }
    return VertexSet::from_sorted_unchecked(g, std::move(out));
}

VertexSet flip_tail_block(const GraphParams& g, const Word& parent) {
    require_parent(g, parent);
    const std::uint32_t ell = last_mismatch_index(parent);  // throws on constant parent
    const Label pivot = parent.at(ell - 1);
    const Word flipped = flip(parent);
    std::vector<Word> out;
    out.reserve(g.n() - 1);
    std::vector<Label> buf = to_vec(flipped);
    buf.resize(g.t());
    buf[g.t() - 1] = pivot;
    for (Label a = 1; a <= g.n(); ++a) {
        if (a == pivot) continue;
        buf[g.t() - 2] = a;
        out.emplace_back(buf);
    }
    return VertexSet::from_sorted_unchecked(g, std::move(out));
}

std::uint64_t dominating_set_size(const GraphParams& g) {
    const std::uint64_t q = g.vertex_count() / (g.n() + 1);
    const std::uint64_t r = g.vertex_count() % (g.n() + 1);
    return q + (r != 0 ? 1 : 0);
}

BuildResult build_dominating_set_with_stats(const GraphParams& g, std::uint64_t member_cap) {
    const std::uint64_t expected = dominating_set_size(g);
    if (expected > member_cap) {
        throw capacity_error("canonical set has " + std::to_string(expected) +
                             " members, above the cap of " + std::to_string(member_cap));
    }
    const std::uint32_t base = (g.t() % 2 == 1) ? 1 : 2;
    std::vector<Word> current = base_level_words(g, base);
    std::vector<BuildLevelStats> levels;
    levels.push_back({base, 0, current.size(), current.size()});

    for (std::uint32_t level = base + 2; level <= g.t(); level += 2) {
        GraphParams lifted(g.n(), level);
        std::vector<Word> next;
        LiftSink sink{&next, nullptr};
        emit_lift(lifted, current, sink);
        std::sort(next.begin(), next.end());
        const std::uint64_t block_total = sink.emitted;
        if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
            throw error("extension blocks at level " + std::to_string(level) +
                        " are not disjoint");
        }
        levels.push_back({level, current.size(), block_total, next.size()});
        current = std::move(next);
    }
    if (current.size() != expected) {
        throw error("built set has " + std::to_string(current.size()) +
                    " members, closed form says " + std::to_string(expected));
    }
    return {VertexSet::from_sorted_unchecked(g, std::move(current)), std::move(levels)};
}

VertexSet build_dominating_set(const GraphParams& g, std::uint64_t member_cap) {
    return build_dominating_set_with_stats(g, member_cap).set;
}

VertexSet build_dominating_set_star(const GraphParams& g, std::uint64_t member_cap) {
    VertexSet full = build_dominating_set(g, member_cap);
    std::vector<Word> words = full.words();
    const Word ones = Word::all_ones(g.t());
    if (words.empty() || words.front() != ones) {
        throw error("canonical set does not contain the all-ones word");
    }
    words.erase(words.begin());
    return VertexSet::from_sorted_unchecked(g, std::move(words));
}

void stream_dominating_set(const GraphParams& g, const std::function<void(const Word&)>& sink,
                           std::uint64_t parent_member_cap) {
    if (g.t() <= 2) {
        for (const Word& w : base_level_words(g, g.t())) sink(w);
        return;
    }
    GraphParams parent_params(g.n(), g.t() - 2);
    VertexSet parents = build_dominating_set(parent_params, parent_member_cap);
    LiftSink s{nullptr, &sink};
    emit_lift(g, parents.words(), s);
}

}  // namespace sierpdom
