/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sierpdom/checks.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "sierpdom/construction.hpp"
#include "sierpdom/domination.hpp"
#include "sierpdom/exact_solver.hpp"
#include "sierpdom/io.hpp"

namespace sierpdom {

namespace {

std::string pair_text(const Word& a, const Word& b) {
    return word_to_string(a) + " / " + word_to_string(b);
}

// Distance check over an explicit pair list, word-local (no vertex cap).
// Returns the first violating pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> scan_pairs(
    const GraphParams& g, const VertexSet& s,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, pairs.size()));
    if (threads <= 1) {
        for (const auto& [i, j] : pairs) {
            if (bounded_distance(g, s[i], s[j], 2).has_value()) return std::make_pair(i, j);
        }
        return std::nullopt;
    }
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(threads);
    std::vector<std::thread> workers;
    for (unsigned k = 0; k < threads; ++k) {
        workers.emplace_back([&, k] {
            for (std::size_t idx = k; idx < pairs.size(); idx += threads) {
                const auto& [i, j] = pairs[idx];
                if (bounded_distance(g, s[i], s[j], 2).has_value()) {
                    found[k] = std::make_pair(i, j);
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& f : found) {
        if (f) return f;
    }
    return std::nullopt;
}

CheckOutcome distance_separation_check(const GraphParams& g, const VertexSet& target,
                                       const CheckOptions& opts) {
    CheckOutcome out{"pairwise_distance_separation", "exhaustive", true, ""};
    const std::uint64_t k = target.size();
    if (k < 2) {
        out.detail = "fewer than 2 members, nothing to separate";
        return out;
    }
    const std::uint64_t pairs = k * (k - 1) / 2;
    if (pairs <= opts.pair_threshold) {
        const std::uint32_t min_dist = minimum_pairwise_distance(target, opts.vertex_cap);
        out.pass = min_dist >= 3;
        out.detail = "minimum pairwise distance " + std::to_string(min_dist) + " over " +
                     std::to_string(pairs) + " pairs";
        return out;
    }
    // Sampled, word-local pair checks: a pair violates iff a radius-2 ball
    // search starting at one end reaches the other.
    out.mode = "sampled";
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    pair_list.reserve(opts.sample_size);
    while (pair_list.size() < opts.sample_size) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i != j) pair_list.emplace_back(std::min(i, j), std::max(i, j));
    }
    const auto violation = scan_pairs(g, target, pair_list, opts.threads);
    if (violation) {
        out.pass = false;
        out.detail = "pair below distance 3: " +
                     pair_text(target[violation->first], target[violation->second]);
    } else {
        out.detail = "no pair below distance 3 among " + std::to_string(pair_list.size()) +
                     " checked pairs";
    }
    return out;
}

// Observed distance from the all-ones word to the rest of the set; searched
// out to radius 3, reported as 4 if nothing is found that close.
std::uint32_t all_ones_distance(const GraphParams& g, const VertexSet& star) {
    const Word ones = Word::all_ones(g.t());
    std::uint32_t best = 4;
    for (const Word& w : star) {
        if (auto d = bounded_distance(g, ones, w, 3); d && *d < best) best = *d;
        if (best <= 2) break;  // cannot be 1 or 0; 2 is the floor
    }
    return best;
}

}  // namespace

CheckReport run_structural_checks(const GraphParams& g, const CheckOptions& opts) {
    BuildResult build = build_dominating_set_with_stats(g, opts.member_cap);
    const VertexSet& set = build.set;
    CheckReport report{g, {}, false, std::nullopt};

    {
        const std::uint64_t expected = dominating_set_size(g);
        CheckOutcome out{"cardinality_closed_form", "exhaustive", set.size() == expected,
                         "size " + std::to_string(set.size()) + ", closed form " +
                             std::to_string(expected)};
        report.results.push_back(std::move(out));
    }
    {
        bool ok = true;
        std::string detail;
        for (const BuildLevelStats& level : build.levels) {
            if (level.block_total != level.union_size) {
                ok = false;
                detail = "level " + std::to_string(level.level) + ": blocks total " +
                         std::to_string(level.block_total) + " but union " +
                         std::to_string(level.union_size);
                break;
            }
        }
        if (ok) {
            detail = std::to_string(build.levels.size()) +
                     " levels, zero duplicate incidents";
        }
        report.results.push_back({"block_disjointness", "exhaustive", ok, std::move(detail)});
    }
    {
        bool ok = set.contains(Word::all_ones(g.t()));
        std::string detail = "all-ones word present";
        for (Label a = 2; ok && a <= g.n(); ++a) {
            if (set.contains(Word::constant(a, g.t()))) {
                ok = false;
                detail = "unexpected constant word " +
                         word_to_string(Word::constant(a, g.t()));
            }
        }
        if (!set.contains(Word::all_ones(g.t()))) detail = "all-ones word missing";
        report.results.push_back({"constant_word_membership", "exhaustive", ok, std::move(detail)});
    }
    {
        CheckOutcome out{"dominating_cover", "exhaustive", true, ""};
        const auto gap = find_undominated(set, opts.vertex_cap);
        if (gap) {
            out.pass = false;
            out.detail = "uncovered vertex " + word_to_string(*gap);
        } else {
            out.detail = "all " + std::to_string(g.vertex_count()) + " vertices covered";
        }
        report.results.push_back(std::move(out));
    }
    {
        const bool odd = g.t() % 2 == 1;
        VertexSet star = build_dominating_set_star(g, opts.member_cap);
        const VertexSet& target = odd ? set : star;
        report.results.push_back(distance_separation_check(g, target, opts));
        if (!odd && !star.empty()) {
            report.all_ones_min_distance = all_ones_distance(g, star);
        }
    }

    report.all_pass = std::all_of(report.results.begin(), report.results.end(),
                                  [](const CheckOutcome& o) { return o.pass; });
    return report;
}

}  // namespace sierpdom
