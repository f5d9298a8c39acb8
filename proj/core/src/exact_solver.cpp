/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sierpdom/exact_solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <ostream>
#include <string>

#include "sierpdom/io.hpp"

namespace sierpdom {

namespace {

using Clock = std::chrono::steady_clock;

// Compact view of a small instance: every vertex is its rank, neighborhoods
// are precomputed. Used only below the solver vertex cap.
struct SearchGraph {
    GraphParams params;
    std::uint32_t count;
    std::vector<std::vector<std::uint32_t>> open;    // sorted open neighborhoods
    std::vector<std::vector<std::uint32_t>> closed;  // sorted closed neighborhoods

    explicit SearchGraph(const GraphParams& g)
        : params(g), count(static_cast<std::uint32_t>(g.vertex_count())) {
        open.resize(count);
        closed.resize(count);
        std::vector<std::uint64_t> nbrs;
        for (std::uint32_t r = 0; r < count; ++r) {
            nbrs.clear();
            neighbor_ranks(g, r, nbrs);
            std::sort(nbrs.begin(), nbrs.end());
            for (std::uint64_t y : nbrs) open[r].push_back(static_cast<std::uint32_t>(y));
            closed[r] = open[r];
            closed[r].insert(std::lower_bound(closed[r].begin(), closed[r].end(), r), r);
        }
    }
};

struct BudgetGuard {
    std::optional<Clock::time_point> deadline;
    std::uint64_t root_lb = 0;
    const std::uint64_t* incumbent = nullptr;
    std::uint64_t nodes = 0;

    void tick() {
        ++nodes;
        if (deadline && Clock::now() > *deadline) {
            std::optional<std::uint64_t> best;
            if (incumbent && *incumbent != UINT64_MAX) best = *incumbent;
            throw budget_error("exact search exceeded its time budget", best, root_lb);
        }
    }
};

// ceil(k * r / (n+1)); valid since one added dominator/value can newly
// satisfy at most n+1 vertices at cost k or less per vertex.
std::uint64_t ratio_bound(std::uint64_t k, std::uint64_t r, std::uint32_t n) {
    return (k * r + n) / (n + 1);
}

void trace_line(std::ostream* os, const GraphParams& g, int depth, std::uint8_t value,
                std::uint32_t where, std::uint64_t bound, std::uint64_t incumbent) {
    if (!os) return;
    *os << "depth=" << depth << " choice=" << static_cast<int>(value) << '@'
        << word_to_string(word_at_rank(g, where)) << " bound=" << bound << " incumbent=";
    if (incumbent == UINT64_MAX) *os << "none";
    else *os << incumbent;
    *os << '\n';
}

class PlainSearch {
public:
    PlainSearch(const SearchGraph& sg, const SolverConfig& cfg, BudgetGuard& budget)
        : sg_(sg), cfg_(cfg), budget_(budget), cover_count_(sg.count, 0) {}

    std::uint64_t run() {
        recurse(0);
        return incumbent_;
    }

    const std::vector<std::uint32_t>& best() const { return best_; }
    const std::uint64_t& incumbent_ref() const { return incumbent_; }

private:
    void recurse(int depth) {
        budget_.tick();
        const std::uint64_t uncovered = sg_.count - covered_total_;
        if (uncovered == 0) {
            incumbent_ = chosen_.size();
            best_ = chosen_;
            return;
        }
        std::uint64_t lb = 1;
        if (cfg_.lower_bound == SolverConfig::LowerBound::degree_bound) {
            lb = ratio_bound(1, uncovered, sg_.params.n());
        }
        if (chosen_.size() + lb >= incumbent_) return;

        std::uint32_t u = 0;
        while (cover_count_[u] != 0) ++u;  // lowest-rank uncovered vertex
        for (std::uint32_t w : sg_.closed[u]) {
            trace_line(cfg_.trace, sg_.params, depth, 1, w, chosen_.size() + lb, incumbent_);
            chosen_.push_back(w);
            std::uint32_t newly = 0;
            for (std::uint32_t y : sg_.closed[w]) {
                if (cover_count_[y]++ == 0) ++newly;
            }
            covered_total_ += newly;
            recurse(depth + 1);
            covered_total_ -= newly;
            for (std::uint32_t y : sg_.closed[w]) --cover_count_[y];
            chosen_.pop_back();
        }
    }

    const SearchGraph& sg_;
    const SolverConfig& cfg_;
    BudgetGuard& budget_;
    std::vector<std::uint16_t> cover_count_;
    std::uint64_t covered_total_ = 0;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint32_t> best_;
    std::uint64_t incumbent_ = UINT64_MAX;
};

// Minimum-weight search shared by the Roman and double-Roman variants.
// Branches on the lowest-rank unsatisfied vertex; assignments are never
// overwritten, so each branch step strictly grows the assigned set.
class WeightedSearch {
public:
    WeightedSearch(const SearchGraph& sg, const SolverConfig& cfg, BudgetGuard& budget,
                   bool double_roman, bool allow_ones)
        : sg_(sg),
          cfg_(cfg),
          budget_(budget),
          double_roman_(double_roman),
          allow_ones_(allow_ones),
          value_(sg.count, 0),
          assigned_(sg.count, 0),
          twos_(sg.count, 0),
          threes_(sg.count, 0) {}

    std::uint64_t run() {
        recurse(0);
        return incumbent_;
    }

    const std::vector<std::uint8_t>& best() const { return best_; }
    const std::uint64_t& incumbent_ref() const { return incumbent_; }

private:
    bool satisfied(std::uint32_t u) const {
        const std::uint8_t v = value_[u];
        if (!double_roman_) return v > 0 || twos_[u] > 0;
        if (v >= 2) return true;
        if (v == 1) return threes_[u] > 0;
        return threes_[u] > 0 || twos_[u] >= 2;
    }

    void apply(std::uint32_t w, std::uint8_t v) {
        value_[w] = v;
        assigned_[w] = 1;
        weight_ += v;
        if (v == 2) {
            for (std::uint32_t y : sg_.open[w]) ++twos_[y];
        } else if (v == 3) {
            for (std::uint32_t y : sg_.open[w]) ++threes_[y];
        }
    }

    void undo(std::uint32_t w) {
        const std::uint8_t v = value_[w];
        if (v == 2) {
            for (std::uint32_t y : sg_.open[w]) --twos_[y];
        } else if (v == 3) {
            for (std::uint32_t y : sg_.open[w]) --threes_[y];
        }
        weight_ -= v;
        assigned_[w] = 0;
        value_[w] = 0;
    }

    void branch(std::uint32_t w, std::uint8_t v, int depth, std::uint64_t bound) {
        trace_line(cfg_.trace, sg_.params, depth, v, w, bound, incumbent_);
        apply(w, v);
        recurse(depth + 1);
        undo(w);
    }

    void recurse(int depth) {
        budget_.tick();
        std::uint64_t unsat = 0;
        std::uint32_t first = sg_.count;
        for (std::uint32_t u = 0; u < sg_.count; ++u) {
            if (!satisfied(u)) {
                ++unsat;
                if (first == sg_.count) first = u;
            }
        }
        if (unsat == 0) {
            if (weight_ < incumbent_) {
                incumbent_ = weight_;
                best_ = value_;
            }
            return;
        }
        std::uint64_t lb = 1;
        if (cfg_.lower_bound == SolverConfig::LowerBound::degree_bound) {
            lb = ratio_bound(double_roman_ ? 3 : 2, unsat, sg_.params.n());
        }
        const std::uint64_t bound = weight_ + lb;
        if (bound >= incumbent_) return;

        const std::uint32_t u = first;
        if (value_[u] == 1) {
            // A 1-valued vertex still waiting for a neighbor valued >= 3.
            for (std::uint32_t w : sg_.open[u]) {
                if (!assigned_[w]) branch(w, 3, depth, bound);
            }
            return;
        }
        if (!double_roman_) {
            for (std::uint32_t w : sg_.closed[u]) {
                if (!assigned_[w]) branch(w, 2, depth, bound);
            }
            branch(u, 1, depth, bound);
            return;
        }
        for (std::uint32_t w : sg_.closed[u]) {
            if (!assigned_[w]) branch(w, 3, depth, bound);
        }
        branch(u, 2, depth, bound);
        for (std::uint32_t w : sg_.open[u]) {
            if (!assigned_[w]) branch(w, 2, depth, bound);
        }
        if (allow_ones_) {
            // After taking the 1, u still needs a neighbor valued >= 3; the
            // branch is viable only while an unassigned neighbor slot exists.
            bool has_open_slot = false;
            for (std::uint32_t w : sg_.open[u]) {
                if (!assigned_[w]) {
                    has_open_slot = true;
                    break;
                }
            }
            if (has_open_slot) branch(u, 1, depth, bound);
        }
    }

    const SearchGraph& sg_;
    const SolverConfig& cfg_;
    BudgetGuard& budget_;
    bool double_roman_;
    bool allow_ones_;
    std::vector<std::uint8_t> value_;
    std::vector<std::uint8_t> assigned_;
    std::vector<std::uint16_t> twos_;
    std::vector<std::uint16_t> threes_;
    std::uint64_t weight_ = 0;
    std::vector<std::uint8_t> best_;
    std::uint64_t incumbent_ = UINT64_MAX;
};

SearchGraph make_search_graph(const GraphParams& g, const SolverConfig& cfg) {
    if (g.vertex_count() > cfg.vertex_cap) {
        throw capacity_error("exact solve on " + std::to_string(g.vertex_count()) +
                             " vertices exceeds the solver cap of " +
                             std::to_string(cfg.vertex_cap));
    }
    return SearchGraph(g);
}

BudgetGuard make_budget(const GraphParams& g, const SolverConfig& cfg, Variant variant) {
    BudgetGuard b;
    if (cfg.time_budget) b.deadline = Clock::now() + *cfg.time_budget;
    b.root_lb = counting_lower_bound(g, variant);
    return b;
}

// Every search re-verifies its best solution through the independent
// verifiers before reporting; guards the incremental bookkeeping.
void verify_labeling(const GraphParams& g, LabelingMode mode,
                     const std::vector<std::uint8_t>& values) {
    Labeling f(g, mode);
    for (std::uint32_t r = 0; r < values.size(); ++r) {
        if (values[r] != 0) f.assign(word_at_rank(g, r), values[r]);
    }
    const bool ok = mode == LabelingMode::roman ? is_roman(f, g.vertex_count())
                                                : is_double_roman(f, g.vertex_count());
    if (!ok) throw error("exact search produced an invalid labeling");
}

}  // namespace

std::uint64_t exact_domination_number(const GraphParams& g, const SolverConfig& cfg) {
    SolverConfig c = cfg;
    c.variant = Variant::plain;
    return solve_exact(g, c);
}

std::uint64_t solve_exact(const GraphParams& g, const SolverConfig& cfg) {
    SearchGraph sg = make_search_graph(g, cfg);
    if (cfg.variant == Variant::plain) {
        BudgetGuard budget = make_budget(g, cfg, cfg.variant);
        PlainSearch search(sg, cfg, budget);
        budget.incumbent = &search.incumbent_ref();
        const std::uint64_t value = search.run();
        std::vector<Word> words;
        words.reserve(search.best().size());
        for (std::uint32_t r : search.best()) words.push_back(word_at_rank(g, r));
        if (!is_dominating(VertexSet::from_words(g, std::move(words)), g.vertex_count())) {
            throw error("exact search produced a non-dominating set");
        }
        return value;
    }
    const bool dr = cfg.variant == Variant::double_roman;
    const bool allow_ones = !dr || !cfg.restrict_values;
    BudgetGuard budget = make_budget(g, cfg, cfg.variant);
    WeightedSearch search(sg, cfg, budget, dr, allow_ones);
    budget.incumbent = &search.incumbent_ref();
    const std::uint64_t value = search.run();
    verify_labeling(g, dr ? LabelingMode::double_roman : LabelingMode::roman, search.best());
    return value;
}

std::uint64_t exact_roman_domination_number(const GraphParams& g, const SolverConfig& cfg) {
    SolverConfig c = cfg;
    c.variant = Variant::roman;
    return solve_exact(g, c);
}

std::uint64_t exact_double_roman_domination_number(const GraphParams& g,
                                                   const SolverConfig& cfg) {
    SolverConfig c = cfg;
    c.variant = Variant::double_roman;
    return solve_exact(g, c);
}

std::uint32_t minimum_pairwise_distance(const VertexSet& s, std::uint64_t vertex_cap) {
    const GraphParams& g = s.params();
    if (s.size() < 2) {
        throw invalid_set_error("minimum pairwise distance needs at least 2 members");
    }
    if (g.vertex_count() > vertex_cap) {
        throw capacity_error("pairwise distance scan on " + std::to_string(g.vertex_count()) +
                             " vertices exceeds the cap of " + std::to_string(vertex_cap));
    }
    const std::uint64_t count = g.vertex_count();
    constexpr std::uint32_t unowned = UINT32_MAX;
    std::vector<std::uint32_t> owner(count, unowned);
    std::vector<std::uint32_t> dist(count, 0);
    std::deque<std::uint64_t> queue;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::uint64_t r = word_rank(g, s[i]);
        owner[r] = static_cast<std::uint32_t>(i);
        queue.push_back(r);
    }
    // Nearest-source BFS; the minimum pairwise distance is realized on an
    // edge joining two differently-owned vertices.
    std::uint32_t best = UINT32_MAX;
    std::vector<std::uint64_t> nbrs;
    while (!queue.empty()) {
        const std::uint64_t x = queue.front();
        queue.pop_front();
        nbrs.clear();
        neighbor_ranks(g, x, nbrs);
        for (std::uint64_t y : nbrs) {
            if (owner[y] == unowned) {
                owner[y] = owner[x];
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            } else if (owner[y] != owner[x]) {
                best = std::min(best, dist[x] + dist[y] + 1);
            }
        }
    }
    return best;
}

}  // namespace sierpdom
