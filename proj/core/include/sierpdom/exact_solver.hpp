/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "sierpdom/domination.hpp"
#include "sierpdom/graph.hpp"

namespace sierpdom {

/// Configuration of the branch-and-bound oracle. The solver is a deliberate
/// second route to the closed forms: it never consults the canonical
/// construction or the formulas.
struct SolverConfig {
    Variant variant = Variant::plain;

    /// double_roman only: search values {0,2,3} instead of {0,1,2,3}.
    /// Both settings return the same optimum; the restricted search exists
    /// so that equality can be validated empirically.
    bool restrict_values = true;

    /// Hard cap on n^t for full search.
    std::uint64_t vertex_cap = 64;

    std::optional<std::chrono::milliseconds> time_budget;

    enum class LowerBound { degree_bound, none };
    LowerBound lower_bound = LowerBound::degree_bound;

    /// When set, one line per branch decision: depth, choice, bound, incumbent.
    std::ostream* trace = nullptr;
};

/// Minimum size of a dominating set, by branch and bound: always branch on
/// the lowest-rank uncovered vertex, trying each member of its closed
/// neighborhood (in rank order) as the next dominator; prune when
/// size + ceil(uncovered/(n+1)) reaches the incumbent.
std::uint64_t exact_domination_number(const GraphParams& g, const SolverConfig& cfg = {});

/// Minimum weight of a Roman labeling. Branches on the lowest-rank
/// unsatisfied vertex with choices "place 2 at some closed neighbor" and
/// "assign 1 here".
std::uint64_t exact_roman_domination_number(const GraphParams& g, const SolverConfig& cfg = {});

/// Minimum weight of a double-Roman labeling, over {0,2,3} or {0,1,2,3}
/// per cfg.restrict_values.
std::uint64_t exact_double_roman_domination_number(const GraphParams& g,
                                                   const SolverConfig& cfg = {});

/// Dispatch on cfg.variant.
std::uint64_t solve_exact(const GraphParams& g, const SolverConfig& cfg);

/// Minimum shortest-path distance over all unordered pairs of s, via a
/// single multi-source BFS (each vertex keeps its nearest source; the
/// minimum is realized on an edge joining two differently-owned vertices).
/// Requires |s| >= 2 and n^t <= vertex_cap.
std::uint32_t minimum_pairwise_distance(const VertexSet& s,
                                        std::uint64_t vertex_cap = default_vertex_cap);

}  // namespace sierpdom
