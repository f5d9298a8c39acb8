/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <optional>

#include "sierpdom/graph.hpp"
#include "sierpdom/labeling.hpp"

namespace sierpdom {

enum class Variant { plain, roman, double_roman };

/// First word (in rank order) not covered by the closed neighborhoods of s,
/// or nullopt if s dominates the graph. Requires n^t <= vertex_cap.
std::optional<Word> find_undominated(const VertexSet& s,
                                     std::uint64_t vertex_cap = default_vertex_cap);

/// True iff the closed neighborhoods of s cover every vertex.
bool is_dominating(const VertexSet& s, std::uint64_t vertex_cap = default_vertex_cap);

/// First word violating the Roman condition (a 0-valued word with no
/// 2-valued neighbor), or nullopt. f.mode() must be roman.
std::optional<Word> find_roman_violation(const Labeling& f,
                                         std::uint64_t vertex_cap = default_vertex_cap);

bool is_roman(const Labeling& f, std::uint64_t vertex_cap = default_vertex_cap);

/// First word violating either double-Roman condition: a 0-valued word
/// needs a 3-valued neighbor or two distinct 2-valued neighbors, and a
/// 1-valued word needs a neighbor valued >= 3. f.mode() must be double_roman.
std::optional<Word> find_double_roman_violation(const Labeling& f,
                                                std::uint64_t vertex_cap = default_vertex_cap);

bool is_double_roman(const Labeling& f, std::uint64_t vertex_cap = default_vertex_cap);

/// The minimum-weight Roman labeling derived from the canonical dominating
/// set: 2 on every member for odd t; for even t, 2 on every member except
/// the all-ones word, which gets 1. Weight: 2*ceil(n^t/(n+1)) for odd t,
/// one less for even t.
Labeling roman_labeling(const GraphParams& g, std::uint64_t member_cap = default_member_cap);

/// Same shape with 3 (and 2 on the all-ones word for even t). Weight:
/// 3*ceil(n^t/(n+1)) for odd t, one less for even t.
Labeling double_roman_labeling(const GraphParams& g,
                               std::uint64_t member_cap = default_member_cap);

/// Closed forms. All exact checked integer arithmetic.
std::uint64_t domination_number(const GraphParams& g);
std::uint64_t roman_domination_number(const GraphParams& g);
std::uint64_t double_roman_domination_number(const GraphParams& g);

/// Dispatch on variant.
std::uint64_t closed_form_number(const GraphParams& g, Variant v);

/// Counting lower bound ceil(k * n^t / (n+1)) with k = 1, 2, 3 per variant,
/// valid because no closed neighborhood has more than n+1 vertices.
std::uint64_t counting_lower_bound(const GraphParams& g, Variant v);

/// Outcome record for one instance: the closed form, the weight of the
/// constructed witness, and (when a solver ran) the independent exact value.
struct DominationReport {
    GraphParams params;
    Variant variant = Variant::plain;
    std::uint64_t formula_value = 0;
    std::uint64_t lower_bound = 0;
    std::optional<std::uint64_t> witness_weight = std::nullopt;
    std::optional<bool> witness_valid = std::nullopt;
    std::optional<std::uint64_t> exact_value = std::nullopt;

    /// True iff every computed piece is present and agrees with the formula.
    bool all_match() const {
        return witness_weight && witness_valid && *witness_valid && exact_value &&
               *witness_weight == formula_value && *exact_value == formula_value;
    }
};

}  // namespace sierpdom
