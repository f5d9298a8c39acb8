/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierpdom/graph.hpp"

namespace sierpdom {

struct CheckOptions {
    std::uint64_t vertex_cap = default_vertex_cap;
    std::uint64_t member_cap = default_member_cap;

    /// Above this many member pairs the distance check switches from
    /// exhaustive to seeded sampling.
    std::uint64_t pair_threshold = 1'000'000;
    std::uint64_t sample_size = 10'000;
    std::uint64_t seed = 1;

    /// Worker threads for the sampled distance check; 0 = hardware default.
    unsigned threads = 0;
};

struct CheckOutcome {
    std::string name;
    std::string mode;  // "exhaustive" or "sampled"
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    GraphParams params;
    std::vector<CheckOutcome> results;
    bool all_pass = false;

    /// Even t only: observed distance from the all-ones word to the rest of
    /// the set. Reported, not asserted (the separation guarantee covers the
    /// other pairs).
    std::optional<std::uint32_t> all_ones_min_distance;
};

/// Builds the canonical dominating set and verifies its structural
/// guarantees on this instance: closed-form cardinality, per-level block
/// disjointness, constant-word membership, domination, and pairwise
/// distance separation (>= 3 within the set for odd t, within the set minus
/// the all-ones word for even t).
CheckReport run_structural_checks(const GraphParams& g, const CheckOptions& opts = {});

}  // namespace sierpdom
