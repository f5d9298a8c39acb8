/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sierpdom/graph.hpp"

namespace sierpdom {

/// Largest 1-based index i with w_i != w_{i+1}. Undefined (throws
/// constant_word_error) on constant words; requires length >= 2.
std::uint32_t last_mismatch_index(const Word& w);

/// The unique neighbor of a non-constant word obtained by swapping the entry
/// at the last mismatch position with the constant tail: for i =
/// last_mismatch_index(w), the result carries w_{i+1} at position i and w_i
/// on every later position. An involution, and always adjacent to w.
Word flip(const Word& w);

/// { parent . aa | a in [n] }: the n extensions of a length t-2 parent by a
/// doubled label. Requires parent length == t-2 and t >= 3.
VertexSet double_tail_block(const GraphParams& g, const Word& parent);

/// { parent_1 .. parent_{m-1} . a . b . parent_m | a, b in [n] minus the
/// parent's last label }: the (n-1)^2 extensions that wrap two free labels
/// before the parent's final label. Requires parent length == t-2, t >= 3.
VertexSet insert_pair_block(const GraphParams& g, const Word& parent);

/// { flip(parent) . a . p | a in [n] minus p }, where p is the parent's label
/// at its last mismatch position: the n-1 extensions anchored at the flipped
/// parent. Requires a non-constant parent of length t-2, t >= 3.
VertexSet flip_tail_block(const GraphParams& g, const Word& parent);

/// ceil(n^t / (n+1)), the size of the canonical dominating set, in exact
/// checked integer arithmetic.
std::uint64_t dominating_set_size(const GraphParams& g);

/// Per-level accounting of one two-level lift during the recursive build.
/// block_total is the sum of the generated block sizes; union_size the size
/// of their union. The two are equal because the blocks are pairwise
/// disjoint; the builder verifies that and throws on any duplicate.
struct BuildLevelStats {
    std::uint32_t level = 0;
    std::uint64_t parents = 0;
    std::uint64_t block_total = 0;
    std::uint64_t union_size = 0;
};

struct BuildResult {
    VertexSet set;
    std::vector<BuildLevelStats> levels;
};

/// Builds the canonical dominating set of S(K_n,t) by lifting two levels at
/// a time from the base (the all-ones singleton for odd t, the n words a.1
/// for even t). The result always contains the all-ones word and no other
/// constant word, and has exactly dominating_set_size(g) members.
/// Throws capacity_error when that size exceeds member_cap.
BuildResult build_dominating_set_with_stats(const GraphParams& g,
                                            std::uint64_t member_cap = default_member_cap);

VertexSet build_dominating_set(const GraphParams& g,
                               std::uint64_t member_cap = default_member_cap);

/// The canonical dominating set minus the all-ones word.
VertexSet build_dominating_set_star(const GraphParams& g,
                                    std::uint64_t member_cap = default_member_cap);

/// Streams every member of the canonical dominating set without
/// materializing the final level; only the level t-2 set is held in memory.
/// Emission order is deterministic but not globally sorted. parent_member_cap
/// bounds the materialized parent set.
void stream_dominating_set(const GraphParams& g, const std::function<void(const Word&)>& sink,
                           std::uint64_t parent_member_cap = default_member_cap);

}  // namespace sierpdom
