/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sierpdom/errors.hpp"

namespace sierpdom {

using Label = std::uint32_t;

/// Default cap on n^t for operations that must visit every vertex
/// (BFS distance, domination scans, exhaustive structural checks).
/// Word-local operations are exempt from any cap.
inline constexpr std::uint64_t default_vertex_cap = 1'000'000;

/// Default cap on the number of materialized members of a built vertex set.
inline constexpr std::uint64_t default_member_cap = 10'000'000;

/// A vertex of S(K_n,t): a sequence of exactly t labels from {1..n}.
///
/// Comparison is lexicographic; this order is also the canonical enumeration
/// order used by word_rank / word_at_rank and by every serialized output.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Label> labels) : labels_(std::move(labels)) {}

    /// The constant word value^length.
    static Word constant(Label value, std::uint32_t length);
    static Word all_ones(std::uint32_t length) { return constant(1, length); }

    std::uint32_t length() const { return static_cast<std::uint32_t>(labels_.size()); }
    bool empty() const { return labels_.empty(); }

    /// 0-based access to the i-th label.
    Label at(std::uint32_t i) const { return labels_[i]; }
    std::span<const Label> labels() const { return labels_; }

    /// True iff every entry equals the first one (an extreme vertex).
    bool is_constant() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Label> labels_;
};

/// The pair (n,t) defining S(K_n,t). The graph is implicit: adjacency and
/// neighborhoods are always computed from words on demand, never stored.
class GraphParams {
public:
    /// Requires n >= 2, t >= 1 and n^t representable in 64 bits.
    GraphParams(std::uint32_t n, std::uint32_t t);

    std::uint32_t n() const { return n_; }
    std::uint32_t t() const { return t_; }
    std::uint64_t vertex_count() const { return vertex_count_; }

    bool operator==(const GraphParams&) const = default;

private:
    std::uint32_t n_;
    std::uint32_t t_;
    std::uint64_t vertex_count_;
};

/// An ordered, duplicate-free collection of words over a fixed (n,t).
/// Members are kept sorted lexicographically; duplicates are rejected, not
/// silently removed.
class VertexSet {
public:
    explicit VertexSet(GraphParams params) : params_(params) {}

    /// Validates every word, sorts, and rejects duplicates.
    static VertexSet from_words(GraphParams params, std::vector<Word> words);

    /// Trusts that `words` is sorted, unique and valid. Internal fast path
    /// for builders that establish the invariants themselves.
    static VertexSet from_sorted_unchecked(GraphParams params, std::vector<Word> words);

    const GraphParams& params() const { return params_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const { return words_; }

    std::vector<Word>::const_iterator begin() const { return words_.begin(); }
    std::vector<Word>::const_iterator end() const { return words_.end(); }

    /// Binary search over the sorted members.
    bool contains(const Word& w) const;

    bool operator==(const VertexSet&) const = default;

private:
    GraphParams params_;
    std::vector<Word> words_;
};

/// Throws invalid_word_error unless w has length t and labels in [1, n].
void validate_word(const GraphParams& g, const Word& w);

/// The adjacency rule of S(K_n,t): u ~ v iff at the first position s where
/// they differ, every later entry of u equals v_s and every later entry of v
/// equals u_s. Symmetric, irreflexive, O(t).
bool are_adjacent(const GraphParams& g, const Word& u, const Word& v);

/// All neighbors of v, sorted. Size n-1 for constant words, n otherwise.
/// Computed directly in O(n t): the neighbors within v's innermost clique
/// plus (for non-constant v) the single bridge neighbor across the last
/// mismatch position.
VertexSet neighbors(const GraphParams& g, const Word& v);

/// neighbors(v) together with v itself.
VertexSet closed_neighborhood(const GraphParams& g, const Word& v);

/// Degree of v: n-1 iff v is constant, else n.
std::uint32_t degree(const GraphParams& g, const Word& v);

/// Number of edges, (n^(t+1) - n)/2 in exact checked arithmetic.
std::uint64_t edge_count(const GraphParams& g);

/// Position of w in the lexicographic enumeration of all n^t words.
std::uint64_t word_rank(const GraphParams& g, const Word& w);

/// Inverse of word_rank.
Word word_at_rank(const GraphParams& g, std::uint64_t rank);

/// Appends the ranks of all neighbors of the word with rank r. Low-level
/// counterpart of neighbors() used by scans that index per-vertex arrays.
void neighbor_ranks(const GraphParams& g, std::uint64_t r, std::vector<std::uint64_t>& out);

/// Shortest-path distance by breadth-first search over the implicit
/// adjacency. Requires n^t <= vertex_cap.
std::uint32_t distance(const GraphParams& g, const Word& u, const Word& v,
                       std::uint64_t vertex_cap = default_vertex_cap);

/// Distance if it is <= max_distance, nullopt otherwise. Word-local: only
/// the ball around u is explored (at most (n+1)^max_distance words), so no
/// vertex cap applies.
std::optional<std::uint32_t> bounded_distance(const GraphParams& g, const Word& u,
                                              const Word& v, std::uint32_t max_distance);

}  // namespace sierpdom
