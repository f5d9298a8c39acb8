/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sierpdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace sierpdom {

namespace {

std::string describe(const GraphParams& g) {
    return "S(K_" + std::to_string(g.n()) + "," + std::to_string(g.t()) + ")";
}

// n^t, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

// 0-based index of the last position i with w[i] != w[i+1], or -1.
int last_mismatch_pos(const Word& w) {
    for (int i = static_cast<int>(w.length()) - 2; i >= 0; --i) {
        if (w.at(i) != w.at(i + 1)) return i;
    }
    return -1;
}

// The bridge neighbor of a non-constant word: swap the entry at the last
// mismatch position with the constant tail that follows it.
Word bridge_neighbor(const Word& w, int i) {
    std::vector<Label> out(w.labels().begin(), w.labels().end());
    const Label pivot = w.at(i);
    out[i] = w.at(i + 1);
    for (std::uint32_t j = i + 1; j < w.length(); ++j) out[j] = pivot;
    return Word(std::move(out));
}

void require_cap(const GraphParams& g, std::uint64_t cap, const char* op) {
    if (g.vertex_count() > cap) {
        throw capacity_error(std::string(op) + ": " + describe(g) + " has " +
                             std::to_string(g.vertex_count()) +
                             " vertices, above the cap of " + std::to_string(cap));
    }
}

}  // namespace

Word Word::constant(Label value, std::uint32_t length) {
    return Word(std::vector<Label>(length, value));
}

bool Word::is_constant() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [&](Label l) { return l == labels_.front(); });
}

GraphParams::GraphParams(std::uint32_t n, std::uint32_t t) : n_(n), t_(t) {
    if (n < 2) throw invalid_params_error("n must be at least 2, got " + std::to_string(n));
    if (t < 1) throw invalid_params_error("t must be at least 1, got " + std::to_string(t));
    auto count = checked_pow(n, t);
    if (!count) {
        throw invalid_params_error("n^t overflows 64 bits for n=" + std::to_string(n) +
                                   ", t=" + std::to_string(t));
    }
    vertex_count_ = *count;
}

VertexSet VertexSet::from_words(GraphParams params, std::vector<Word> words) {
    for (const Word& w : words) validate_word(params, w);
    std::sort(words.begin(), words.end());
    auto dup = std::adjacent_find(words.begin(), words.end());
    if (dup != words.end()) {
        throw invalid_set_error("duplicate word in vertex set");
    }
    return from_sorted_unchecked(params, std::move(words));
}

VertexSet VertexSet::from_sorted_unchecked(GraphParams params, std::vector<Word> words) {
    VertexSet s(params);
    s.words_ = std::move(words);
    return s;
}

bool VertexSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

void validate_word(const GraphParams& g, const Word& w) {
    if (w.length() != g.t()) {
        throw invalid_word_error("word length " + std::to_string(w.length()) +
                                 " does not match t=" + std::to_string(g.t()));
    }
    for (Label l : w.labels()) {
        if (l < 1 || l > g.n()) {
            throw invalid_word_error("label " + std::to_string(l) + " outside [1, " +
                                     std::to_string(g.n()) + "]");
        }
    }
}

bool are_adjacent(const GraphParams& g, const Word& u, const Word& v) {
    validate_word(g, u);
    validate_word(g, v);
    const std::uint32_t t = g.t();
    std::uint32_t s = 0;
    while (s < t && u.at(s) == v.at(s)) ++s;
    if (s == t) return false;  // equal words
    for (std::uint32_t j = s + 1; j < t; ++j) {
        if (u.at(j) != v.at(s) || v.at(j) != u.at(s)) return false;
    }
    return true;
}

VertexSet neighbors(const GraphParams& g, const Word& v) {
    validate_word(g, v);
    std::vector<Word> out;
    out.reserve(g.n());
    const std::uint32_t last = v.length() - 1;
    std::vector<Label> buf(v.labels().begin(), v.labels().end());
    for (Label c = 1; c <= g.n(); ++c) {
        if (c == v.at(last)) continue;
        buf[last] = c;
        out.emplace_back(buf);
    }
    if (int i = last_mismatch_pos(v); i >= 0) {
        out.push_back(bridge_neighbor(v, i));
    }
    std::sort(out.begin(), out.end());
    return VertexSet::from_sorted_unchecked(g, std::move(out));
}

VertexSet closed_neighborhood(const GraphParams& g, const Word& v) {
    VertexSet open = neighbors(g, v);
    std::vector<Word> out = open.words();
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return VertexSet::from_sorted_unchecked(g, std::move(out));
}

std::uint32_t degree(const GraphParams& g, const Word& v) {
    validate_word(g, v);
    return v.is_constant() ? g.n() - 1 : g.n();
}

std::uint64_t edge_count(const GraphParams& g) {
    // (n^(t+1) - n) / 2 without forming n^(t+1): halve the even factor first.
    const std::uint64_t n = g.n();
    const std::uint64_t inner = g.vertex_count() - 1;  // n^t - 1
    std::uint64_t a = n, b = inner;
    if (a % 2 == 0) {
        a /= 2;
    } else {
        b /= 2;  // n odd implies n^t - 1 even
    }
    if (b != 0 && a > UINT64_MAX / b) {
        throw capacity_error("edge count overflows 64 bits for " + describe(g));
    }
    return a * b;
}

std::uint64_t word_rank(const GraphParams& g, const Word& w) {
    validate_word(g, w);
    std::uint64_t r = 0;
    for (Label l : w.labels()) r = r * g.n() + (l - 1);
    return r;
}

Word word_at_rank(const GraphParams& g, std::uint64_t rank) {
    if (rank >= g.vertex_count()) {
        throw invalid_word_error("rank " + std::to_string(rank) + " out of range for " +
                                 describe(g));
    }
    std::vector<Label> out(g.t());
    for (std::uint32_t i = g.t(); i-- > 0;) {
        out[i] = static_cast<Label>(rank % g.n()) + 1;
        rank /= g.n();
    }
    return Word(std::move(out));
}

void neighbor_ranks(const GraphParams& g, std::uint64_t r, std::vector<std::uint64_t>& out) {
    const std::uint64_t n = g.n();
    const std::uint32_t t = g.t();
    // digits[i] in [0, n): label minus one, most significant first
    std::vector<std::uint32_t> digits(t);
    std::uint64_t rest = r;
    for (std::uint32_t i = t; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rest % n);
        rest /= n;
    }
    const std::uint64_t base = r - digits[t - 1];
    for (std::uint64_t c = 0; c < n; ++c) {
        if (c != digits[t - 1]) out.push_back(base + c);
    }
    for (int i = static_cast<int>(t) - 2; i >= 0; --i) {
        if (digits[i] != digits[i + 1]) {
            const std::uint32_t pivot = digits[i];
            std::uint64_t b = 0;
            for (std::uint32_t j = 0; j < t; ++j) {
                std::uint32_t d = digits[j];
                if (j == static_cast<std::uint32_t>(i)) d = digits[i + 1];
                else if (j > static_cast<std::uint32_t>(i)) d = pivot;
                b = b * n + d;
            }
            out.push_back(b);
            break;
        }
    }
}

std::uint32_t distance(const GraphParams& g, const Word& u, const Word& v,
                       std::uint64_t vertex_cap) {
    validate_word(g, u);
    validate_word(g, v);
    if (u == v) return 0;
    require_cap(g, vertex_cap, "distance");
    const std::uint64_t target = word_rank(g, v);
    std::vector<std::int32_t> dist(g.vertex_count(), -1);
    std::deque<std::uint64_t> queue;
    std::vector<std::uint64_t> nbrs;
    const std::uint64_t start = word_rank(g, u);
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        const std::uint64_t x = queue.front();
        queue.pop_front();
        nbrs.clear();
        neighbor_ranks(g, x, nbrs);
        for (std::uint64_t y : nbrs) {
            if (dist[y] != -1) continue;
            dist[y] = dist[x] + 1;
            if (y == target) return static_cast<std::uint32_t>(dist[y]);
            queue.push_back(y);
        }
    }
    throw error("graph unexpectedly disconnected");  // cannot happen
}

std::optional<std::uint32_t> bounded_distance(const GraphParams& g, const Word& u,
                                              const Word& v, std::uint32_t max_distance) {
    validate_word(g, u);
    validate_word(g, v);
    if (u == v) return 0;
    const std::uint64_t target = word_rank(g, v);
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::vector<std::uint64_t> frontier{word_rank(g, u)}, next;
    seen.emplace(frontier.front(), 0);
    std::vector<std::uint64_t> nbrs;
    for (std::uint32_t depth = 1; depth <= max_distance; ++depth) {
        next.clear();
        for (std::uint64_t x : frontier) {
            nbrs.clear();
            neighbor_ranks(g, x, nbrs);
            for (std::uint64_t y : nbrs) {
                if (y == target) return depth;
                if (seen.emplace(y, depth).second) next.push_back(y);
            }
        }
        frontier.swap(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

}  // namespace sierpdom
