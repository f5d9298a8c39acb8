/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <vector>

namespace sierpdom::detail {

// Fixed-size bitset indexed by word rank. Not installed; scan internals only.
class RankBitset {
public:
    explicit RankBitset(std::uint64_t size)
        : size_(size), bits_((size + 63) / 64, 0) {}

    void set(std::uint64_t r) { bits_[r >> 6] |= std::uint64_t{1} << (r & 63); }

    bool test(std::uint64_t r) const {
        return (bits_[r >> 6] >> (r & 63)) & 1;
    }

    std::uint64_t size() const { return size_; }
    const std::vector<std::uint64_t>& chunks() const { return bits_; }

    // Rank of the first set bit of (mask applied chunk-wise), or size() if none.
    template <typename ChunkFn>
    std::uint64_t first_rank_where(ChunkFn&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t chunk = fn(i);
            if (i + 1 == bits_.size() && (size_ & 63) != 0) {
                chunk &= (std::uint64_t{1} << (size_ & 63)) - 1;  // mask tail
            }
            if (chunk != 0) {
                return (static_cast<std::uint64_t>(i) << 6) +
                       static_cast<std::uint64_t>(__builtin_ctzll(chunk));
            }
        }
        return size_;
    }

private:
    std::uint64_t size_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace sierpdom::detail
