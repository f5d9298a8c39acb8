/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "sierpdom/graph.hpp"

namespace sierpdom {

enum class LabelingMode { roman, double_roman };

/// A total map from words to small integer values with sparse storage:
/// only nonzero values are stored, everything else is 0. Roman labelings
/// range over {0,1,2}, double-Roman over {0,1,2,3}.
class Labeling {
public:
    Labeling(GraphParams params, LabelingMode mode) : params_(params), mode_(mode) {}

    const GraphParams& params() const { return params_; }
    LabelingMode mode() const { return mode_; }

    /// Largest value allowed by the mode (2 or 3).
    std::uint8_t max_value() const { return mode_ == LabelingMode::roman ? 2 : 3; }

    /// Stores value at w. value must be in [1, max_value()]; assigning an
    /// already-assigned word overwrites and adjusts the weight.
    void assign(const Word& w, std::uint8_t value);

    /// Value at w, 0 if unassigned.
    std::uint8_t value(const Word& w) const;

    /// Sum of all values.
    std::uint64_t weight() const { return weight_; }

    /// Number of nonzero entries.
    std::size_t support_size() const { return values_.size(); }

    /// Visits the nonzero entries in rank (lexicographic word) order.
    void for_each_assignment(const std::function<void(const Word&, std::uint8_t)>& fn) const;

    /// Low-level view keyed by word rank, sorted ascending.
    const std::map<std::uint64_t, std::uint8_t>& by_rank() const { return values_; }

private:
    GraphParams params_;
    LabelingMode mode_;
    std::map<std::uint64_t, std::uint8_t> values_;
    std::uint64_t weight_ = 0;
};

}  // namespace sierpdom
