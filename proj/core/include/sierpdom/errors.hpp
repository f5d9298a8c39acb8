/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sierpdom {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected graph parameters: n < 2, t < 1, or n^t does not fit in 64 bits.
class invalid_params_error : public error {
public:
    using error::error;
};

/// A word whose length or labels do not match the owning graph parameters.
class invalid_word_error : public error {
public:
    using error::error;
};

/// A vertex set violating its invariants (duplicate or foreign words).
class invalid_set_error : public error {
public:
    using error::error;
};

/// Whole-graph work refused because it exceeds a configured cap, or exact
/// integer arithmetic would overflow.
class capacity_error : public error {
public:
    using error::error;
};

/// Mismatch-index and tail-swap queries are undefined on constant words.
class constant_word_error : public error {
public:
    using error::error;
};

/// A labeling was handed to a verifier of the wrong mode.
class mode_error : public error {
public:
    using error::error;
};

/// Exact search exhausted its time budget. Carries the best incumbent found
/// so far (if any) and the lower bound proven at the root.
class budget_error : public error {
public:
    budget_error(const std::string& what, std::optional<std::uint64_t> incumbent,
                 std::uint64_t lower_bound)
        : error(what), incumbent_(incumbent), lower_bound_(lower_bound) {}

    std::optional<std::uint64_t> incumbent() const noexcept { return incumbent_; }
    std::uint64_t lower_bound() const noexcept { return lower_bound_; }

private:
    std::optional<std::uint64_t> incumbent_;
    std::uint64_t lower_bound_;
};

}  // namespace sierpdom
