#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "bjsm/text.hpp"

namespace bjsm {

/// Per-length extrema of the ones count over all windows of a text.
///
/// For every window length l in [1, n] the achievable ones counts form the
/// contiguous range [min_one(l), max_one(l)], so an occurrence query is two
/// comparisons.
class OnesTable {
public:
    OnesTable() = default;
    /// Both spans hold values for l = 1..n in order.
    OnesTable(std::span<const std::uint32_t> max_one, std::span<const std::uint32_t> min_one);

    std::size_t text_length() const noexcept { return max_one_.size() - 1; }

    std::uint32_t max_one(std::size_t length) const { return max_one_.at(check(length)); }
    std::uint32_t min_one(std::size_t length) const { return min_one_.at(check(length)); }

    /// Values for l = 1..n.
    std::span<const std::uint32_t> max_ones() const noexcept {
        return std::span(max_one_).subspan(1);
    }
    std::span<const std::uint32_t> min_ones() const noexcept {
        return std::span(min_one_).subspan(1);
    }

    /// Throws std::invalid_argument for the empty pattern.
    bool occurs(const ParikhVector& pv) const;

    friend bool operator==(const OnesTable&, const OnesTable&) = default;

private:
    std::size_t check(std::size_t length) const;

    // Slot 0 is the empty window and always holds 0.
    std::vector<std::uint32_t> max_one_{0};
    std::vector<std::uint32_t> min_one_{0};
};

}  // namespace bjsm
