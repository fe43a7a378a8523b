#pragma once

// Brute-force ground truth. Everything here is quadratic (or worse) and
// deliberately shares no code path with the indexes it checks.

#include <cstdint>
#include <vector>

#include "bjsm/ones_table.hpp"
#include "bjsm/text.hpp"

namespace bjsm::oracle {

/// Scans every window of length zeros + ones. Throws std::invalid_argument
/// for the empty pattern.
bool occurs(const BinaryText& text, const ParikhVector& pv);

/// minOne/maxOne by scanning every window of every length.
OnesTable tables(const BinaryText& text);

/// G and g indexed by zeros count x = 0..total_zeros.
///
/// min_ones[x] is the minimum ones over substrings with exactly x zeros and
/// max_ones[x] the maximum. Slot 0 holds 0 and the longest 1-run.
struct ZeroIndexedExtrema {
    std::vector<std::uint32_t> min_ones;
    std::vector<std::uint32_t> max_ones;
};

/// Enumerates all O(n^2) substrings.
ZeroIndexedExtrema zero_indexed_extrema(const BinaryText& text);

/// Exact set of occurring Parikh vectors, filled by enumerating every
/// substring. Makes full-rectangle comparisons on long texts affordable
/// without relying on the interval property.
class OccurrenceSet {
public:
    explicit OccurrenceSet(const BinaryText& text);

    bool contains(const ParikhVector& pv) const;

private:
    std::size_t n_;
    std::uint32_t zeros_;
    std::uint32_t ones_;
    std::vector<bool> present_;  // (zeros_ + 1) x (ones_ + 1), row-major by zeros
};

}  // namespace bjsm::oracle
