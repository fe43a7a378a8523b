#include "bjsm/oracle.hpp"

#include <algorithm>
#include <limits>

namespace bjsm::oracle {

bool occurs(const BinaryText& text, const ParikhVector& pv) {
    require_nonempty_pattern(pv);
    const std::size_t m = pv.length();
    if (m > text.size()) return false;
    for (std::size_t start = 0; start + m <= text.size(); ++start) {
        if (text.ones_in_window(start, m) == pv.ones) return true;
    }
    return false;
}

OnesTable tables(const BinaryText& text) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> max_one(n), min_one(n);
    for (std::size_t l = 1; l <= n; ++l) {
        std::uint32_t lo = std::numeric_limits<std::uint32_t>::max();
        std::uint32_t hi = 0;
        for (std::size_t start = 0; start + l <= n; ++start) {
            const auto ones = text.ones_in_window(start, l);
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        max_one[l - 1] = hi;
        min_one[l - 1] = lo;
    }
    return OnesTable(max_one, min_one);
}

ZeroIndexedExtrema zero_indexed_extrema(const BinaryText& text) {
    const std::uint32_t zeros = text.total_zeros();
    ZeroIndexedExtrema out;
    out.min_ones.assign(zeros + 1, std::numeric_limits<std::uint32_t>::max());
    out.max_ones.assign(zeros + 1, 0);
    out.min_ones[0] = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        std::uint32_t z = 0;
        std::uint32_t o = 0;
        for (std::size_t j = i; j < text.size(); ++j) {
            (text[j] ? o : z) += 1;
            out.min_ones[z] = std::min(out.min_ones[z], o);
            out.max_ones[z] = std::max(out.max_ones[z], o);
        }
    }
    return out;
}

OccurrenceSet::OccurrenceSet(const BinaryText& text)
    : n_(text.size()), zeros_(text.total_zeros()), ones_(text.total_ones()) {
    present_.assign(static_cast<std::size_t>(zeros_ + 1) * (ones_ + 1), false);
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint32_t z = 0;
        std::uint32_t o = 0;
        for (std::size_t j = i; j < n_; ++j) {
            (text[j] ? o : z) += 1;
            present_[static_cast<std::size_t>(z) * (ones_ + 1) + o] = true;
        }
    }
}

bool OccurrenceSet::contains(const ParikhVector& pv) const {
    require_nonempty_pattern(pv);
    if (pv.zeros > zeros_ || pv.ones > ones_) return false;
    return present_[static_cast<std::size_t>(pv.zeros) * (ones_ + 1) + pv.ones];
}

}  // namespace bjsm::oracle
