#include "bjsm/ones_table.hpp"

#include <string>

namespace bjsm {

OnesTable::OnesTable(std::span<const std::uint32_t> max_one, std::span<const std::uint32_t> min_one) {
    if (max_one.size() != min_one.size()) {
        throw std::invalid_argument("maxone and minone lengths differ");
    }
    max_one_.assign(1, 0);
    min_one_.assign(1, 0);
    max_one_.insert(max_one_.end(), max_one.begin(), max_one.end());
    min_one_.insert(min_one_.end(), min_one.begin(), min_one.end());
    for (std::size_t l = 1; l < max_one_.size(); ++l) {
        const bool bounded = min_one_[l] <= max_one_[l] && max_one_[l] <= l;
        const bool stepwise = max_one_[l] >= max_one_[l - 1] && max_one_[l] <= max_one_[l - 1] + 1 &&
                              min_one_[l] >= min_one_[l - 1] && min_one_[l] <= min_one_[l - 1] + 1;
        if (!bounded || !stepwise) {
            throw std::invalid_argument("ones table is not consistent at length " + std::to_string(l));
        }
    }
}

std::size_t OnesTable::check(std::size_t length) const {
    if (length == 0 || length >= max_one_.size()) {
        throw std::out_of_range("window length " + std::to_string(length) + " outside [1, " +
                                std::to_string(text_length()) + "]");
    }
    return length;
}

bool OnesTable::occurs(const ParikhVector& pv) const {
    require_nonempty_pattern(pv);
    const std::size_t m = pv.length();
    if (m > text_length()) return false;
    return min_one_[m] <= pv.ones && pv.ones <= max_one_[m];
}

}  // namespace bjsm
