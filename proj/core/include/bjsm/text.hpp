#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bjsm {

/// Raised when raw text contains a byte other than '0', '1' or whitespace.
class TextFormatError : public std::runtime_error {
public:
    TextFormatError(std::size_t position, char byte);

    /// Byte offset of the offending character in the raw input.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Pair (zeros, ones) of a binary string.
struct ParikhVector {
    std::uint32_t zeros = 0;
    std::uint32_t ones = 0;

    std::uint32_t length() const noexcept { return zeros + ones; }

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

/// Throws std::invalid_argument for the empty pattern. Every occurrence
/// query in the library goes through this check.
void require_nonempty_pattern(const ParikhVector& pv);

/// A binary text with prefix counts of ones.
///
/// prefix_ones()[i] is the number of ones in symbols [0, i), so the ones in
/// any window are available in O(1).
class BinaryText {
public:
    BinaryText() : prefix_ones_{0} {}
    explicit BinaryText(std::vector<std::uint8_t> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }

    std::uint8_t operator[](std::size_t i) const noexcept { return symbols_[i]; }
    const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }
    const std::vector<std::uint32_t>& prefix_ones() const noexcept { return prefix_ones_; }

    std::uint32_t total_ones() const noexcept { return prefix_ones_.back(); }
    std::uint32_t total_zeros() const noexcept {
        return static_cast<std::uint32_t>(size()) - total_ones();
    }

    /// Ones in symbols [start, start + length). Caller keeps the window in range.
    std::uint32_t ones_in_window(std::size_t start, std::size_t length) const noexcept {
        return prefix_ones_[start + length] - prefix_ones_[start];
    }

    std::string to_string() const;

    friend bool operator==(const BinaryText& a, const BinaryText& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::vector<std::uint8_t> symbols_;
    std::vector<std::uint32_t> prefix_ones_;
};

/// Parses ASCII '0'/'1' text. Whitespace is skipped; anything else throws
/// TextFormatError carrying the byte offset.
BinaryText parse_text(std::string_view raw);

/// Symbol-wise negation.
BinaryText complement(const BinaryText& text);

struct Run {
    std::uint8_t symbol = 0;
    std::uint32_t length = 0;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal-run decomposition. Only nonempty runs are stored, so adjacent runs
/// always carry different symbols.
struct RunLengthEncoding {
    std::vector<Run> runs;

    std::size_t run_count() const noexcept { return runs.size(); }
    /// Longest run of the given symbol, 0 if the symbol does not occur.
    std::uint32_t longest_run(std::uint8_t symbol) const noexcept;
    BinaryText decode() const;
};

RunLengthEncoding run_length_encode(const BinaryText& text);

}  // namespace bjsm
