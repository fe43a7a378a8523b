#include "bjsm/text.hpp"

#include <algorithm>

namespace bjsm {

namespace {

std::string describe_byte(char byte) {
    const auto value = static_cast<unsigned char>(byte);
    if (value >= 0x20 && value < 0x7f) {
        return std::string("'") + byte + "'";
    }
    static constexpr char hex[] = "0123456789abcdef";
    return std::string("0x") + hex[value >> 4] + hex[value & 0xf];
}

bool is_ignorable(char c) {
    return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\v' || c == '\f';
}

}  // namespace

TextFormatError::TextFormatError(std::size_t position, char byte)
    : std::runtime_error("invalid byte " + describe_byte(byte) + " at offset " +
                         std::to_string(position) + " (expected '0', '1' or whitespace)"),
      position_(position) {}

void require_nonempty_pattern(const ParikhVector& pv) {
    if (pv.length() == 0) {
        throw std::invalid_argument("empty pattern (zeros + ones must be >= 1)");
    }
}

BinaryText::BinaryText(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    prefix_ones_.resize(symbols_.size() + 1);
    prefix_ones_[0] = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] > 1) {
            throw std::invalid_argument("binary symbol out of range at index " + std::to_string(i));
        }
        prefix_ones_[i + 1] = prefix_ones_[i] + symbols_[i];
    }
}

std::string BinaryText::to_string() const {
    std::string out(symbols_.size(), '0');
    std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                   [](std::uint8_t s) { return static_cast<char>('0' + s); });
    return out;
}

BinaryText parse_text(std::string_view raw) {
    std::vector<std::uint8_t> symbols;
    symbols.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == '0' || c == '1') {
            symbols.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (!is_ignorable(c)) {
            throw TextFormatError(i, c);
        }
    }
    return BinaryText(std::move(symbols));
}

BinaryText complement(const BinaryText& text) {
    std::vector<std::uint8_t> flipped(text.symbols());
    for (auto& s : flipped) s ^= 1u;
    return BinaryText(std::move(flipped));
}

std::uint32_t RunLengthEncoding::longest_run(std::uint8_t symbol) const noexcept {
    std::uint32_t best = 0;
    for (const auto& run : runs) {
        if (run.symbol == symbol) best = std::max(best, run.length);
    }
    return best;
}

BinaryText RunLengthEncoding::decode() const {
    std::vector<std::uint8_t> symbols;
    for (const auto& run : runs) symbols.insert(symbols.end(), run.length, run.symbol);
    return BinaryText(std::move(symbols));
}

RunLengthEncoding run_length_encode(const BinaryText& text) {
    RunLengthEncoding rle;
    for (const auto s : text.symbols()) {
        if (!rle.runs.empty() && rle.runs.back().symbol == s) {
            ++rle.runs.back().length;
        } else {
            rle.runs.push_back(Run{s, 1});
        }
    }
    return rle;
}

}  // namespace bjsm
