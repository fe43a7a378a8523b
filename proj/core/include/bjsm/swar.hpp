#pragma once

// Packed-field arithmetic inside a single machine word.
//
// A chunk stores K symbols in K fields of f = 1 + ceil(log2 w) bits each,
// field h at bits [h*f, (h+1)*f). Every value the algorithms produce stays
// below 2^(f-1), so the top bit of each field is free and is used as the
// comparison flag in parallel_max.

#include <array>
#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bjsm {

struct ChunkConfig {
    unsigned word_bits = 64;
    unsigned field_bits = 7;
    unsigned fields = 9;

    /// w must be 16, 32 or 64. Throws std::invalid_argument otherwise.
    static ChunkConfig for_width(unsigned w) {
        if (w != 16 && w != 32 && w != 64) {
            throw std::invalid_argument("unsupported word width " + std::to_string(w) + " (use 16, 32 or 64)");
        }
        ChunkConfig c;
        c.word_bits = w;
        c.field_bits = 1 + static_cast<unsigned>(std::bit_width(w - 1));
        c.fields = w / c.field_bits;
        return c;
    }
    static ChunkConfig native() { return for_width(64); }

    /// Lowest bits covering all K fields.
    std::uint64_t region_mask() const noexcept {
        const unsigned bits = fields * field_bits;
        return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    }

    friend bool operator==(const ChunkConfig&, const ChunkConfig&) = default;
};

namespace swar {

template <unsigned W>
struct word_for;
template <>
struct word_for<16> { using type = std::uint16_t; };
template <>
struct word_for<32> { using type = std::uint32_t; };
template <>
struct word_for<64> { using type = std::uint64_t; };

template <unsigned W>
using word_t = typename word_for<W>::type;

struct StepResult {
    unsigned delta;  // best gain over the K new window shifts, clamped at 0
    int balance;     // ones(next aligned window) - ones(current window)
};

/// Word-level primitives over one chunk geometry.
///
/// With Checked set every word operation is counted and parallel_max
/// verifies that no operand field has its top bit set.
template <std::unsigned_integral Word, bool Checked = false>
class FieldEngine {
public:
    static constexpr unsigned word_bits = sizeof(Word) * 8;
    static constexpr bool checked = Checked;

    explicit FieldEngine(const ChunkConfig& cfg) : cfg_(cfg) {
        if (cfg.word_bits != word_bits) throw std::invalid_argument("engine word type does not match config");
        const unsigned f = cfg.field_bits;
        for (unsigned h = 0; h < cfg.fields; ++h) {
            ones_ |= Word(Word{1} << (h * f));
            top_ |= Word(Word{1} << (h * f + f - 1));
            increments_ |= Word(Word(h + 1) << (h * f));
            low_fields_[h + 1] = Word(low_fields_[h] | Word(field_mask() << (h * f)));
        }
        region_ = low_fields_[cfg.fields];
    }

    const ChunkConfig& config() const noexcept { return cfg_; }
    std::uint64_t ops() const noexcept { return ops_; }
    void reset_ops() noexcept { ops_ = 0; }

    Word field_mask() const noexcept { return Word((Word{1} << cfg_.field_bits) - 1); }
    Word all_ones() const noexcept { return ones_; }
    Word top_bits() const noexcept { return top_; }
    Word increments() const noexcept { return increments_; }
    /// Mask of the lowest `count` fields, count in [0, K].
    Word low_fields(unsigned count) const noexcept { return low_fields_[count]; }

    unsigned field(Word x, unsigned h) const noexcept {
        return static_cast<unsigned>(Word(x >> (h * cfg_.field_bits)) & field_mask());
    }

    /// C'[i] = C2[i] + 1 - C1[i]. Adding first keeps every field >= 0.
    Word diff(Word c1, Word c2) { return sub(add(c2, ones_), c1); }

    /// Inclusive prefix sums of the fields: ceil(log2 K) shift-and-add passes
    /// at distances of 1, 2, 4, ... fields.
    Word prefix_sums(Word x) {
        for (unsigned d = 1; d < cfg_.fields; d <<= 1) {
            x = band(add(x, shl(x, d * cfg_.field_bits)), region_);
        }
        return x;
    }

    /// Fieldwise max in O(1). (x | top) - y leaves the top bit of field h set
    /// iff x[h] >= y[h]; that bit is then spread over the whole field.
    Word parallel_max(Word x, Word y) {
        if constexpr (Checked) {
            if (Word(x | y) & top_) {
                throw std::logic_error("parallel_max operand field reaches its top bit");
            }
        }
        const Word flags = band(sub(bor(x, top_), y), top_);
        const Word pick_x = bor(flags, sub(flags, shr(flags, cfg_.field_bits - 1)));
        return bor(band(x, pick_x), band(y, bnot(pick_x)));
    }

    /// Field h becomes max(sum_{i<=h} (C2[i] - C1[i]), 0), given the prefix
    /// sums of a diff() word.
    Word clamped_prefix_diffs(Word prefix) { return sub(parallel_max(prefix, increments_), increments_); }

    /// Largest field, by repeated halving with parallel_max. An odd half is
    /// padded with zero fields.
    unsigned horizontal_max(Word x) {
        unsigned count = cfg_.fields;
        while (count > 1) {
            const unsigned half = (count + 1) / 2;
            x = parallel_max(band(x, low_fields_[half]), shr(x, half * cfg_.field_bits));
            count = half;
        }
        return static_cast<unsigned>(band(x, field_mask()));
    }

    StepResult step(Word c1, Word c2) {
        const Word prefix = prefix_sums(diff(c1, c2));
        const unsigned delta = horizontal_max(clamped_prefix_diffs(prefix));
        // Field K-1 holds the full difference plus K.
        const Word last = band(shr(prefix, (cfg_.fields - 1) * cfg_.field_bits), field_mask());
        const int balance = static_cast<int>(last) - static_cast<int>(cfg_.fields);
        return {delta, balance};
    }

    unsigned popcount(Word x) {
        count();
        return static_cast<unsigned>(std::popcount(x));
    }

    // Counted word operations.
    Word add(Word a, Word b) { return count(), Word(a + b); }
    Word sub(Word a, Word b) { return count(), Word(a - b); }
    Word band(Word a, Word b) { return count(), Word(a & b); }
    Word bor(Word a, Word b) { return count(), Word(a | b); }
    Word bnot(Word a) { return count(), Word(~a); }
    Word shl(Word a, unsigned s) { return count(), Word(a << s); }
    Word shr(Word a, unsigned s) { return count(), Word(a >> s); }

    /// Counts `k` scalar operations performed outside the word primitives.
    void count_scalar(std::uint64_t k) noexcept {
        if constexpr (Checked) ops_ += k;
    }

private:
    void count() noexcept {
        if constexpr (Checked) ++ops_;
    }

    ChunkConfig cfg_;
    Word ones_ = 0;
    Word top_ = 0;
    Word increments_ = 0;
    Word region_ = 0;
    std::array<Word, 65> low_fields_{};
    std::uint64_t ops_ = 0;
};

}  // namespace swar
}  // namespace bjsm
