#pragma once

// minOne/maxOne table construction with word-level parallelism.
//
// For each window length l the packed text is scanned one chunk (K symbols)
// at a time. Moving the window by K positions touches one outgoing chunk C1
// and one incoming chunk C2; the best of the K intermediate shifts follows
// from the prefix sums of C2 - C1, computed inside a single word in
// O(log K) operations. minOne is maxOne of the complemented text.

#include <cstdint>
#include <span>
#include <vector>

#include "bjsm/ones_table.hpp"
#include "bjsm/swar.hpp"
#include "bjsm/text.hpp"

namespace bjsm {

/// One symbol per field, K symbols per chunk, fields past n are zero.
struct PackedText {
    ChunkConfig config;
    std::vector<std::uint64_t> chunks;
    std::size_t n = 0;

    /// Chunk q, or 0 past the end.
    std::uint64_t chunk(std::size_t q) const noexcept { return q < chunks.size() ? chunks[q] : 0; }
    std::uint8_t symbol(std::size_t i) const noexcept {
        const auto shift = (i % config.fields) * config.field_bits;
        return static_cast<std::uint8_t>((chunks[i / config.fields] >> shift) & 1u);
    }
};

PackedText pack_text(const BinaryText& text, const ChunkConfig& config);

// Runtime-dispatched word primitives. Words are carried in uint64_t and only
// the low config.word_bits bits are meaningful.

std::uint64_t diff_word(std::uint64_t c1, std::uint64_t c2, const ChunkConfig& config);
std::uint64_t prefix_sums_word(std::uint64_t c, const ChunkConfig& config);
std::uint64_t parallel_max(std::uint64_t x, std::uint64_t y, const ChunkConfig& config);
std::uint64_t clamped_prefix_diffs(std::uint64_t prefix, const ChunkConfig& config);
unsigned horizontal_max(std::uint64_t x, const ChunkConfig& config);
swar::StepResult chunk_step(std::uint64_t c1, std::uint64_t c2, const ChunkConfig& config);

/// Builds a word from field values, field 0 first.
std::uint64_t make_word(std::span<const unsigned> fields, const ChunkConfig& config);
std::vector<unsigned> word_fields(std::uint64_t word, const ChunkConfig& config);

struct EngineOptions {
    /// Counts word operations and asserts the field-overflow and running
    /// ones invariants. Slower.
    bool checked = false;
};

struct WorkStats {
    std::uint64_t word_ops = 0;
};

/// Exact maximum ones over windows of length l, 1 <= l <= n.
/// Throws std::out_of_range otherwise.
std::uint32_t max_ones_for_length(const PackedText& packed, std::size_t length, EngineOptions options = {},
                                  WorkStats* stats = nullptr);

/// minOne/maxOne for every length. O(n^2 log^2 w / w) word operations.
OnesTable build_tables(const BinaryText& text, const ChunkConfig& config, EngineOptions options = {},
                       WorkStats* stats = nullptr);

}  // namespace bjsm
