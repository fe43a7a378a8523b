#include "bjsm/bitparallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace bjsm {

namespace {

/// Calls fn(engine) with a FieldEngine matching the configured width.
template <bool Checked, typename Fn>
decltype(auto) with_engine(const ChunkConfig& config, Fn&& fn) {
    switch (config.word_bits) {
        case 16: {
            swar::FieldEngine<std::uint16_t, Checked> e(config);
            return fn(e);
        }
        case 32: {
            swar::FieldEngine<std::uint32_t, Checked> e(config);
            return fn(e);
        }
        case 64: {
            swar::FieldEngine<std::uint64_t, Checked> e(config);
            return fn(e);
        }
        default:
            throw std::invalid_argument("unsupported word width " + std::to_string(config.word_bits));
    }
}

template <typename Engine>
using word_of = decltype(std::declval<Engine&>().all_ones());

template <typename Engine>
std::uint32_t scalar_max_ones(const PackedText& packed, std::size_t length, Engine& engine) {
    std::uint32_t ones = 0;
    for (std::size_t i = 0; i < length; ++i) ones += packed.symbol(i);
    std::uint32_t best = ones;
    for (std::size_t s = 1; s + length <= packed.n; ++s) {
        ones = ones + packed.symbol(s + length - 1) - packed.symbol(s - 1);
        best = std::max(best, ones);
    }
    engine.count_scalar(length + 3 * (packed.n - length));
    return best;
}

template <typename Engine>
std::uint32_t sliding_max_ones(const PackedText& packed, std::size_t length, Engine& engine) {
    using Word = word_of<Engine>;
    const ChunkConfig& cfg = packed.config;
    const std::size_t k = cfg.fields;
    const std::size_t full = length / k;
    const unsigned rem = static_cast<unsigned>(length % k);
    const auto chunk = [&](std::size_t q) { return static_cast<Word>(packed.chunk(q)); };

    // First alignment: whole chunks plus the masked prefix of the last one.
    std::int64_t ones = 0;
    for (std::size_t q = 0; q < full; ++q) ones += engine.popcount(chunk(q));
    if (rem != 0) ones += engine.popcount(engine.band(chunk(full), engine.low_fields(rem)));
    std::int64_t best = ones;

    // The incoming chunk starts at s + length, i.e. `rem` fields into chunk
    // s/K + full, and straddles into the next one when rem != 0.
    const unsigned lo_shift = rem * cfg.field_bits;
    const unsigned hi_shift = (cfg.fields - rem) * cfg.field_bits;
    const Word region = static_cast<Word>(cfg.region_mask());
    const std::size_t last_start = packed.n - length;
    for (std::size_t s = 0, q = 0; s < last_start; s += k, ++q) {
        const Word outgoing = chunk(q);
        Word incoming = chunk(q + full);
        if (rem != 0) {
            incoming = engine.bor(engine.shr(incoming, lo_shift),
                                  engine.band(engine.shl(chunk(q + full + 1), hi_shift), region));
        }
        const auto [delta, balance] = engine.step(outgoing, incoming);
        best = std::max(best, ones + static_cast<std::int64_t>(delta));
        if constexpr (Engine::checked) {
            const std::int64_t recount = ones - std::popcount(outgoing) + std::popcount(incoming);
            if (recount != ones + balance) {
                throw std::logic_error("running ones diverged from popcount at window start " +
                                       std::to_string(s + k));
            }
        }
        ones += balance;
    }
    return static_cast<std::uint32_t>(best);
}

template <typename Engine>
std::uint32_t max_ones_with(const PackedText& packed, std::size_t length, Engine& engine) {
    if (length == 0 || length > packed.n) {
        throw std::out_of_range("window length " + std::to_string(length) + " outside [1, " +
                                std::to_string(packed.n) + "]");
    }
    if (length < packed.config.fields) return scalar_max_ones(packed, length, engine);
    return sliding_max_ones(packed, length, engine);
}

}  // namespace

PackedText pack_text(const BinaryText& text, const ChunkConfig& config) {
    PackedText packed;
    packed.config = config;
    packed.n = text.size();
    packed.chunks.assign((text.size() + config.fields - 1) / config.fields, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        packed.chunks[i / config.fields] |= std::uint64_t{text[i]} << ((i % config.fields) * config.field_bits);
    }
    return packed;
}

std::uint64_t diff_word(std::uint64_t c1, std::uint64_t c2, const ChunkConfig& config) {
    return with_engine<false>(config, [&](auto& e) -> std::uint64_t {
        using W = word_of<decltype(e)>;
        return e.diff(static_cast<W>(c1), static_cast<W>(c2));
    });
}

std::uint64_t prefix_sums_word(std::uint64_t c, const ChunkConfig& config) {
    return with_engine<false>(config, [&](auto& e) -> std::uint64_t {
        return e.prefix_sums(static_cast<word_of<decltype(e)>>(c));
    });
}

std::uint64_t parallel_max(std::uint64_t x, std::uint64_t y, const ChunkConfig& config) {
    return with_engine<true>(config, [&](auto& e) -> std::uint64_t {
        using W = word_of<decltype(e)>;
        return e.parallel_max(static_cast<W>(x), static_cast<W>(y));
    });
}

std::uint64_t clamped_prefix_diffs(std::uint64_t prefix, const ChunkConfig& config) {
    return with_engine<false>(config, [&](auto& e) -> std::uint64_t {
        return e.clamped_prefix_diffs(static_cast<word_of<decltype(e)>>(prefix));
    });
}

unsigned horizontal_max(std::uint64_t x, const ChunkConfig& config) {
    return with_engine<false>(config, [&](auto& e) { return e.horizontal_max(static_cast<word_of<decltype(e)>>(x)); });
}

swar::StepResult chunk_step(std::uint64_t c1, std::uint64_t c2, const ChunkConfig& config) {
    return with_engine<false>(config, [&](auto& e) {
        using W = word_of<decltype(e)>;
        return e.step(static_cast<W>(c1), static_cast<W>(c2));
    });
}

std::uint64_t make_word(std::span<const unsigned> fields, const ChunkConfig& config) {
    if (fields.size() > config.fields) throw std::invalid_argument("too many fields for the chunk geometry");
    std::uint64_t word = 0;
    const std::uint64_t limit = std::uint64_t{1} << config.field_bits;
    for (std::size_t h = 0; h < fields.size(); ++h) {
        if (fields[h] >= limit) throw std::invalid_argument("field value does not fit in a field");
        word |= std::uint64_t{fields[h]} << (h * config.field_bits);
    }
    return word;
}

std::vector<unsigned> word_fields(std::uint64_t word, const ChunkConfig& config) {
    std::vector<unsigned> out(config.fields);
    const std::uint64_t mask = (std::uint64_t{1} << config.field_bits) - 1;
    for (unsigned h = 0; h < config.fields; ++h) {
        out[h] = static_cast<unsigned>((word >> (h * config.field_bits)) & mask);
    }
    return out;
}

std::uint32_t max_ones_for_length(const PackedText& packed, std::size_t length, EngineOptions options,
                                  WorkStats* stats) {
    const auto run = [&](auto& e) {
        const auto best = max_ones_with(packed, length, e);
        if (stats) stats->word_ops += e.ops();
        return best;
    };
    return options.checked ? with_engine<true>(packed.config, run) : with_engine<false>(packed.config, run);
}

OnesTable build_tables(const BinaryText& text, const ChunkConfig& config, EngineOptions options,
                       WorkStats* stats) {
    const std::size_t n = text.size();
    const PackedText packed = pack_text(text, config);
    const PackedText negated = pack_text(complement(text), config);
    std::vector<std::uint32_t> max_one(n), min_one(n);
    const auto run = [&](auto& e) {
        for (std::size_t l = 1; l <= n; ++l) {
            max_one[l - 1] = max_ones_with(packed, l, e);
            min_one[l - 1] = static_cast<std::uint32_t>(l) - max_ones_with(negated, l, e);
        }
        if (stats) stats->word_ops += e.ops();
    };
    if (options.checked) {
        with_engine<true>(config, run);
    } else {
        with_engine<false>(config, run);
    }
    return OnesTable(max_one, min_one);
}

}  // namespace bjsm
