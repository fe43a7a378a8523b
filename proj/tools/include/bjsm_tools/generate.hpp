#pragma once

#include <cstdint>
#include <string>

#include "bjsm/text.hpp"

namespace bjsm::tools {

enum class TextKind { random, runs, periodic };

TextKind parse_kind(const std::string& name);
std::string to_string(TextKind kind);

struct GenSpec {
    TextKind kind = TextKind::random;
    std::size_t n = 0;
    std::size_t runs = 0;   // kind=runs: exact number of maximal runs
    double density = 0.5;   // probability of a 1 (random, periodic block)
    std::size_t period = 8; // kind=periodic: block length
    std::uint64_t seed = 1;
};

/// Deterministic for a fixed spec. Throws std::invalid_argument on
/// inconsistent parameters.
///
/// runs: r alternating runs starting with 0, lengths n/r or n/r + 1.
/// periodic: a random block of `period` symbols repeated and cut to n.
BinaryText generate(const GenSpec& spec);

}  // namespace bjsm::tools
