#include "bjsm_tools/generate.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace bjsm::tools {

namespace {

// Coin flips straight from the engine output so that texts are identical on
// every standard library.
std::vector<std::uint8_t> coin_flips(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> out(n);
    for (auto& s : out) s = static_cast<double>(rng() >> 11) * 0x1.0p-53 < density ? 1 : 0;
    return out;
}

}  // namespace

TextKind parse_kind(const std::string& name) {
    if (name == "random") return TextKind::random;
    if (name == "runs") return TextKind::runs;
    if (name == "periodic") return TextKind::periodic;
    throw std::invalid_argument("unknown text kind '" + name + "' (use random, runs or periodic)");
}

std::string to_string(TextKind kind) {
    switch (kind) {
        case TextKind::random: return "random";
        case TextKind::runs: return "runs";
        case TextKind::periodic: return "periodic";
    }
    return "?";
}

BinaryText generate(const GenSpec& spec) {
    if (spec.density < 0.0 || spec.density > 1.0) throw std::invalid_argument("density must lie in [0, 1]");
    switch (spec.kind) {
        case TextKind::random:
            return BinaryText(coin_flips(spec.n, spec.density, spec.seed));
        case TextKind::runs: {
            if (spec.runs == 0) throw std::invalid_argument("runs must be >= 1");
            if (spec.runs > spec.n) throw std::invalid_argument("runs must not exceed n");
            std::vector<std::uint8_t> out;
            out.reserve(spec.n);
            const std::size_t base = spec.n / spec.runs;
            const std::size_t longer = spec.n % spec.runs;
            for (std::size_t r = 0; r < spec.runs; ++r) {
                out.insert(out.end(), base + (r < longer ? 1 : 0), static_cast<std::uint8_t>(r & 1u));
            }
            return BinaryText(std::move(out));
        }
        case TextKind::periodic: {
            if (spec.period == 0) throw std::invalid_argument("period must be >= 1");
            const auto block = coin_flips(spec.period, spec.density, spec.seed);
            std::vector<std::uint8_t> out(spec.n);
            for (std::size_t i = 0; i < spec.n; ++i) out[i] = block[i % spec.period];
            return BinaryText(std::move(out));
        }
    }
    throw std::invalid_argument("unknown text kind");
}

}  // namespace bjsm::tools
