#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bjsm_tools/generate.hpp"

namespace bjsm::tools {

enum class Algo { corner, table, oracle };

Algo parse_algo(const std::string& name);
std::string to_string(Algo algo);

struct BenchRecord {
    Algo algo = Algo::corner;
    std::size_t n = 0;
    std::size_t runs = 0;
    std::optional<std::uint32_t> bucket;      // corner only
    std::optional<unsigned> width;            // table only
    double build_seconds = 0;                 // median over repetitions
    std::size_t index_points = 0;             // stored points or table entries
    std::optional<std::uint64_t> word_ops;    // checked table builds only
};

struct BenchSpec {
    GenSpec text;                 // n is overridden per size
    std::vector<std::size_t> sizes;
    std::vector<Algo> algos;
    std::uint32_t bucket = 1;
    unsigned width = 64;
    int repetitions = 3;
    bool checked = false;
};

/// One record per (size, algo), sizes outer, algos in the given order.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace bjsm::tools
