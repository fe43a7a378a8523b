// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Pass criterion numbers as arguments to run
// a subset, e.g. `bjsm_acceptance 4 7`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bjsm/bitparallel.hpp"
#include "bjsm/corner_index.hpp"
#include "bjsm/index_io.hpp"
#include "bjsm/oracle.hpp"
#include "bjsm_tools/bench.hpp"
#include "bjsm_tools/generate.hpp"
#include "../swar_reference.hpp"
#include "../test_support.hpp"

namespace {

using namespace bjsm;

// Tolerances and sizes, fixed here once.
constexpr std::size_t kExhaustiveMaxN = 14;
constexpr std::size_t kRandomTexts = 200;
constexpr std::size_t kRandomSizes[] = {256, 1024, 4096};
constexpr std::size_t kRoundTripQueries = 1000;
constexpr std::size_t kWordPairs64 = 100000;
constexpr double kCornerRatioLo = 1.0, kCornerRatioHi = 3.0;
constexpr double kTableRatioLo = 3.0, kTableRatioHi = 5.0;
constexpr std::size_t kScalingRuns = 16;
constexpr std::size_t kScalingSizes[] = {1u << 12, 1u << 13, 1u << 14, 1u << 15, 1u << 16};
constexpr int kCornerReps = 101;
constexpr int kTableReps = 5;
constexpr std::size_t kWorkSizes[] = {1u << 10, 1u << 11, 1u << 12};
constexpr double kWorkSlack = 1.5;

struct Result {
    bool pass;
    std::string detail;
};

/// Counters shared by the oracle-equivalence passes (criteria 1, 2, 3, 5, 8).
struct Tally {
    std::uint64_t texts = 0;
    std::uint64_t queries = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t extrema_checked = 0;
    std::uint64_t extrema_mismatches = 0;
    std::uint64_t indexes = 0;
    std::uint64_t space_violations = 0;
    std::uint64_t occupancy_violations = 0;
    std::uint64_t roundtrip_queries = 0;
    std::uint64_t roundtrip_mismatches = 0;
    std::string first_failure;

    void fail(std::string what) {
        if (first_failure.empty()) first_failure = std::move(what);
    }
};

std::string describe(const BinaryText& t) {
    return t.size() <= 64 ? "'" + t.to_string() + "'" : "text n=" + std::to_string(t.size());
}

template <typename Truth>
void check_text(const BinaryText& t, const std::vector<std::uint32_t>& buckets, const std::vector<unsigned>& widths,
                Truth&& truth, std::mt19937_64& rng, Tally& tally) {
    ++tally.texts;
    std::vector<std::pair<std::string, AnyIndex>> indexes;
    for (auto b : buckets) {
        CornerIndex idx;
        try {
            idx = CornerIndex::build(t, b, /*checked=*/true);
        } catch (const std::logic_error& e) {
            ++tally.occupancy_violations;
            tally.fail(describe(t) + " B=" + std::to_string(b) + ": " + e.what());
            idx = CornerIndex::build(t, b);
        }
        for (const auto* s : {&idx.lower_stats(), &idx.upper_stats()}) {
            if (s->pass1 > b + 1 || s->pass2 > b + 1 || s->filled > b + 1) ++tally.occupancy_violations;
        }
        const auto bound = idx.lower().corner_count() + idx.upper().corner_count() + idx.lower().bucket_count() +
                           idx.upper().bucket_count();
        if (idx.stored_points() > bound) {
            ++tally.space_violations;
            tally.fail(describe(t) + " B=" + std::to_string(b) + ": stored points above bound");
        }
        indexes.emplace_back("corner B=" + std::to_string(b), std::move(idx));
    }
    for (auto w : widths) {
        indexes.emplace_back("table w=" + std::to_string(w), build_tables(t, ChunkConfig::for_width(w)));
    }
    tally.indexes += indexes.size();

    // Criterion 3: pointwise G and g.
    const auto extrema = oracle::zero_indexed_extrema(t);
    for (const auto& [name, any] : indexes) {
        const auto* idx = std::get_if<CornerIndex>(&any);
        if (!idx) continue;
        for (std::uint32_t x = 0; x <= t.total_zeros(); ++x) {
            ++tally.extrema_checked;
            const bool lower_ok = x == 0 || idx->min_ones(x) == extrema.min_ones[x];
            if (!lower_ok || idx->max_ones(x) != extrema.max_ones[x]) {
                ++tally.extrema_mismatches;
                tally.fail(describe(t) + " " + name + ": G/g differ at x=" + std::to_string(x));
            }
        }
    }

    // Criteria 1 and 2: the full rectangle.
    for (std::uint32_t x = 0; x <= t.total_zeros() + 1; ++x) {
        for (std::uint32_t y = 0; y <= t.total_ones() + 1; ++y) {
            if (x + y == 0) continue;
            const bool expected = truth({x, y});
            for (const auto& [name, any] : indexes) {
                ++tally.queries;
                if (occurs(any, {x, y}) != expected) {
                    ++tally.mismatches;
                    tally.fail(describe(t) + " " + name + ": query (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
                }
            }
        }
    }

    // Criterion 8: serialization round trip on random queries.
    std::uniform_int_distribution<std::uint32_t> zx(0, t.total_zeros() + 1);
    std::uniform_int_distribution<std::uint32_t> oy(0, t.total_ones() + 1);
    for (const auto& [name, any] : indexes) {
        const AnyIndex back = std::visit([](const auto& idx) { return deserialize(serialize(idx)); }, any);
        for (std::size_t q = 0; q < kRoundTripQueries; ++q) {
            ParikhVector pv{zx(rng), oy(rng)};
            if (pv.length() == 0) pv.ones = 1;
            ++tally.roundtrip_queries;
            if (occurs(back, pv) != occurs(any, pv)) {
                ++tally.roundtrip_mismatches;
                tally.fail(describe(t) + " " + name + ": round trip differs");
            }
        }
    }
}

Tally& exhaustive_tally() {
    static Tally tally;
    static bool done = false;
    if (!done) {
        std::mt19937_64 rng(1);
        test::for_all_texts(kExhaustiveMaxN, [&](const BinaryText& t) {
            const auto n = static_cast<std::uint32_t>(t.size());
            check_text(t, {1, 2, 3, n}, {16, 64}, [&](ParikhVector pv) { return oracle::occurs(t, pv); }, rng,
                       tally);
        });
        done = true;
    }
    return tally;
}

std::vector<BinaryText> random_corpus() {
    std::vector<BinaryText> texts;
    const double densities[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    for (std::size_t i = 0; i < kRandomTexts; ++i) {
        tools::GenSpec spec;
        spec.n = kRandomSizes[i % 3];
        spec.seed = 1000 + i;
        switch (i % 4) {
            case 0:
            case 1:
                spec.kind = tools::TextKind::random;
                spec.density = densities[(i / 4) % 5];
                break;
            case 2:
                spec.kind = tools::TextKind::runs;
                spec.runs = std::min<std::size_t>(spec.n, std::size_t{2} << ((i / 4) % 10));
                break;
            default:
                spec.kind = tools::TextKind::periodic;
                spec.period = 3 + (i / 4) % 40;
                spec.density = densities[(i / 4) % 5];
                break;
        }
        texts.push_back(tools::generate(spec));
    }
    return texts;
}

Tally& random_tally() {
    static Tally tally;
    static bool done = false;
    if (!done) {
        std::mt19937_64 rng(2);
        for (const auto& t : random_corpus()) {
            const oracle::OccurrenceSet truth(t);
            const auto n = static_cast<std::uint32_t>(t.size());
            check_text(t, {1, 3, 64, n}, {16, 32, 64}, [&](ParikhVector pv) { return truth.contains(pv); }, rng,
                       tally);
        }
        done = true;
    }
    return tally;
}

Result equivalence(const Tally& t) {
    std::ostringstream os;
    os << t.mismatches << " mismatches over " << t.queries << " queries, " << t.texts << " texts, " << t.indexes
       << " indexes";
    if (t.mismatches) os << "; first: " << t.first_failure;
    return {t.mismatches == 0, os.str()};
}

Result criterion1() { return equivalence(exhaustive_tally()); }
Result criterion2() { return equivalence(random_tally()); }

Result criterion3() {
    const auto& a = exhaustive_tally();
    const auto& b = random_tally();
    const auto bad = a.extrema_mismatches + b.extrema_mismatches;
    std::ostringstream os;
    os << bad << " mismatches over " << a.extrema_checked + b.extrema_checked << " (x, G, g) points";
    return {bad == 0, os.str()};
}

Result criterion4() {
    std::uint64_t checked = 0;
    std::uint64_t bad = 0;
    const auto compare = [&](const ChunkConfig& cfg, unsigned a, unsigned b) {
        const auto c1 = test::bits_to_fields(a, cfg.fields);
        const auto c2 = test::bits_to_fields(b, cfg.fields);
        const auto got = chunk_step(make_word(c1, cfg), make_word(c2, cfg), cfg);
        const auto want = test::scalar_step(c1, c2);
        ++checked;
        if (got.delta != want.delta || got.balance != want.balance) ++bad;
    };
    const auto w16 = ChunkConfig::for_width(16);
    for (unsigned a = 0; a < (1u << w16.fields); ++a) {
        for (unsigned b = 0; b < (1u << w16.fields); ++b) compare(w16, a, b);
    }
    const auto w64 = ChunkConfig::native();
    std::mt19937_64 rng(4);
    for (std::size_t i = 0; i < kWordPairs64; ++i) {
        compare(w64, static_cast<unsigned>(rng() & 0x1ff), static_cast<unsigned>(rng() & 0x1ff));
    }
    std::ostringstream os;
    os << bad << " mismatches over " << checked << " chunk pairs (64 exhaustive at w=16, " << kWordPairs64
       << " random at w=64)";
    return {checked == 64 + kWordPairs64 && bad == 0, os.str()};
}

Result criterion5() {
    const auto& a = exhaustive_tally();
    const auto& b = random_tally();
    const auto space = a.space_violations + b.space_violations;
    const auto occupancy = a.occupancy_violations + b.occupancy_violations;
    std::ostringstream os;
    os << space << " space-bound and " << occupancy << " occupancy violations over " << a.indexes + b.indexes
       << " indexes (corner builds in checked mode)";
    return {space == 0 && occupancy == 0, os.str()};
}

Result criterion6() {
    tools::BenchSpec spec;
    spec.text.kind = tools::TextKind::runs;
    spec.text.runs = kScalingRuns;
    spec.sizes.assign(std::begin(kScalingSizes), std::end(kScalingSizes));
    spec.bucket = 1;
    spec.width = 64;

    spec.algos = {tools::Algo::corner};
    spec.repetitions = kCornerReps;
    const auto corner = tools::run_bench(spec);
    spec.algos = {tools::Algo::table};
    spec.repetitions = kTableReps;
    const auto table = tools::run_bench(spec);

    bool ok = true;
    std::ostringstream os;
    os.precision(3);
    const auto ratios = [&](const char* name, const std::vector<tools::BenchRecord>& recs, double lo, double hi) {
        os << name << " medians (s):";
        for (const auto& r : recs) os << ' ' << r.build_seconds;
        os << ", ratios in [" << lo << "," << hi << "]:";
        for (std::size_t i = 1; i < recs.size(); ++i) {
            const double r = recs[i].build_seconds / recs[i - 1].build_seconds;
            os << ' ' << r;
            ok = ok && recs[i].runs == kScalingRuns && r >= lo && r <= hi;
        }
    };
    ratios("corner", corner, kCornerRatioLo, kCornerRatioHi);
    os << "; ";
    ratios("table", table, kTableRatioLo, kTableRatioHi);
    return {ok, os.str()};
}

Result criterion7() {
    const auto cfg = ChunkConfig::native();
    const double per_chunk = std::ceil(std::log2(cfg.fields)) / cfg.fields;
    std::mt19937_64 rng(7);
    double c = 0;
    bool ok = true;
    std::ostringstream os;
    os.precision(4);
    for (const auto n : kWorkSizes) {
        const auto t = test::random_text(rng, n);
        WorkStats stats;
        build_tables(t, cfg, {.checked = true}, &stats);
        const double model = static_cast<double>(n) * static_cast<double>(n) * per_chunk;
        const double ratio = static_cast<double>(stats.word_ops) / model;
        if (c == 0) {
            c = ratio;
            os << "c=" << c << " at n=" << n;
        } else {
            os << "; n=" << n << " ops/model=" << ratio << " (" << ratio / c << "c)";
            ok = ok && stats.word_ops <= kWorkSlack * c * model;
        }
    }
    return {ok, os.str()};
}

Result criterion8() {
    const auto& a = exhaustive_tally();
    const auto& b = random_tally();
    const auto bad = a.roundtrip_mismatches + b.roundtrip_mismatches;
    std::ostringstream os;
    os << bad << " mismatches over " << a.roundtrip_queries + b.roundtrip_queries << " post-reload queries";
    return {bad == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* title;
        std::function<Result()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence, all texts n<=14", criterion1},
        {2, "oracle equivalence, 200 random texts n in {256,1024,4096}", criterion2},
        {3, "G/g reconstruction", criterion3},
        {4, "chunk_step word-primitive exhaustiveness", criterion4},
        {5, "corner index space bound and bucket occupancy", criterion5},
        {6, "build-time scaling on runs texts (r=16)", criterion6},
        {7, "word-operation accounting", criterion7},
        {8, "serialization round trip", criterion8},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.contains(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%d] %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", c.id, c.title, r.detail.c_str(), secs);
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
