#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bjsm/oracle.hpp"
#include "test_support.hpp"

namespace bjsm {
namespace {

std::vector<std::uint32_t> to_vec(std::span<const std::uint32_t> s) { return {s.begin(), s.end()}; }

TEST(OracleOccurs, Examples) {
    const auto t = parse_text("1011001");
    EXPECT_TRUE(oracle::occurs(t, {2, 1}));
    EXPECT_FALSE(oracle::occurs(t, {0, 3}));
    EXPECT_FALSE(oracle::occurs(parse_text("1111"), {1, 0}));
}

TEST(OracleOccurs, RejectsEmptyPattern) {
    EXPECT_THROW(oracle::occurs(parse_text("10"), {0, 0}), std::invalid_argument);
}

TEST(OracleTables, Examples) {
    const auto tab = oracle::tables(parse_text("1011001"));
    EXPECT_EQ(to_vec(tab.max_ones()), (std::vector<std::uint32_t>{1, 2, 2, 3, 3, 3, 4}));
    EXPECT_EQ(to_vec(tab.min_ones()), (std::vector<std::uint32_t>{0, 0, 1, 2, 2, 3, 4}));

    const auto ones = oracle::tables(parse_text("1111"));
    const auto zeros = oracle::tables(parse_text("0000"));
    for (std::uint32_t l = 1; l <= 4; ++l) {
        EXPECT_EQ(ones.max_one(l), l);
        EXPECT_EQ(ones.min_one(l), l);
        EXPECT_EQ(zeros.max_one(l), 0u);
        EXPECT_EQ(zeros.min_one(l), 0u);
    }
    EXPECT_EQ(oracle::tables(parse_text("")).text_length(), 0u);
}

TEST(OracleExtrema, Examples) {
    const auto e = oracle::zero_indexed_extrema(parse_text("1011001"));
    EXPECT_EQ(e.min_ones, (std::vector<std::uint32_t>{0, 0, 0, 2}));
    EXPECT_EQ(e.max_ones, (std::vector<std::uint32_t>{2, 3, 3, 4}));

    const auto z = oracle::zero_indexed_extrema(parse_text("000"));
    EXPECT_EQ(z.min_ones, (std::vector<std::uint32_t>{0, 0, 0, 0}));
    EXPECT_EQ(z.max_ones, (std::vector<std::uint32_t>{0, 0, 0, 0}));

    const auto s = oracle::zero_indexed_extrema(parse_text("01"));
    EXPECT_EQ(s.min_ones[1], 0u);
    EXPECT_EQ(s.max_ones[1], 1u);
}

TEST(OracleTables, ShapeInvariants) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto t = test::random_text(rng, 1 + rng() % 80, 0.3 + 0.4 * (i % 3) / 2.0);
        const auto tab = oracle::tables(t);
        for (std::size_t l = 1; l <= t.size(); ++l) {
            EXPECT_LE(tab.min_one(l), tab.max_one(l));
            EXPECT_LE(tab.max_one(l), l);
            if (l < t.size()) {
                EXPECT_LE(tab.max_one(l), tab.max_one(l + 1));
                EXPECT_LE(tab.max_one(l + 1), tab.max_one(l) + 1);
                EXPECT_LE(tab.min_one(l), tab.min_one(l + 1));
                EXPECT_LE(tab.min_one(l + 1), tab.min_one(l) + 1);
            }
        }
        const auto e = oracle::zero_indexed_extrema(t);
        for (std::size_t x = 1; x < e.min_ones.size(); ++x) {
            EXPECT_LE(e.min_ones[x], e.max_ones[x]);
            EXPECT_LE(e.min_ones[x - 1], e.min_ones[x]);
            EXPECT_LE(e.max_ones[x - 1], e.max_ones[x]);
        }
    }
}

// The interval property and the G/g characterisation, both checked against
// plain window scanning on every text up to length 12 (and sampled to 64).
void check_characterisations(const BinaryText& t) {
    const auto tab = oracle::tables(t);
    const auto e = oracle::zero_indexed_extrema(t);
    const auto rle = run_length_encode(t);
    const auto run1 = rle.longest_run(1);
    const auto run0 = rle.longest_run(0);
    for (std::uint32_t x = 0; x <= t.total_zeros() + 1; ++x) {
        for (std::uint32_t y = 0; y <= t.total_ones() + 1; ++y) {
            if (x + y == 0) continue;
            const bool truth = oracle::occurs(t, {x, y});
            const std::uint32_t m = x + y;
            const bool by_interval = m <= t.size() && tab.min_one(m) <= y && y <= tab.max_one(m);
            bool by_extrema = false;
            if (x == 0) {
                by_extrema = y <= run1;
            } else if (y == 0) {
                by_extrema = x <= run0;
            } else if (x <= t.total_zeros()) {
                by_extrema = e.min_ones[x] <= y && y <= e.max_ones[x];
            }
            ASSERT_EQ(truth, by_interval) << t.to_string() << " (" << x << "," << y << ")";
            ASSERT_EQ(truth, by_extrema) << t.to_string() << " (" << x << "," << y << ")";
        }
    }
}

TEST(OracleCrossChecks, ExhaustiveUpTo12) { test::for_all_texts(12, check_characterisations); }

TEST(OracleCrossChecks, SampledUpTo64) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) check_characterisations(test::random_text(rng, 13 + rng() % 52));
}

TEST(OccurrenceSet, MatchesWindowScan) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const auto t = test::random_runs_text(rng, 1 + rng() % 60, 5);
        const oracle::OccurrenceSet set(t);
        for (std::uint32_t x = 0; x <= t.total_zeros() + 1; ++x) {
            for (std::uint32_t y = 0; y <= t.total_ones() + 1; ++y) {
                if (x + y == 0) continue;
                ASSERT_EQ(set.contains({x, y}), oracle::occurs(t, {x, y}));
            }
        }
    }
}

}  // namespace
}  // namespace bjsm
