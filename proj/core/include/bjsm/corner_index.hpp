#pragma once

// Bucketed Corner Index.
//
// G(x) / g(x) are the minimum / maximum number of ones over substrings with
// exactly x zeros, and (x, y) occurs iff G(x) <= y <= g(x). Both functions are
// non-decreasing step functions, so they are stored as staircases of corner
// points. The zeros axis is cut into buckets of width B. A finished frontier
// keeps all buckets as sorted slices of one flat array, so a lookup is a
// binary search over at most B + 1 points.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bjsm/text.hpp"

namespace bjsm {

using FrontierPoint = ParikhVector;

/// Which corner set a staircase encodes.
///
/// min_ones: (x, y) dominates (x', y') iff they differ, x >= x' and y <= y'.
///   Its maximal elements are the corners of G, resolved by successor lookup.
/// max_ones: the mirror, x <= x' and y >= y'. Corners of g, resolved by
///   predecessor lookup.
enum class Dominance : std::uint8_t { min_ones, max_ones };

bool dominates(Dominance d, const FrontierPoint& a, const FrontierPoint& b) noexcept;

/// Strict staircase of mutually non-dominated points keyed by zeros. Used
/// while reducing candidate points; inserts cost O(log size).
class Staircase {
public:
    explicit Staircase(Dominance d) : dominance_(d) {}

    /// Inserts p unless an existing point dominates or equals it, then drops
    /// every point p dominates. Returns whether p was inserted.
    bool insert(const FrontierPoint& p);

    /// Stores p with no dominance check. Used for boundary fill and reload.
    void place(const FrontierPoint& p, bool synthetic);

    /// Smallest stored point with zeros >= x.
    std::optional<FrontierPoint> successor(std::uint32_t x) const;
    /// Largest stored point with zeros <= x.
    std::optional<FrontierPoint> predecessor(std::uint32_t x) const;

    bool contains_zeros(std::uint32_t x) const { return points_.contains(x); }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    Dominance dominance() const noexcept { return dominance_; }

    std::optional<FrontierPoint> first() const;
    std::optional<FrontierPoint> last() const;

    /// Points in increasing zeros order; synthetic ones included only if asked.
    std::vector<FrontierPoint> points(bool include_synthetic = true) const;
    std::size_t synthetic_count() const noexcept;

private:
    struct Entry {
        std::uint32_t ones;
        bool synthetic;
    };
    Dominance dominance_;
    std::map<std::uint32_t, Entry> points_;
};

/// Per-phase bucket occupancy peaks, recorded on every build.
struct OccupancyStats {
    std::size_t pass1 = 0;
    std::size_t pass2 = 0;
    std::size_t filled = 0;
};

/// Corner points bucketed by zeros into [j*B, (j+1)*B - 1].
class BucketedFrontier {
public:
    BucketedFrontier() = default;
    /// corners must have strictly increasing zeros, all within [0, domain_max].
    BucketedFrontier(Dominance d, std::uint32_t bucket_width, std::uint32_t domain_max,
                     std::size_t bucket_count, std::span<const FrontierPoint> corners = {});

    Dominance dominance() const noexcept { return dominance_; }
    std::uint32_t bucket_width() const noexcept { return bucket_width_; }
    std::uint32_t domain_max() const noexcept { return domain_max_; }
    std::size_t bucket_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t bucket_of(std::uint32_t zeros) const noexcept { return zeros / bucket_width_; }

    /// Points stored in bucket j, synthetic ones included, by increasing zeros.
    std::span<const FrontierPoint> bucket(std::size_t j) const;
    std::size_t bucket_synthetic(std::size_t j) const;

    /// Stores p, replacing any point with the same zeros, with no dominance
    /// check. O(stored points); meant for tests and fault injection.
    void place(const FrontierPoint& p, bool synthetic = false);

    /// Adds at most one synthetic endpoint per bucket so that every lookup
    /// in the domain resolves inside a single bucket. min_ones scans right to
    /// left and fills clamped right endpoints with the value of the nearest
    /// corner to the right; max_ones scans left to right and fills left
    /// endpoints with the value of the nearest corner to the left (0 if none).
    void fill_boundaries();

    /// Successor (min_ones) or predecessor (max_ones) ones value at x.
    /// Throws std::logic_error if the bucket cannot resolve x.
    std::uint32_t lookup(std::uint32_t x) const;

    /// Corner points, excluding synthetic fill, in increasing zeros order.
    std::vector<FrontierPoint> corners() const;
    std::size_t corner_count() const noexcept { return points_.size() - synthetic_total_; }
    std::size_t stored_points() const noexcept { return points_.size(); }
    std::size_t max_occupancy() const noexcept;

private:
    Dominance dominance_ = Dominance::min_ones;
    std::uint32_t bucket_width_ = 1;
    std::uint32_t domain_max_ = 0;
    // Bucket j owns points_[offsets_[j], offsets_[j + 1]).
    std::vector<std::uint32_t> offsets_;
    std::vector<FrontierPoint> points_;
    std::vector<std::uint8_t> synthetic_;
    std::size_t synthetic_total_ = 0;
};

/// Two-pass bucketed reduction of a point set to its maximal elements.
///
/// Pass 1 buckets incoming points by ones / B and keeps a staircase per
/// bucket. Pass 2 walks those buckets from the strongest side (increasing
/// ones for min_ones, decreasing for max_ones) and forwards a point only if
/// its zeros lie strictly beyond every zeros value seen in earlier buckets.
class FrontierBuilder {
public:
    FrontierBuilder(Dominance d, std::uint32_t bucket_width, std::uint32_t max_ones,
                    std::uint32_t domain_max, std::size_t output_buckets);

    void add(const FrontierPoint& p);

    /// Runs pass 2. The builder is spent afterwards.
    BucketedFrontier finish(OccupancyStats* stats = nullptr) &&;

private:
    Dominance dominance_;
    std::uint32_t bucket_width_;
    std::uint32_t domain_max_;
    std::size_t output_buckets_;
    std::vector<Staircase> by_ones_;
    std::size_t pass1_peak_ = 0;
};

/// Maximal elements of points, bucketed by zeros, before boundary fill.
BucketedFrontier build_frontier(std::span<const FrontierPoint> points, Dominance d,
                                std::uint32_t bucket_width, std::uint32_t domain_max,
                                OccupancyStats* stats = nullptr);

/// Parikh vectors of substrings that begin and end with full runs of
/// `symbol`, deduplicated and sorted. O(l^2) in the number of such runs.
std::vector<ParikhVector> run_bounded_vectors(const RunLengthEncoding& rle, std::uint8_t symbol);
inline std::vector<ParikhVector> enumerate_pi0(const RunLengthEncoding& rle) {
    return run_bounded_vectors(rle, 0);
}
inline std::vector<ParikhVector> enumerate_pi1(const RunLengthEncoding& rle) {
    return run_bounded_vectors(rle, 1);
}

struct CornerMetadata {
    std::uint32_t n = 0;
    std::uint32_t zeros = 0;
    std::uint32_t ones = 0;
    std::uint32_t bucket_width = 1;
    std::uint32_t maxrun0 = 0;
    std::uint32_t maxrun1 = 0;

    friend bool operator==(const CornerMetadata&, const CornerMetadata&) = default;
};

class CornerIndex {
public:
    CornerIndex() = default;

    /// Builds in O(r^2 log B + n / B). With checked set, throws
    /// std::logic_error if any bucket ever holds more than B + 1 points.
    static CornerIndex build(const BinaryText& text, std::uint32_t bucket_width, bool checked = false);

    /// Rebuilds from stored corner sets. Throws std::invalid_argument if the
    /// points are not a strict staircase consistent with the metadata.
    static CornerIndex from_corners(const CornerMetadata& meta, std::span<const FrontierPoint> lower,
                                    std::span<const FrontierPoint> upper);

    const CornerMetadata& metadata() const noexcept { return meta_; }
    std::uint32_t bucket_width() const noexcept { return meta_.bucket_width; }

    /// G(x) for 1 <= x <= zeros. Throws std::out_of_range otherwise.
    std::uint32_t min_ones(std::uint32_t x) const;
    /// g(x) for 0 <= x <= zeros. Throws std::out_of_range otherwise.
    std::uint32_t max_ones(std::uint32_t x) const;

    /// Throws std::invalid_argument for the empty pattern.
    bool occurs(const ParikhVector& pv) const;

    const BucketedFrontier& lower() const noexcept { return lower_; }
    const BucketedFrontier& upper() const noexcept { return upper_; }

    std::size_t corner_count() const noexcept { return lower_.corner_count() + upper_.corner_count(); }
    std::size_t stored_points() const noexcept { return lower_.stored_points() + upper_.stored_points(); }
    std::size_t bucket_count() const noexcept { return lower_.bucket_count() + upper_.bucket_count(); }

    const OccupancyStats& lower_stats() const noexcept { return lower_stats_; }
    const OccupancyStats& upper_stats() const noexcept { return upper_stats_; }

    /// Test hook: corrupts one stored corner so that at least one query
    /// answers wrongly. Returns a description of what was changed.
    std::string inject_fault_for_testing();

private:
    CornerMetadata meta_;
    BucketedFrontier lower_;
    BucketedFrontier upper_;
    OccupancyStats lower_stats_;
    OccupancyStats upper_stats_;
};

}  // namespace bjsm
