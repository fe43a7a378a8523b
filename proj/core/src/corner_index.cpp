#include "bjsm/corner_index.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace bjsm {

namespace {

/// Calls fn(pv) for every substring that starts and ends on a full run of
/// `symbol`. Pairs of runs are visited in O(l^2) using run-level prefix sums.
template <typename Fn>
void for_each_run_bounded(const RunLengthEncoding& rle, std::uint8_t symbol, Fn&& fn) {
    const auto& runs = rle.runs;
    std::vector<std::uint32_t> zeros_before(runs.size() + 1, 0);
    std::vector<std::uint32_t> ones_before(runs.size() + 1, 0);
    std::vector<std::size_t> bounded;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        zeros_before[i + 1] = zeros_before[i] + (runs[i].symbol == 0 ? runs[i].length : 0);
        ones_before[i + 1] = ones_before[i] + (runs[i].symbol == 1 ? runs[i].length : 0);
        if (runs[i].symbol == symbol) bounded.push_back(i);
    }
    for (std::size_t a = 0; a < bounded.size(); ++a) {
        for (std::size_t b = a; b < bounded.size(); ++b) {
            const std::size_t first = bounded[a];
            const std::size_t last = bounded[b] + 1;
            fn(ParikhVector{zeros_before[last] - zeros_before[first],
                            ones_before[last] - ones_before[first]});
        }
    }
}

std::size_t bucket_span(std::uint32_t domain_max, std::uint32_t width) {
    return static_cast<std::size_t>(domain_max / width) + 1;
}

}  // namespace

bool dominates(Dominance d, const FrontierPoint& a, const FrontierPoint& b) noexcept {
    if (a == b) return false;
    if (d == Dominance::min_ones) return a.zeros >= b.zeros && a.ones <= b.ones;
    return a.zeros <= b.zeros && a.ones >= b.ones;
}

// ---------------------------------------------------------------------------
// Staircase

bool Staircase::insert(const FrontierPoint& p) {
    if (dominance_ == Dominance::min_ones) {
        // Among points with zeros >= p.zeros the successor has the fewest ones.
        auto it = points_.lower_bound(p.zeros);
        if (it != points_.end() && it->second.ones <= p.ones) return false;
        if (it != points_.end() && it->first == p.zeros) it = points_.erase(it);
        while (it != points_.begin()) {
            auto prev = std::prev(it);
            if (prev->second.ones < p.ones) break;
            points_.erase(prev);
        }
        points_.emplace_hint(it, p.zeros, Entry{p.ones, false});
        return true;
    }
    // Among points with zeros <= p.zeros the predecessor has the most ones.
    auto it = points_.upper_bound(p.zeros);
    if (it != points_.begin() && std::prev(it)->second.ones >= p.ones) return false;
    if (it != points_.begin() && std::prev(it)->first == p.zeros) points_.erase(std::prev(it));
    while (it != points_.end() && it->second.ones <= p.ones) it = points_.erase(it);
    points_.emplace_hint(it, p.zeros, Entry{p.ones, false});
    return true;
}

void Staircase::place(const FrontierPoint& p, bool synthetic) {
    points_.insert_or_assign(p.zeros, Entry{p.ones, synthetic});
}

std::optional<FrontierPoint> Staircase::successor(std::uint32_t x) const {
    auto it = points_.lower_bound(x);
    if (it == points_.end()) return std::nullopt;
    return FrontierPoint{it->first, it->second.ones};
}

std::optional<FrontierPoint> Staircase::predecessor(std::uint32_t x) const {
    auto it = points_.upper_bound(x);
    if (it == points_.begin()) return std::nullopt;
    --it;
    return FrontierPoint{it->first, it->second.ones};
}

std::optional<FrontierPoint> Staircase::first() const {
    if (points_.empty()) return std::nullopt;
    return FrontierPoint{points_.begin()->first, points_.begin()->second.ones};
}

std::optional<FrontierPoint> Staircase::last() const {
    if (points_.empty()) return std::nullopt;
    const auto& [x, e] = *points_.rbegin();
    return FrontierPoint{x, e.ones};
}

std::vector<FrontierPoint> Staircase::points(bool include_synthetic) const {
    std::vector<FrontierPoint> out;
    out.reserve(points_.size());
    for (const auto& [x, e] : points_) {
        if (include_synthetic || !e.synthetic) out.push_back({x, e.ones});
    }
    return out;
}

std::size_t Staircase::synthetic_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [](const auto& kv) { return kv.second.synthetic; }));
}

// ---------------------------------------------------------------------------
// BucketedFrontier

BucketedFrontier::BucketedFrontier(Dominance d, std::uint32_t bucket_width, std::uint32_t domain_max,
                                   std::size_t bucket_count, std::span<const FrontierPoint> corners)
    : dominance_(d), bucket_width_(bucket_width), domain_max_(domain_max) {
    if (bucket_width == 0) throw std::invalid_argument("bucket width must be >= 1");
    offsets_.assign(bucket_count + 1, 0);
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const auto x = corners[i].zeros;
        if (i > 0 && corners[i - 1].zeros >= x) throw std::invalid_argument("corners must have increasing zeros");
        if (x > domain_max || bucket_of(x) >= bucket_count) throw std::invalid_argument("corner outside the domain");
        ++offsets_[bucket_of(x) + 1];
    }
    for (std::size_t j = 0; j < bucket_count; ++j) offsets_[j + 1] += offsets_[j];
    points_.assign(corners.begin(), corners.end());
    synthetic_.assign(points_.size(), 0);
}

std::span<const FrontierPoint> BucketedFrontier::bucket(std::size_t j) const {
    if (j >= bucket_count()) throw std::out_of_range("bucket " + std::to_string(j) + " out of range");
    return std::span(points_).subspan(offsets_[j], offsets_[j + 1] - offsets_[j]);
}

std::size_t BucketedFrontier::bucket_synthetic(std::size_t j) const {
    bucket(j);
    return static_cast<std::size_t>(
        std::count(synthetic_.begin() + offsets_[j], synthetic_.begin() + offsets_[j + 1], std::uint8_t{1}));
}

void BucketedFrontier::place(const FrontierPoint& p, bool synthetic) {
    const std::size_t j = bucket_of(p.zeros);
    if (j >= bucket_count()) throw std::out_of_range("zeros " + std::to_string(p.zeros) + " has no bucket");
    const auto first = points_.begin() + offsets_[j];
    const auto last = points_.begin() + offsets_[j + 1];
    const auto it = std::lower_bound(first, last, p.zeros,
                                     [](const FrontierPoint& q, std::uint32_t x) { return q.zeros < x; });
    const auto pos = static_cast<std::size_t>(it - points_.begin());
    if (it != last && it->zeros == p.zeros) {
        synthetic_total_ += std::size_t{synthetic} - synthetic_[pos];
        *it = p;
        synthetic_[pos] = synthetic;
        return;
    }
    points_.insert(it, p);
    synthetic_.insert(synthetic_.begin() + static_cast<std::ptrdiff_t>(pos), synthetic);
    synthetic_total_ += synthetic;
    for (std::size_t k = j + 1; k < offsets_.size(); ++k) ++offsets_[k];
}

void BucketedFrontier::fill_boundaries() {
    const std::size_t count = bucket_count();
    // fill[j] is the synthetic point bucket j gains, if any.
    std::vector<std::optional<FrontierPoint>> fill(count);
    if (dominance_ == Dominance::min_ones) {
        std::optional<std::uint32_t> carry;
        for (std::size_t j = count; j-- > 0;) {
            const auto right = static_cast<std::uint32_t>(
                std::min<std::uint64_t>((j + 1) * std::uint64_t{bucket_width_} - 1, domain_max_));
            const auto pts = bucket(j);
            if (right >= 1 && (pts.empty() || pts.back().zeros != right)) {
                if (!carry) {
                    throw std::logic_error("no corner to the right of zeros " + std::to_string(right));
                }
                fill[j] = FrontierPoint{right, *carry};
            }
            if (!pts.empty()) carry = pts.front().ones;
            else if (fill[j]) carry = fill[j]->ones;
        }
    } else {
        std::uint32_t carry = 0;
        for (std::size_t j = 0; j < count; ++j) {
            const auto left = static_cast<std::uint32_t>(j * bucket_width_);
            const auto pts = bucket(j);
            if (pts.empty() || pts.front().zeros != left) fill[j] = FrontierPoint{left, carry};
            carry = pts.empty() ? carry : pts.back().ones;
        }
    }

    std::vector<std::uint32_t> offsets(count + 1, 0);
    std::vector<FrontierPoint> points;
    std::vector<std::uint8_t> synthetic;
    points.reserve(points_.size() + count);
    synthetic.reserve(points_.size() + count);
    const bool append = dominance_ == Dominance::min_ones;
    for (std::size_t j = 0; j < count; ++j) {
        if (fill[j] && !append) {
            points.push_back(*fill[j]);
            synthetic.push_back(1);
        }
        points.insert(points.end(), points_.begin() + offsets_[j], points_.begin() + offsets_[j + 1]);
        synthetic.insert(synthetic.end(), synthetic_.begin() + offsets_[j], synthetic_.begin() + offsets_[j + 1]);
        if (fill[j] && append) {
            points.push_back(*fill[j]);
            synthetic.push_back(1);
        }
        offsets[j + 1] = static_cast<std::uint32_t>(points.size());
    }
    synthetic_total_ += static_cast<std::size_t>(std::count_if(fill.begin(), fill.end(), [](const auto& f) {
        return f.has_value();
    }));
    offsets_ = std::move(offsets);
    points_ = std::move(points);
    synthetic_ = std::move(synthetic);
}

std::uint32_t BucketedFrontier::lookup(std::uint32_t x) const {
    const std::size_t j = bucket_of(x);
    if (j >= bucket_count()) {
        throw std::logic_error("zeros " + std::to_string(x) + " has no bucket");
    }
    const auto first = points_.begin() + offsets_[j];
    const auto last = points_.begin() + offsets_[j + 1];
    if (dominance_ == Dominance::min_ones) {
        const auto it = std::lower_bound(first, last, x,
                                         [](const FrontierPoint& q, std::uint32_t v) { return q.zeros < v; });
        if (it != last) return it->ones;
    } else {
        const auto it = std::upper_bound(first, last, x,
                                         [](std::uint32_t v, const FrontierPoint& q) { return v < q.zeros; });
        if (it != first) return std::prev(it)->ones;
    }
    throw std::logic_error("bucket " + std::to_string(j) + " cannot resolve zeros " + std::to_string(x));
}

std::vector<FrontierPoint> BucketedFrontier::corners() const {
    std::vector<FrontierPoint> out;
    out.reserve(corner_count());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!synthetic_[i]) out.push_back(points_[i]);
    }
    return out;
}

std::size_t BucketedFrontier::max_occupancy() const noexcept {
    std::size_t peak = 0;
    for (std::size_t j = 0; j + 1 < offsets_.size(); ++j) peak = std::max<std::size_t>(peak, offsets_[j + 1] - offsets_[j]);
    return peak;
}

// ---------------------------------------------------------------------------
// FrontierBuilder

FrontierBuilder::FrontierBuilder(Dominance d, std::uint32_t bucket_width, std::uint32_t max_ones,
                                 std::uint32_t domain_max, std::size_t output_buckets)
    : dominance_(d), bucket_width_(bucket_width), domain_max_(domain_max), output_buckets_(output_buckets) {
    if (bucket_width == 0) throw std::invalid_argument("bucket width must be >= 1");
    by_ones_.assign(bucket_span(max_ones, bucket_width), Staircase(d));
}

void FrontierBuilder::add(const FrontierPoint& p) {
    auto& bucket = by_ones_.at(p.ones / bucket_width_);
    if (bucket.insert(p)) pass1_peak_ = std::max(pass1_peak_, bucket.size());
}

BucketedFrontier FrontierBuilder::finish(OccupancyStats* stats) && {
    std::vector<FrontierPoint> kept;
    const auto forward = [&](const Staircase& bucket, auto&& keep) {
        for (const auto& p : bucket.points()) {
            if (keep(p.zeros)) kept.push_back(p);
        }
    };
    if (dominance_ == Dominance::min_ones) {
        // Increasing ones: anything with zeros <= x_max is dominated by an
        // earlier (fewer-ones) point. Survivors come out in zeros order.
        std::optional<std::uint32_t> x_max;
        for (const auto& bucket : by_ones_) {
            if (bucket.empty()) continue;
            forward(bucket, [&](std::uint32_t x) { return !x_max || x > *x_max; });
            x_max = std::max(x_max.value_or(0), bucket.last()->zeros);
        }
    } else {
        // Decreasing ones. Each bucket's survivors lie left of all earlier
        // ones, so the blocks arrive in reverse zeros order.
        std::vector<std::size_t> block_starts;
        std::optional<std::uint32_t> x_min;
        for (auto it = by_ones_.rbegin(); it != by_ones_.rend(); ++it) {
            if (it->empty()) continue;
            block_starts.push_back(kept.size());
            forward(*it, [&](std::uint32_t x) { return !x_min || x < *x_min; });
            x_min = std::min(x_min.value_or(it->first()->zeros), it->first()->zeros);
        }
        std::vector<FrontierPoint> ordered;
        ordered.reserve(kept.size());
        std::size_t end = kept.size();
        for (auto s = block_starts.rbegin(); s != block_starts.rend(); ++s) {
            ordered.insert(ordered.end(), kept.begin() + static_cast<std::ptrdiff_t>(*s),
                           kept.begin() + static_cast<std::ptrdiff_t>(end));
            end = *s;
        }
        kept = std::move(ordered);
    }
    BucketedFrontier out(dominance_, bucket_width_, domain_max_, output_buckets_, kept);
    if (stats) {
        stats->pass1 = pass1_peak_;
        stats->pass2 = out.max_occupancy();
    }
    by_ones_.clear();
    return out;
}

BucketedFrontier build_frontier(std::span<const FrontierPoint> points, Dominance d, std::uint32_t bucket_width,
                                std::uint32_t domain_max, OccupancyStats* stats) {
    std::uint32_t max_ones = 0;
    for (const auto& p : points) max_ones = std::max(max_ones, p.ones);
    FrontierBuilder builder(d, bucket_width, max_ones, domain_max, bucket_span(domain_max, bucket_width));
    for (const auto& p : points) builder.add(p);
    return std::move(builder).finish(stats);
}

std::vector<ParikhVector> run_bounded_vectors(const RunLengthEncoding& rle, std::uint8_t symbol) {
    std::vector<ParikhVector> out;
    for_each_run_bounded(rle, symbol, [&](const ParikhVector& pv) { out.push_back(pv); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// CornerIndex

namespace {

void check_occupancy(const OccupancyStats& s, std::uint32_t width, const char* which) {
    const std::size_t limit = std::size_t{width} + 1;
    if (s.pass1 > width || s.pass2 > width || s.filled > limit) {
        throw std::logic_error(std::string(which) + " bucket occupancy exceeds bound: pass1=" +
                               std::to_string(s.pass1) + " pass2=" + std::to_string(s.pass2) +
                               " filled=" + std::to_string(s.filled) + " B=" + std::to_string(width));
    }
}

}  // namespace

CornerIndex CornerIndex::build(const BinaryText& text, std::uint32_t bucket_width, bool checked) {
    if (bucket_width == 0) throw std::invalid_argument("bucket width must be >= 1");
    const auto rle = run_length_encode(text);

    CornerIndex idx;
    idx.meta_ = CornerMetadata{static_cast<std::uint32_t>(text.size()), text.total_zeros(), text.total_ones(),
                               bucket_width, rle.longest_run(0), rle.longest_run(1)};
    const auto& m = idx.meta_;
    const std::size_t lower_buckets = m.zeros == 0 ? 0 : bucket_span(m.zeros, bucket_width);
    const std::size_t upper_buckets = m.n == 0 ? 0 : bucket_span(m.zeros, bucket_width);

    FrontierBuilder lower(Dominance::min_ones, bucket_width, m.ones, m.zeros, lower_buckets);
    for_each_run_bounded(rle, 0, [&](const ParikhVector& pv) { lower.add(pv); });
    idx.lower_ = std::move(lower).finish(&idx.lower_stats_);
    idx.lower_.fill_boundaries();
    idx.lower_stats_.filled = idx.lower_.max_occupancy();

    FrontierBuilder upper(Dominance::max_ones, bucket_width, m.ones, m.zeros, upper_buckets);
    for_each_run_bounded(rle, 1, [&](const ParikhVector& pv) { upper.add(pv); });
    idx.upper_ = std::move(upper).finish(&idx.upper_stats_);
    idx.upper_.fill_boundaries();
    idx.upper_stats_.filled = idx.upper_.max_occupancy();

    if (checked) {
        check_occupancy(idx.lower_stats_, bucket_width, "lower");
        check_occupancy(idx.upper_stats_, bucket_width, "upper");
    }
    return idx;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_staircase(std::span<const FrontierPoint> pts, const char* which) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
        require(pts[i - 1].zeros < pts[i].zeros && pts[i - 1].ones < pts[i].ones,
                std::string(which) + " point " + std::to_string(i) + " breaks the staircase");
    }
}

}  // namespace

CornerIndex CornerIndex::from_corners(const CornerMetadata& meta, std::span<const FrontierPoint> lower,
                                      std::span<const FrontierPoint> upper) {
    require(meta.bucket_width >= 1, "bucket width must be >= 1");
    require(std::uint64_t{meta.zeros} + meta.ones == meta.n, "zeros + ones must equal n");
    require(meta.maxrun0 <= meta.zeros && (meta.maxrun0 == 0) == (meta.zeros == 0), "maxrun0 inconsistent");
    require(meta.maxrun1 <= meta.ones && (meta.maxrun1 == 0) == (meta.ones == 0), "maxrun1 inconsistent");
    check_staircase(lower, "LG");
    check_staircase(upper, "Lg");
    for (const auto& p : lower) {
        require(p.zeros >= 1 && p.zeros <= meta.zeros && p.ones <= meta.ones, "LG point out of range");
    }
    for (const auto& p : upper) {
        require(p.zeros <= meta.zeros && p.ones >= 1 && p.ones <= meta.ones, "Lg point out of range");
    }
    require(lower.empty() == (meta.zeros == 0), "LG must be non-empty iff the text has zeros");
    require(lower.empty() || lower.back().zeros == meta.zeros, "last LG point must sit at the total zeros");
    require(upper.empty() == (meta.ones == 0), "Lg must be non-empty iff the text has ones");
    require(upper.empty() || (upper.front().zeros == 0 && upper.front().ones == meta.maxrun1),
            "first Lg point must be (0, maxrun1)");
    require(upper.empty() || upper.back().ones == meta.ones, "last Lg point must carry all ones");

    CornerIndex idx;
    idx.meta_ = meta;
    const std::size_t lower_buckets = meta.zeros == 0 ? 0 : bucket_span(meta.zeros, meta.bucket_width);
    const std::size_t upper_buckets = meta.n == 0 ? 0 : bucket_span(meta.zeros, meta.bucket_width);
    idx.lower_ = BucketedFrontier(Dominance::min_ones, meta.bucket_width, meta.zeros, lower_buckets, lower);
    idx.upper_ = BucketedFrontier(Dominance::max_ones, meta.bucket_width, meta.zeros, upper_buckets, upper);
    idx.lower_stats_.pass2 = idx.lower_.max_occupancy();
    idx.upper_stats_.pass2 = idx.upper_.max_occupancy();
    idx.lower_.fill_boundaries();
    idx.upper_.fill_boundaries();
    idx.lower_stats_.filled = idx.lower_.max_occupancy();
    idx.upper_stats_.filled = idx.upper_.max_occupancy();
    return idx;
}

std::uint32_t CornerIndex::min_ones(std::uint32_t x) const {
    if (x < 1 || x > meta_.zeros) {
        throw std::out_of_range("zeros " + std::to_string(x) + " outside [1, " + std::to_string(meta_.zeros) + "]");
    }
    return lower_.lookup(x);
}

std::uint32_t CornerIndex::max_ones(std::uint32_t x) const {
    if (x > meta_.zeros) {
        throw std::out_of_range("zeros " + std::to_string(x) + " outside [0, " + std::to_string(meta_.zeros) + "]");
    }
    if (meta_.n == 0) return 0;
    return upper_.lookup(x);
}

bool CornerIndex::occurs(const ParikhVector& pv) const {
    require_nonempty_pattern(pv);
    if (pv.zeros > meta_.zeros || pv.ones > meta_.ones) return false;
    if (pv.zeros == 0) return pv.ones <= meta_.maxrun1;
    if (pv.ones == 0) return pv.zeros <= meta_.maxrun0;
    return min_ones(pv.zeros) <= pv.ones && pv.ones <= max_ones(pv.zeros);
}

std::string CornerIndex::inject_fault_for_testing() {
    const auto describe = [](const char* which, FrontierPoint from, FrontierPoint to) {
        return std::string(which) + " corner (" + std::to_string(from.zeros) + "," + std::to_string(from.ones) +
               ") moved to (" + std::to_string(to.zeros) + "," + std::to_string(to.ones) + ")";
    };
    // Axis queries never consult the frontiers, so only corners with both
    // coordinates positive are useful targets.
    for (const auto& p : lower_.corners()) {
        if (p.ones >= 1) {
            const FrontierPoint moved{p.zeros, p.ones + 1};
            lower_.place(moved);
            return describe("LG", p, moved);
        }
    }
    for (const auto& p : upper_.corners()) {
        if (p.zeros >= 1) {
            const FrontierPoint moved{p.zeros, p.ones - 1};
            upper_.place(moved);
            return describe("Lg", p, moved);
        }
    }
    if (meta_.maxrun1 > 0) {
        --meta_.maxrun1;
        return "maxrun1 lowered to " + std::to_string(meta_.maxrun1);
    }
    if (meta_.maxrun0 > 0) {
        --meta_.maxrun0;
        return "maxrun0 lowered to " + std::to_string(meta_.maxrun0);
    }
    return {};
}

}  // namespace bjsm
