// LSD radix sorting and packed bucket bookkeeping.
//
// All histograms needed by an LSD sort are filled in one scan over the keys
// before the first placement pass; rounds whose digit is the same for every
// key are skipped. Inputs at or below the small-sort threshold are handled by
// an iterative (bottom-up) merge sort instead.

#pragma once

#include <radixsa/lmer.hpp>
#include <radixsa/memory.hpp>
#include <radixsa/text.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace radixsa {

inline constexpr std::size_t kDefaultSmallSortThreshold = 32;

//! Operation counters, cumulative over the lifetime of a RadixScratch.
struct RadixCounters
{
    std::uint64_t sorts = 0;            //!< sort invocations
    std::uint64_t merge_sorts = 0;      //!< invocations served by merge sort
    std::uint64_t histogram_scans = 0;  //!< counting scans over the keys
    std::uint64_t placement_passes = 0; //!< scatter passes actually performed
};

//! Reusable buffers for sorting; grown on demand, never shrunk.
class RadixScratch
{
public:
    explicit RadixScratch(std::size_t small_threshold = kDefaultSmallSortThreshold)
        : small_threshold_(small_threshold) { }

    std::size_t small_threshold() const noexcept { return small_threshold_; }
    const RadixCounters& counters() const noexcept { return counters_; }
    RadixCounters& counters() noexcept { return counters_; }

    //! working arrays of at least `count` entries for callers to fill
    std::span<std::uint64_t> keys(std::size_t count) { return grow(keys_, count); }
    std::span<index_t> values(std::size_t count) { return grow(values_, count); }

    // second buffers used by the sorters themselves
    std::span<std::uint64_t> keys_tmp(std::size_t count) { return grow(keys_tmp_, count); }
    std::span<index_t> values_tmp(std::size_t count) { return grow(values_tmp_, count); }
    std::span<std::uint32_t> histogram(std::size_t count) { return grow(histogram_, count); }

private:
    template <typename T>
    static std::span<T> grow(tracked_vector<T>& v, std::size_t count) {
        if (v.size() < count) v.resize(count);
        return std::span<T>(v).first(count);
    }

    std::size_t small_threshold_;
    RadixCounters counters_;
    tracked_vector<std::uint64_t> keys_, keys_tmp_;
    tracked_vector<index_t> values_, values_tmp_;
    tracked_vector<std::uint32_t> histogram_;
};

/*!
 * Stable sort of (key, value) pairs by the low `key_bits` bits of the key.
 * Uses 16-bit digits for inputs of at least 2^16 pairs and 8-bit digits below
 * that; merge sort at or below the scratch's small threshold.
 */
void sort_pairs(std::span<std::uint64_t> keys, std::span<index_t> values,
                unsigned key_bits, RadixScratch& scratch);

//! Stable LSD sort of positions by their multi-word fingerprint rows.
void sort_by_fingerprint(const FingerprintTable& table, std::span<index_t> order,
                         RadixScratch& scratch);

//! A bucket is the range [begin, end) of the current suffix ordering.
struct Bucket
{
    index_t begin = 0;
    index_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool operator == (const Bucket&) const = default;
};

//! Field layout of a packed bucket word for a given text length.
class PackedLayout
{
public:
    explicit PackedLayout(std::size_t n);

    unsigned start_bits() const noexcept { return start_bits_; }
    //! largest length stored inline; longer buckets use the overflow marker
    std::uint32_t max_inline_length() const noexcept { return marker_ - 1; }
    std::uint32_t overflow_marker() const noexcept { return marker_; }

    std::uint32_t pack(index_t start, std::size_t length) const noexcept {
        const std::uint32_t field = length >= marker_
            ? marker_ : static_cast<std::uint32_t>(length);
        return start | (field << start_bits_);
    }
    index_t start(std::uint32_t word) const noexcept { return word & start_mask_; }
    std::uint32_t length_field(std::uint32_t word) const noexcept {
        return word >> start_bits_;
    }

private:
    unsigned start_bits_;
    std::uint32_t start_mask_;
    std::uint32_t marker_;
};

/*!
 * The evolving partition of suffixes into buckets of the current ordering.
 *
 * entry(i) packs the bucket start of suffix i (its bucket number) with the
 * bucket length. Depths of non-singleton buckets live in two bytes of a side
 * array at the bucket start; depths that do not fit and lengths that overflow
 * the packed field go to a small map keyed by bucket start. Singleton buckets
 * carry no depth.
 */
class BucketState
{
public:
    //! all n suffixes, in position order, in one bucket of depth 0
    explicit BucketState(std::size_t n,
                         std::size_t small_threshold = kDefaultSmallSortThreshold);

    std::size_t size() const noexcept { return sa_.size(); }
    const PackedLayout& layout() const noexcept { return layout_; }

    std::span<index_t> sa() noexcept { return sa_; }
    std::span<const index_t> sa() const noexcept { return sa_; }
    std::span<const index_t> members(Bucket b) const noexcept {
        return std::span<const index_t>(sa_).subspan(b.begin, b.size());
    }

    std::uint32_t entry(index_t suffix) const noexcept { return entries_[suffix]; }
    //! bucket start; orders suffixes consistently with their shared prefixes
    index_t bucket_number(index_t suffix) const noexcept {
        return layout_.start(entries_[suffix]);
    }
    bool is_singleton(index_t suffix) const noexcept {
        return layout_.length_field(entries_[suffix]) == 1;
    }
    Bucket bucket_of(index_t suffix) const;
    //! shared-prefix length of a non-singleton bucket
    std::size_t depth(Bucket b) const;

    //! suffixes currently in non-singleton buckets
    std::size_t unresolved() const noexcept { return unresolved_; }

    /*!
     * Replace bucket `parent` by sub-buckets. Call dissolve(parent) once,
     * rearrange sa() within the parent's range, then define_bucket() for each
     * sub-range so that they exactly tile the parent.
     */
    void dissolve(Bucket parent);
    void define_bucket(Bucket b, std::size_t depth);

    std::uint8_t access_count(index_t suffix) const noexcept { return access_[suffix]; }
    //! saturating increment for every member of b
    void record_access(Bucket b) noexcept;
    void reset_access_counts() noexcept;

    RadixScratch& scratch() noexcept { return scratch_; }

    //! move the ordering out; the state is left empty
    SuffixArray release() &&;

private:
    struct Overflow
    {
        std::uint32_t length = 0;
        std::uint32_t depth = 0;
    };

    static constexpr std::uint16_t kDepthMarker = 0xFFFF;

    PackedLayout layout_;
    std::vector<index_t> sa_;
    tracked_vector<std::uint32_t> entries_;
    tracked_vector<std::uint8_t> side_;
    tracked_vector<std::uint8_t> access_;
    tracked_map<index_t, Overflow> overflow_;
    std::size_t unresolved_ = 0;
    RadixScratch scratch_;
};

//! Sort all positions by fingerprint and group equal fingerprints into
//! buckets of the given depth.
BucketState lsd_sort_fingerprints(const FingerprintTable& table, std::size_t depth,
                                  std::size_t small_threshold = kDefaultSmallSortThreshold);

struct Refinement
{
    std::size_t sub_buckets = 0;
    std::size_t largest = 0;
    std::size_t participants = 0;
};

/*!
 * Stable sort of a non-singleton bucket's members by key_of(member); runs of
 * equal keys become sub-buckets. A non-singleton run with key k gets depth
 * parent_depth + depth_gain(k); depth_gain is evaluated before any metadata
 * changes, so it may read the state (including the parent bucket itself).
 * Every member's access count is incremented.
 */
template <typename KeyOf, typename DepthGain>
Refinement sort_bucket_by_key(BucketState& state, Bucket bucket, unsigned key_bits,
                              KeyOf&& key_of, DepthGain&& depth_gain) {
    constexpr std::uint64_t kNotRunStart = std::numeric_limits<std::uint64_t>::max();

    const std::size_t m = bucket.size();
    RadixScratch& scratch = state.scratch();
    std::span<std::uint64_t> keys = scratch.keys(m);
    std::span<index_t> values = scratch.values(m);

    std::span<index_t> range = state.sa().subspan(bucket.begin, m);
    for (std::size_t k = 0; k < m; ++k) {
        values[k] = range[k];
        keys[k] = key_of(range[k]);
    }
    sort_pairs(keys, values, key_bits, scratch);

    // gains must be read before the parent bucket's metadata is released
    const std::size_t parent_depth = state.depth(bucket);
    std::span<std::uint64_t> gain = scratch.keys_tmp(m);
    for (std::size_t k = 0; k < m; ++k) {
        const bool start = k == 0 || keys[k] != keys[k - 1];
        const bool single = start && (k + 1 == m || keys[k + 1] != keys[k]);
        gain[k] = !start ? kNotRunStart : single ? 0 : depth_gain(keys[k]);
    }

    Refinement result;
    result.participants = m;
    state.dissolve(bucket);
    std::copy(values.begin(), values.end(), range.begin());
    std::size_t run = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        if (k < m && gain[k] == kNotRunStart) continue;
        const Bucket sub { static_cast<index_t>(bucket.begin + run),
                           static_cast<index_t>(bucket.begin + k) };
        state.define_bucket(sub, parent_depth + gain[run]);
        ++result.sub_buckets;
        result.largest = std::max(result.largest, sub.size());
        run = k;
    }
    state.record_access(bucket);
    return result;
}

} // namespace radixsa

