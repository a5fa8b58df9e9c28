// RadixSA: initial radix sort by d symbols, then bucket refinement driven by
// suffix positions in decreasing order, with periodic-run induction and an
// access cap that bounds the work of each pass.

#pragma once

#include <radixsa/radix_engine.hpp>
#include <radixsa/text.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace radixsa {

//! Cap value that never triggers (access counters saturate at 255).
inline constexpr unsigned kUncapped = 255;

//! Emitted once after the initial sort (pass 0), then after each bucket the
//! main loop touches.
struct StepEvent
{
    enum class Kind { initial, sorted, periodic, skipped };

    Kind kind;
    index_t suffix;    //!< loop position that selected the bucket
    Bucket bucket;     //!< the bucket before it was refined
    std::size_t pass;  //!< 1-based
    const BucketState& state;
};

struct RadixSaConfig
{
    //! symbols in the initial sort key; 0 selects as many as fit a 64-bit word
    std::size_t initial_depth = 0;
    //! a bucket is skipped for the rest of a pass once a member has taken part
    //! in more than this many sorts during the pass (1..255, 255 = never)
    unsigned access_cap = 8;
    std::size_t small_bucket_threshold = kDefaultSmallSortThreshold;
    bool detect_periods = true;
    //! keep cumulative per-suffix participation counts in the stats
    bool record_profile = false;
    std::function<void(const StepEvent&)> observer;
};

struct RadixSaStats
{
    std::size_t n = 0;
    std::size_t initial_depth = 0;
    std::size_t passes = 0;
    std::size_t pass_bound = 0;
    //! the last allowed pass ran with the cap lifted
    bool forced_final_pass = false;
    std::uint64_t participations = 0;
    std::vector<std::uint64_t> participations_per_pass;
    std::uint64_t bucket_sorts = 0;
    std::uint64_t period_resolutions = 0;
    std::uint64_t skipped_buckets = 0;
    std::size_t peak_aux_bytes = 0;
    //! per-suffix participations over all passes (record_profile only)
    std::vector<std::uint32_t> access_profile;

    double mean_accesses() const noexcept {
        return n == 0 ? 0.0 : static_cast<double>(participations) / static_cast<double>(n);
    }
};

struct RadixSaResult
{
    SuffixArray sa;
    RadixSaStats stats;
};

RadixSaResult radix_sa(const Text& t, const RadixSaConfig& cfg = {});

//! Most symbols of the text that fit one 64-bit sort key.
std::size_t max_initial_depth(const Text& t) noexcept;

//! ceil(log_{cap+1} n) + 1; 0 for n <= 1.
std::size_t pass_bound(std::size_t n, unsigned access_cap);

/*!
 * Sort all suffixes by their first `depth` symbols (pad code 0 past the end)
 * and group equal prefixes into buckets of that depth. Counting sort on the
 * leading 16 key bits, then a radix sort of each resulting range.
 */
BucketState initial_radix_sort(const Text& t, std::size_t depth,
                               std::size_t small_threshold = kDefaultSmallSortThreshold);

//! Members i, i-p, i-2p, ... of one bucket; anchor i has i+p outside it.
struct PeriodChain
{
    std::size_t period = 0;
    std::vector<index_t> members;  //!< anchor first, then decreasing
    index_t anchor = 0;
};

/*!
 * Chains of a non-singleton bucket for the period p = (largest member) -
 * (next largest member), provided p does not exceed the bucket depth.
 * Only chains with at least two members are returned; empty when p exceeds
 * the depth.
 */
std::vector<PeriodChain> detect_periods(const BucketState& state, Bucket bucket);

/*!
 * Order the whole bucket by induction from its anchors: a member j with j+p
 * in the bucket compares like j+p does. Anchors are ordered by the bucket of
 * their successor. Returns false and leaves the state untouched when two
 * anchors' successors share a non-singleton bucket.
 */
bool handle_periods(BucketState& state, Bucket bucket,
                    std::span<const PeriodChain> chains);

} // namespace radixsa
