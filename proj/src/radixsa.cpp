#include <radixsa/radixsa.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace radixsa {

namespace {

//! first `count` symbols from j, msb-aligned in a 64-bit word, pad code 0
std::uint64_t prefix_key(const Text& t, std::size_t j, std::size_t count) noexcept {
    const unsigned b = t.bits_per_symbol();
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < count; ++k)
        key = (key << b) | t.at_padded(j + k);
    const std::size_t used = count * b;
    return used < kWordBits ? key << (kWordBits - used) : key;
}

unsigned key_bits_for(std::size_t n) noexcept {
    return static_cast<unsigned>(std::bit_width(n));
}

//! line 7 key: bucket of j + d, with suffixes that end within d ranking first
std::uint64_t successor_key(const BucketState& state, index_t j, std::size_t d) noexcept {
    const std::size_t next = j + d;
    return next >= state.size() ? 0 : std::uint64_t(state.bucket_number(
                                          static_cast<index_t>(next))) + 1;
}

/*!
 * Period p chosen from the two largest members; 0 when the bucket's depth
 * does not cover it.
 */
std::size_t choose_period(const BucketState& state, Bucket bucket, std::size_t depth) {
    const auto members = state.members(bucket);
    index_t first = std::max(members[0], members[1]);
    index_t second = std::min(members[0], members[1]);
    for (index_t j : members.subspan(2)) {
        if (j > first) { second = first; first = j; }
        else if (j > second) { second = j; }
    }
    const std::size_t p = first - second;
    return p <= depth ? p : 0;
}

/*!
 * Induced ordering of a bucket whose members share their first p symbols.
 * The anchors (successor j + p outside the bucket) are sorted by successor
 * bucket; the others are placed by scanning the finished part of the range
 * from both ends.
 */
bool resolve_periodic(BucketState& state, Bucket bucket, std::size_t p) {
    const std::size_t n = state.size();
    const std::size_t m = bucket.size();
    const index_t self = bucket.begin;
    auto in_bucket = [&](std::size_t pos) {
        return pos < n && state.bucket_number(static_cast<index_t>(pos)) == self;
    };

    std::size_t anchors = 0;
    for (index_t j : state.members(bucket))
        anchors += !in_bucket(j + p);

    RadixScratch& scratch = state.scratch();
    std::span<std::uint64_t> keys = scratch.keys(anchors);
    std::span<index_t> values = scratch.values(anchors);
    std::size_t next = 0;
    for (index_t j : state.members(bucket)) {
        if (in_bucket(j + p)) continue;
        keys[next] = successor_key(state, j, p);
        values[next++] = j;
    }
    sort_pairs(keys, values, key_bits_for(n), scratch);
    for (std::size_t k = 1; k < anchors; ++k) {
        if (keys[k] == keys[k - 1]) return false;
    }

    // anchors whose successor sorts below the bucket come first, the rest last
    const std::uint64_t own_key = std::uint64_t(self) + 1;
    const std::size_t below = static_cast<std::size_t>(
        std::lower_bound(keys.begin(), keys.end(), own_key) - keys.begin());
    const std::size_t above = anchors - below;

    std::span<index_t> range = state.sa().subspan(bucket.begin, m);
    std::copy(values.begin(), values.begin() + below, range.begin());
    std::copy(values.begin() + below, values.end(), range.end() - above);

    std::size_t write = below;
    for (std::size_t r = 0; r < write; ++r) {
        const index_t x = range[r];
        if (x >= p && in_bucket(x - p)) range[write++] = static_cast<index_t>(x - p);
    }
    std::size_t write_back = m - above;  // one past the next free slot from the right
    for (std::size_t r = m; r > write_back; --r) {
        const index_t x = range[r - 1];
        if (x >= p && in_bucket(x - p)) range[--write_back] = static_cast<index_t>(x - p);
    }
    if (write != write_back)
        throw std::logic_error("radixsa: periodic induction did not place every member");

    state.dissolve(bucket);
    for (index_t r = bucket.begin; r < bucket.end; ++r)
        state.define_bucket({ r, static_cast<index_t>(r + 1) }, 0);
    state.record_access(bucket);
    return true;
}

Refinement sort_by_successor(BucketState& state, Bucket bucket, std::size_t depth) {
    return sort_bucket_by_key(
        state, bucket, key_bits_for(state.size()),
        [&](index_t j) { return successor_key(state, j, depth); },
        [&](std::uint64_t key) -> std::size_t {
            const auto start = static_cast<index_t>(key - 1);
            if (start == bucket.begin) return depth;
            return state.depth(state.bucket_of(state.sa()[start]));
        });
}

class PassController
{
public:
    PassController(const Text& t, const RadixSaConfig& cfg, BucketState& state,
                   RadixSaStats& stats)
        : t_(t), cfg_(cfg), state_(state), stats_(stats) { }

    void run() {
        const std::size_t n = t_.size();
        stats_.pass_bound = pass_bound(n, cfg_.access_cap);
        if (n < 2) return;
        // the loop runs at least once even when the initial sort resolved everything
        do {
            ++stats_.passes;
            if (stats_.passes > stats_.pass_bound) {
                throw std::logic_error(
                    "radixsa: pass " + std::to_string(stats_.passes) +
                    " exceeds the bound " + std::to_string(stats_.pass_bound) +
                    " with " + std::to_string(state_.unresolved()) +
                    " suffixes unresolved");
            }
            // the last permitted pass runs uncapped, which resolves every bucket
            const bool capped = stats_.passes < stats_.pass_bound;
            if (!capped && cfg_.access_cap < kUncapped) stats_.forced_final_pass = true;
            run_pass(capped);
        } while (state_.unresolved() > 0);
    }

private:
    void run_pass(bool capped) {
        const std::size_t n = t_.size();
        state_.reset_access_counts();
        skipped_.clear();
        std::uint64_t work = 0;

        for (std::size_t pos = n; pos-- > 0;) {
            const auto i = static_cast<index_t>(pos);
            if (state_.is_singleton(i)) continue;
            const Bucket bucket = state_.bucket_of(i);
            if (capped && must_skip(bucket)) {
                notify(StepEvent::Kind::skipped, i, bucket);
                continue;
            }

            const std::size_t depth = state_.depth(bucket);
            if (cfg_.detect_periods) {
                const std::size_t p = choose_period(state_, bucket, depth);
                if (p != 0 && resolve_periodic(state_, bucket, p)) {
                    account(bucket);
                    work += bucket.size();
                    ++stats_.period_resolutions;
                    notify(StepEvent::Kind::periodic, i, bucket);
                    continue;
                }
            }
            sort_by_successor(state_, bucket, depth);
            account(bucket);
            work += bucket.size();
            ++stats_.bucket_sorts;
            notify(StepEvent::Kind::sorted, i, bucket);
        }
        stats_.participations += work;
        stats_.participations_per_pass.push_back(work);
    }

    bool must_skip(Bucket bucket) {
        if (skipped_.contains(bucket.begin)) return true;
        for (index_t j : state_.members(bucket)) {
            if (state_.access_count(j) > cfg_.access_cap) {
                skipped_.insert(bucket.begin);
                ++stats_.skipped_buckets;
                return true;
            }
        }
        return false;
    }

    void account(Bucket bucket) {
        if (!cfg_.record_profile) return;
        for (index_t j : state_.members(bucket)) ++stats_.access_profile[j];
    }

    void notify(StepEvent::Kind kind, index_t i, Bucket bucket) {
        if (!cfg_.observer) return;
        cfg_.observer(StepEvent { kind, i, bucket, stats_.passes, state_ });
    }

    const Text& t_;
    const RadixSaConfig& cfg_;
    BucketState& state_;
    RadixSaStats& stats_;
    std::unordered_set<index_t, std::hash<index_t>, std::equal_to<index_t>,
                       TrackingAllocator<index_t> > skipped_;
};

} // namespace

std::size_t max_initial_depth(const Text& t) noexcept {
    return kWordBits / t.bits_per_symbol();
}

std::size_t pass_bound(std::size_t n, unsigned access_cap) {
    if (n <= 1) return 0;
    const std::size_t base = std::size_t(access_cap) + 1;
    std::size_t passes = 0;
    for (std::size_t reach = 1; reach < n; reach *= base) ++passes;
    return passes + 1;
}

BucketState initial_radix_sort(const Text& t, std::size_t depth, std::size_t small_threshold) {
    const std::size_t n = t.size();
    if (depth < 1 || depth > max_initial_depth(t))
        throw std::invalid_argument("radixsa: initial depth must be in [1, " +
                                    std::to_string(max_initial_depth(t)) + "]");
    BucketState state(n, small_threshold);
    if (n < 2) return state;

    constexpr std::size_t kTopBuckets = std::size_t(1) << 16;
    const unsigned b = t.bits_per_symbol();
    const std::size_t lead = std::min<std::size_t>(depth, (16 + b - 1) / b);
    auto top = [&](std::size_t j) { return prefix_key(t, j, lead) >> 48; };

    // counting sort on the leading 16 bits, placed straight into the ordering
    std::span<index_t> sa = state.sa();
    {
        tracked_vector<std::uint32_t> next(kTopBuckets + 1, 0);
        for (std::size_t j = 0; j < n; ++j) ++next[top(j) + 1];
        for (std::size_t d = 1; d <= kTopBuckets; ++d) next[d] += next[d - 1];
        for (std::size_t j = 0; j < n; ++j) sa[next[top(j)]++] = static_cast<index_t>(j);
    }

    state.dissolve({ 0, static_cast<index_t>(n) });
    RadixScratch& scratch = state.scratch();
    std::size_t begin = 0;
    while (begin < n) {
        const std::uint64_t lead_key = top(sa[begin]);
        std::size_t end = begin + 1;
        while (end < n && top(sa[end]) == lead_key) ++end;

        const std::size_t m = end - begin;
        std::span<std::uint64_t> keys = scratch.keys(m);
        std::span<index_t> values = scratch.values(m);
        for (std::size_t k = 0; k < m; ++k) {
            values[k] = sa[begin + k];
            keys[k] = prefix_key(t, values[k], depth);
        }
        sort_pairs(keys, values, static_cast<unsigned>(kWordBits), scratch);
        std::copy(values.begin(), values.end(), sa.begin() + static_cast<std::ptrdiff_t>(begin));

        std::size_t run = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (k < m && keys[k] == keys[k - 1]) continue;
            state.define_bucket({ static_cast<index_t>(begin + run),
                                  static_cast<index_t>(begin + k) }, depth);
            run = k;
        }
        begin = end;
    }
    return state;
}

std::vector<PeriodChain> detect_periods(const BucketState& state, Bucket bucket) {
    std::vector<PeriodChain> chains;
    if (bucket.size() < 2) return chains;
    const std::size_t p = choose_period(state, bucket, state.depth(bucket));
    if (p == 0) return chains;

    const std::size_t n = state.size();
    auto in_bucket = [&](std::size_t pos) {
        return pos < n && state.bucket_number(static_cast<index_t>(pos)) == bucket.begin;
    };
    for (index_t j : state.members(bucket)) {
        if (in_bucket(j + p) || j < p || !in_bucket(j - p)) continue;
        PeriodChain chain;
        chain.period = p;
        chain.anchor = j;
        for (std::size_t x = j;; x -= p) {
            chain.members.push_back(static_cast<index_t>(x));
            if (x < p || !in_bucket(x - p)) break;
        }
        chains.push_back(std::move(chain));
    }
    std::sort(chains.begin(), chains.end(),
              [](const PeriodChain& a, const PeriodChain& b) { return a.anchor > b.anchor; });
    return chains;
}

bool handle_periods(BucketState& state, Bucket bucket, std::span<const PeriodChain> chains) {
    if (chains.empty()) return false;
    const std::size_t p = chains.front().period;
    for (const PeriodChain& c : chains) {
        if (c.period != p)
            throw std::invalid_argument("handle_periods: chains disagree on the period");
    }
    if (p > state.depth(bucket))
        throw std::invalid_argument("handle_periods: period exceeds the bucket depth");
    return resolve_periodic(state, bucket, p);
}

RadixSaResult radix_sa(const Text& t, const RadixSaConfig& cfg) {
    if (cfg.access_cap < 1 || cfg.access_cap > kUncapped)
        throw std::invalid_argument("radixsa: access cap must be in [1, 255]");

    RadixSaResult result;
    RadixSaStats& stats = result.stats;
    stats.n = t.size();
    stats.initial_depth = cfg.initial_depth == 0 ? max_initial_depth(t) : cfg.initial_depth;
    if (cfg.record_profile) stats.access_profile.assign(t.size(), 0);

    PeakScope memory;
    BucketState state = initial_radix_sort(t, stats.initial_depth, cfg.small_bucket_threshold);
    if (cfg.observer) {
        cfg.observer(StepEvent { StepEvent::Kind::initial, static_cast<index_t>(t.size()),
                                 Bucket { 0, static_cast<index_t>(t.size()) }, 0, state });
    }
    PassController(t, cfg, state, stats).run();
    stats.peak_aux_bytes = memory.peak_bytes();
    result.sa = std::move(state).release();
    return result;
}

} // namespace radixsa
