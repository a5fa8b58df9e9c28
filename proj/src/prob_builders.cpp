#include <radixsa/prob_builders.hpp>

#include <radixsa/radix_engine.hpp>
#include <radixsa/radixsa.hpp>

#include <algorithm>

namespace radixsa {

SuffixArray sa1(const Text& t, const LmerConfig& cfg) {
    const FingerprintTable table(t, cfg.ell);
    BucketState state = lsd_sort_fingerprints(table, cfg.ell);

    std::span<index_t> sa = state.sa();
    const std::size_t n = t.size();
    for (std::size_t r = 0; r < n;) {
        const Bucket b = state.bucket_of(sa[r]);
        if (b.size() > 1) {
            std::sort(sa.begin() + b.begin, sa.begin() + b.end,
                      [&](index_t x, index_t y) { return suffix_compare(t, x, y) < 0; });
        }
        r = b.end;
    }
    return std::move(state).release();
}

Sa2Outcome sa2(const Text& t, const LmerConfig& cfg, const FullBuilder& fallback) {
    Sa2Outcome outcome;
    {
        const FingerprintTable table(t, cfg.ell);
        BucketState state = lsd_sort_fingerprints(table, cfg.ell);
        const std::size_t n = t.size();
        for (std::size_t r = 0; r < n;) {
            const Bucket b = state.bucket_of(state.sa()[r]);
            if (b.size() > 1) ++outcome.nonsingleton_buckets;
            outcome.max_bucket_size = std::max(outcome.max_bucket_size, b.size());
            r = b.end;
        }
        if (outcome.nonsingleton_buckets == 0) {
            outcome.sa = std::move(state).release();
            return outcome;
        }
    }
    outcome.fell_back = true;
    outcome.sa = fallback ? fallback(t) : radix_sa(t).sa;
    return outcome;
}

} // namespace radixsa
