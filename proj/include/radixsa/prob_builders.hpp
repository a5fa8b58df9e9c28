// Builders that sort suffixes only by their l-mer prefixes. Equal l-mers are
// rare when l is chosen from the collision bound, so the l-mer order is
// almost always the suffix array already.

#pragma once

#include <radixsa/lmer.hpp>
#include <radixsa/text.hpp>

#include <functional>

namespace radixsa {

//! Sorts l-mers, then orders each non-singleton bucket by direct suffix
//! comparison. Always correct; quadratic only inside large buckets.
SuffixArray sa1(const Text& t, const LmerConfig& cfg);

struct Sa2Outcome
{
    SuffixArray sa;
    bool fell_back = false;
    std::size_t nonsingleton_buckets = 0;
    std::size_t max_bucket_size = 0;
};

using FullBuilder = std::function<SuffixArray(const Text&)>;

//! Sorts l-mers; if any bucket holds more than one suffix, discards the
//! result and builds with `fallback` (RadixSA when empty).
Sa2Outcome sa2(const Text& t, const LmerConfig& cfg, const FullBuilder& fallback = {});

} // namespace radixsa
