#include <radixsa/radix_engine.hpp>

#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace radixsa {

namespace {

constexpr std::size_t kWideDigitMinimum = std::size_t(1) << 16;

void merge_sort_pairs(std::span<std::uint64_t> keys, std::span<index_t> values,
                      RadixScratch& scratch) {
    const std::size_t m = keys.size();
    std::span<std::uint64_t> tk = scratch.keys_tmp(m);
    std::span<index_t> tv = scratch.values_tmp(m);

    std::uint64_t* sk = keys.data();
    index_t* sv = values.data();
    std::uint64_t* dk = tk.data();
    index_t* dv = tv.data();

    for (std::size_t width = 1; width < m; width *= 2) {
        for (std::size_t lo = 0; lo < m; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, m);
            const std::size_t hi = std::min(lo + 2 * width, m);
            std::size_t a = lo, b = mid, out = lo;
            while (a < mid && b < hi) {
                // take from the left run on ties: stable
                if (sk[b] < sk[a]) { dk[out] = sk[b]; dv[out++] = sv[b++]; }
                else { dk[out] = sk[a]; dv[out++] = sv[a++]; }
            }
            while (a < mid) { dk[out] = sk[a]; dv[out++] = sv[a++]; }
            while (b < hi) { dk[out] = sk[b]; dv[out++] = sv[b++]; }
        }
        std::swap(sk, dk);
        std::swap(sv, dv);
    }
    if (sk != keys.data()) {
        std::copy(sk, sk + m, keys.data());
        std::copy(sv, sv + m, values.data());
    }
}

template <unsigned DigitBits>
void lsd_pairs(std::span<std::uint64_t> keys, std::span<index_t> values,
               unsigned key_bits, RadixScratch& scratch) {
    constexpr std::size_t kRadix = std::size_t(1) << DigitBits;
    constexpr std::uint64_t kMask = kRadix - 1;

    const std::size_t m = keys.size();
    const unsigned rounds = std::max(1u, (key_bits + DigitBits - 1) / DigitBits);

    std::span<std::uint32_t> hist = scratch.histogram(rounds * kRadix);
    std::fill(hist.begin(), hist.end(), 0);
    for (std::uint64_t key : keys) {
        for (unsigned r = 0; r < rounds; ++r)
            ++hist[r * kRadix + ((key >> (r * DigitBits)) & kMask)];
    }
    ++scratch.counters().histogram_scans;

    std::uint64_t* sk = keys.data();
    index_t* sv = values.data();
    std::uint64_t* dk = nullptr;
    index_t* dv = nullptr;

    for (unsigned r = 0; r < rounds; ++r) {
        const unsigned shift = r * DigitBits;
        std::uint32_t* count = hist.data() + r * kRadix;
        if (count[(sk[0] >> shift) & kMask] == m) continue;
        if (dk == nullptr) {
            dk = scratch.keys_tmp(m).data();
            dv = scratch.values_tmp(m).data();
        }

        std::uint32_t sum = 0;
        for (std::size_t d = 0; d < kRadix; ++d) {
            const std::uint32_t c = count[d];
            count[d] = sum;
            sum += c;
        }
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint32_t slot = count[(sk[k] >> shift) & kMask]++;
            dk[slot] = sk[k];
            dv[slot] = sv[k];
        }
        ++scratch.counters().placement_passes;
        std::swap(sk, dk);
        std::swap(sv, dv);
    }
    if (sk != keys.data()) {
        std::copy(sk, sk + m, keys.data());
        std::copy(sv, sv + m, values.data());
    }
}

template <unsigned DigitBits>
void lsd_fingerprints(const FingerprintTable& table, std::span<index_t> order,
                      RadixScratch& scratch) {
    constexpr std::size_t kRadix = std::size_t(1) << DigitBits;
    constexpr std::uint64_t kMask = kRadix - 1;
    constexpr unsigned kDigitsPerWord = kWordBits / DigitBits;

    const std::size_t m = order.size();
    const std::size_t words = table.words();
    const std::size_t rounds = words * kDigitsPerWord;

    // round r covers digit (r % kDigitsPerWord) of word (words - 1 - r / kDigitsPerWord)
    auto digit = [&](index_t pos, std::size_t r) {
        const std::size_t w = words - 1 - r / kDigitsPerWord;
        const unsigned shift = static_cast<unsigned>((r % kDigitsPerWord) * DigitBits);
        return (table.word(pos, w) >> shift) & kMask;
    };

    std::span<std::uint32_t> hist = scratch.histogram(rounds * kRadix);
    std::fill(hist.begin(), hist.end(), 0);
    for (index_t pos : order) {
        for (std::size_t r = 0; r < rounds; ++r)
            ++hist[r * kRadix + digit(pos, r)];
    }
    ++scratch.counters().histogram_scans;

    index_t* src = order.data();
    index_t* dst = nullptr;
    for (std::size_t r = 0; r < rounds; ++r) {
        std::uint32_t* count = hist.data() + r * kRadix;
        if (count[digit(src[0], r)] == m) continue;
        if (dst == nullptr) dst = scratch.values_tmp(m).data();

        std::uint32_t sum = 0;
        for (std::size_t d = 0; d < kRadix; ++d) {
            const std::uint32_t c = count[d];
            count[d] = sum;
            sum += c;
        }
        for (std::size_t k = 0; k < m; ++k)
            dst[count[digit(src[k], r)]++] = src[k];
        ++scratch.counters().placement_passes;
        std::swap(src, dst);
    }
    if (src != order.data())
        std::copy(src, src + m, order.data());
}

} // namespace

void sort_pairs(std::span<std::uint64_t> keys, std::span<index_t> values,
                unsigned key_bits, RadixScratch& scratch) {
    assert(keys.size() == values.size());
    ++scratch.counters().sorts;
    const std::size_t m = keys.size();
    if (m < 2) return;
    if (m <= scratch.small_threshold()) {
        ++scratch.counters().merge_sorts;
        merge_sort_pairs(keys, values, scratch);
    }
    else if (m >= kWideDigitMinimum) {
        lsd_pairs<16>(keys, values, key_bits, scratch);
    }
    else {
        lsd_pairs<8>(keys, values, key_bits, scratch);
    }
}

void sort_by_fingerprint(const FingerprintTable& table, std::span<index_t> order,
                         RadixScratch& scratch) {
    ++scratch.counters().sorts;
    if (order.size() < 2 || table.words() == 0) return;
    if (order.size() >= kWideDigitMinimum)
        lsd_fingerprints<16>(table, order, scratch);
    else
        lsd_fingerprints<8>(table, order, scratch);
}

PackedLayout::PackedLayout(std::size_t n) {
    if (n > kMaxTextLength)
        throw std::invalid_argument("packed layout: n must be < 2^31");
    start_bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(n > 0 ? n - 1 : 0)));
    start_mask_ = static_cast<std::uint32_t>((std::uint64_t(1) << start_bits_) - 1);
    marker_ = static_cast<std::uint32_t>((std::uint64_t(1) << (32 - start_bits_)) - 1);
}

BucketState::BucketState(std::size_t n, std::size_t small_threshold)
    : layout_(n), sa_(n), entries_(n), side_(n), access_(n), scratch_(small_threshold) {
    std::iota(sa_.begin(), sa_.end(), index_t(0));
    if (n == 0) return;
    unresolved_ = 0;
    define_bucket({ 0, static_cast<index_t>(n) }, 0);
}

Bucket BucketState::bucket_of(index_t suffix) const {
    const std::uint32_t word = entries_[suffix];
    const index_t start = layout_.start(word);
    const std::uint32_t field = layout_.length_field(word);
    const std::size_t length =
        field == layout_.overflow_marker() ? overflow_.at(start).length : field;
    return { start, static_cast<index_t>(start + length) };
}

std::size_t BucketState::depth(Bucket b) const {
    if (b.size() < 2) return 0;
    const std::uint16_t packed =
        static_cast<std::uint16_t>(side_[b.begin] | (side_[b.begin + 1] << 8));
    if (packed == kDepthMarker) return overflow_.at(b.begin).depth;
    return packed;
}

void BucketState::dissolve(Bucket parent) {
    if (parent.size() >= 2) {
        unresolved_ -= parent.size();
        overflow_.erase(parent.begin);
    }
}

void BucketState::define_bucket(Bucket b, std::size_t depth) {
    const std::size_t length = b.size();
    const std::uint32_t word = layout_.pack(b.begin, length);
    for (index_t r = b.begin; r < b.end; ++r)
        entries_[sa_[r]] = word;
    if (length < 2) return;

    unresolved_ += length;
    if (length >= layout_.overflow_marker())
        overflow_[b.begin].length = static_cast<std::uint32_t>(length);
    if (depth >= kDepthMarker) {
        overflow_[b.begin].depth = static_cast<std::uint32_t>(depth);
        side_[b.begin] = side_[b.begin + 1] = 0xFF;
    }
    else {
        side_[b.begin] = static_cast<std::uint8_t>(depth & 0xFF);
        side_[b.begin + 1] = static_cast<std::uint8_t>(depth >> 8);
    }
}

void BucketState::record_access(Bucket b) noexcept {
    for (index_t r = b.begin; r < b.end; ++r) {
        std::uint8_t& c = access_[sa_[r]];
        if (c != 0xFF) ++c;
    }
}

void BucketState::reset_access_counts() noexcept {
    std::fill(access_.begin(), access_.end(), 0);
}

SuffixArray BucketState::release() && {
    return SuffixArray { std::move(sa_) };
}

BucketState lsd_sort_fingerprints(const FingerprintTable& table, std::size_t depth,
                                  std::size_t small_threshold) {
    const std::size_t n = table.size();
    BucketState state(n, small_threshold);
    if (n < 2) return state;

    std::span<index_t> sa = state.sa();
    sort_by_fingerprint(table, sa, state.scratch());

    auto same = [&](index_t a, index_t b) {
        const auto ra = table.row(a), rb = table.row(b);
        return std::equal(ra.begin(), ra.end(), rb.begin());
    };
    state.dissolve({ 0, static_cast<index_t>(n) });
    std::size_t run = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k < n && same(sa[k - 1], sa[k])) continue;
        state.define_bucket({ static_cast<index_t>(run), static_cast<index_t>(k) }, depth);
        run = k;
    }
    return state;
}

} // namespace radixsa
