#include <radixsa/verify.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace radixsa {

SuffixArray oracle_sa(const Text& t, std::size_t limit) {
    if (t.size() > limit)
        throw std::invalid_argument("oracle_sa: n = " + std::to_string(t.size()) +
                                    " exceeds the oracle limit " + std::to_string(limit));
    SuffixArray sa;
    sa.order.resize(t.size());
    std::iota(sa.order.begin(), sa.order.end(), index_t(0));
    std::sort(sa.order.begin(), sa.order.end(),
              [&](index_t a, index_t b) { return suffix_compare(t, a, b) < 0; });
    return sa;
}

std::string_view to_string(SaViolation::Kind kind) noexcept {
    switch (kind) {
    case SaViolation::Kind::wrong_length: return "wrong length";
    case SaViolation::Kind::not_permutation: return "not a permutation";
    case SaViolation::Kind::first_symbol: return "first symbols out of order";
    case SaViolation::Kind::successor_rank: return "successor ranks out of order";
    }
    return "unknown";
}

std::optional<SaViolation> check_sa(const Text& t, const SuffixArray& sa) {
    using Kind = SaViolation::Kind;
    const std::size_t n = t.size();
    if (sa.size() != n) return SaViolation { Kind::wrong_length, std::min(sa.size(), n) };

    constexpr index_t kUnset = ~index_t(0);
    std::vector<index_t> rank(n, kUnset);
    for (std::size_t r = 0; r < n; ++r) {
        const index_t pos = sa[r];
        if (pos >= n || rank[pos] != kUnset) return SaViolation { Kind::not_permutation, r };
        rank[pos] = static_cast<index_t>(r);
    }

    for (std::size_t r = 0; r + 1 < n; ++r) {
        const index_t a = sa[r], b = sa[r + 1];
        if (t[a] < t[b]) continue;
        if (t[a] > t[b]) return SaViolation { Kind::first_symbol, r };
        if (a + 1 == n) continue;  // a is a single symbol: prefix of b
        if (b + 1 == n || rank[a + 1] > rank[b + 1])
            return SaViolation { Kind::successor_rank, r };
    }
    return std::nullopt;
}

} // namespace radixsa
