// Reference construction and linear-time suffix array checking.

#pragma once

#include <radixsa/text.hpp>

#include <optional>
#include <string_view>

namespace radixsa {

inline constexpr std::size_t kOracleLimit = 1'000'000;

//! Comparison sort of all suffixes with suffix_compare; nothing else shared
//! with the builders. Throws std::invalid_argument above `limit`.
SuffixArray oracle_sa(const Text& t, std::size_t limit = kOracleLimit);

struct SaViolation
{
    enum class Kind {
        wrong_length,     //!< sa.size() != n
        not_permutation,  //!< entry out of range or repeated
        first_symbol,     //!< first symbols decrease between neighbours
        successor_rank,   //!< equal first symbols, successors out of order
    };

    Kind kind;
    std::size_t index;  //!< offending sa index (left neighbour for order checks)
};

std::string_view to_string(SaViolation::Kind kind) noexcept;

/*!
 * Accepts exactly the suffix array of t, in O(n): sa must be a permutation,
 * neighbours must have non-decreasing first symbols, and neighbours with equal
 * first symbols must have increasing successor ranks (a suffix with no
 * successor is the smaller one). Returns the earliest violation.
 */
std::optional<SaViolation> check_sa(const Text& t, const SuffixArray& sa);

} // namespace radixsa
