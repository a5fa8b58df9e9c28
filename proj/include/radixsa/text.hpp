// Input text, alphabet remapping, the suffix array output type, and the
// symbol probability model shared by all builders.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace radixsa {

using index_t = std::uint32_t;
using symbol_t = std::uint32_t;
using rational = boost::multiprecision::cpp_rational;

//! Largest text length the builders accept (packed bucket entries need a
//! spare bit above the bucket start field).
inline constexpr std::size_t kMaxTextLength = (std::size_t(1) << 31) - 1;

/*!
 * A text recoded to the dense alphabet 1..sigma. Code 0 is never stored; it
 * acts as a virtual pad past the end so that shorter suffixes sort first.
 * The recoding preserves the order of the original symbols.
 */
class Text
{
public:
    //! recode raw bytes; throws std::invalid_argument on empty input
    static Text from_bytes(std::span<const std::uint8_t> raw);
    static Text from_string(std::string_view raw);
    //! recode arbitrary integer symbols (large alphabets)
    static Text from_symbols(std::span<const std::uint64_t> raw);

    std::size_t size() const noexcept { return data_.size(); }
    symbol_t sigma() const noexcept { return static_cast<symbol_t>(alphabet_.size()); }
    unsigned bits_per_symbol() const noexcept { return bits_; }

    symbol_t operator [] (std::size_t i) const noexcept { return data_[i]; }
    //! symbol at i, or the pad code 0 when i >= size()
    symbol_t at_padded(std::size_t i) const noexcept {
        return i < data_.size() ? data_[i] : 0;
    }
    std::span<const symbol_t> codes() const noexcept { return data_; }

    //! original symbols in code order: alphabet()[c - 1] has code c
    std::span<const std::uint64_t> alphabet() const noexcept { return alphabet_; }
    //! dense code of an original symbol, 0 if it does not occur
    symbol_t code_of(std::uint64_t original) const noexcept;

private:
    Text(std::vector<symbol_t> data, std::vector<std::uint64_t> alphabet);

    std::vector<symbol_t> data_;
    std::vector<std::uint64_t> alphabet_;
    unsigned bits_;
};

//! Convenience alias for ingesting raw bytes.
Text ingest(std::span<const std::uint8_t> raw);
Text ingest(std::string_view raw);

//! Lexicographic order of suffixes i and j; a proper prefix is smaller.
std::strong_ordering suffix_compare(const Text& t, std::size_t i, std::size_t j);

//! Output permutation: order[r] is the start of the r-th smallest suffix.
struct SuffixArray
{
    std::vector<index_t> order;

    std::size_t size() const noexcept { return order.size(); }
    index_t operator [] (std::size_t r) const noexcept { return order[r]; }
    auto begin() const noexcept { return order.begin(); }
    auto end() const noexcept { return order.end(); }

    bool operator == (const SuffixArray&) const = default;
};

//! i.i.d. symbol distribution over codes 1..sigma.
class ProbabilityModel
{
public:
    enum class Kind { uniform, explicit_weights };

    static ProbabilityModel uniform(std::size_t sigma);
    //! weights must be positive and sum to exactly 1
    static ProbabilityModel from_weights(std::vector<rational> weights);

    Kind kind() const noexcept { return kind_; }
    std::size_t sigma() const noexcept { return weights_.size(); }
    const std::vector<rational>& weights() const noexcept { return weights_; }
    //! P = sum of squared weights: probability two independent symbols agree
    const rational& collision_base() const noexcept { return collision_base_; }

private:
    ProbabilityModel(Kind kind, std::vector<rational> weights);

    Kind kind_;
    std::vector<rational> weights_;
    rational collision_base_;
};

//! Parse "0.7" or "7/10" into an exact rational; throws std::invalid_argument.
rational parse_rational(std::string_view text);

} // namespace radixsa
