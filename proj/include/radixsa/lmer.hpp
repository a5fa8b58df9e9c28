// l-mer prefix length selection and exact packed l-mer fingerprints.

#pragma once

#include <radixsa/memory.hpp>
#include <radixsa/text.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace radixsa {

inline constexpr unsigned kWordBits = 64;

struct EllChoice
{
    std::size_t ell = 1;
    //! sigma == 1: no prefix length separates the suffixes, ell = n
    bool degenerate_alphabet = false;
};

/*!
 * Smallest prefix length that makes every l-mer bucket a singleton with
 * probability >= 1 - n^-alpha: ell = ceil((alpha + 2) * log_{1/P} n), where
 * P is the model's collision base (1/sigma when uniform). Clamped to n.
 */
EllChoice choose_ell(std::size_t n, const ProbabilityModel& model, double alpha = 1.0);

//! Exact probability that two independent l-mers are equal: P^ell.
rational collision_probability(const ProbabilityModel& model, std::size_t ell);

struct LmerConfig
{
    std::size_t ell = 1;
    double alpha = 1.0;
    ProbabilityModel model = ProbabilityModel::uniform(1);
    bool degenerate_alphabet = false;

    //! ell chosen automatically from the text length and a uniform model
    static LmerConfig automatic(const Text& t, double alpha = 1.0);
    static LmerConfig automatic(const Text& t, const ProbabilityModel& model,
                                double alpha = 1.0);
    //! explicit prefix length
    static LmerConfig with_ell(std::size_t ell);

    std::size_t words_per_fingerprint(unsigned bits_per_symbol) const noexcept {
        return (ell * bits_per_symbol + kWordBits - 1) / kWordBits;
    }
};

/*!
 * Symbols i..i+ell-1 packed most significant first; positions past the end of
 * the text contribute the pad code 0. Comparing word sequences
 * lexicographically is the same as comparing the padded l-mers.
 */
struct Fingerprint
{
    std::vector<std::uint64_t> words;

    auto operator <=> (const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Text& t, std::size_t i, std::size_t ell);

//! Fingerprints of all n positions, stored row-major (n x words).
class FingerprintTable
{
public:
    FingerprintTable(const Text& t, std::size_t ell);

    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    std::span<const std::uint64_t> row(std::size_t i) const noexcept {
        return { data_.data() + i * words_, words_ };
    }
    std::uint64_t word(std::size_t i, std::size_t w) const noexcept {
        return data_[i * words_ + w];
    }

private:
    std::size_t n_;
    std::size_t words_;
    tracked_vector<std::uint64_t> data_;
};

} // namespace radixsa
