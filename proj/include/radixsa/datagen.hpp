// Seeded generators for the benchmark input families, corpus file loading and
// the corpus manifest.
//
// Random streams come from std::mt19937_64 seeded with the 64-bit seed. A
// uniform symbol in [0, sigma) is x % sigma for the first raw word x with
// x - x % sigma <= 2^64 - sigma (rejection of the biased tail). A weighted
// symbol takes u = (x >> 11) * 2^-53 and picks the first symbol whose
// cumulative weight (in double precision) exceeds u.

#pragma once

#include <radixsa/text.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace radixsa {

enum class Family { random, periodic, fibonacci, unary, debruijn, file };

std::string_view to_string(Family family) noexcept;
Family parse_family(std::string_view name);

struct DatasetSpec
{
    Family family = Family::random;
    std::size_t n = 0;
    std::size_t sigma = 26;
    //! explicit symbol weights for the random family; overrides sigma
    std::vector<rational> weights;
    //! block length of the periodic family
    std::size_t period = 0;
    std::uint64_t seed = 0;
    //! source of the file family
    std::filesystem::path path;
    //! label used in reports; derived from the spec when empty
    std::string name;

    std::string label() const;
};

//! Draws dense symbol indices 0..sigma-1 from a probability model.
class SymbolSampler
{
public:
    SymbolSampler(const ProbabilityModel& model, std::uint64_t seed);

    std::size_t operator () ();

private:
    std::mt19937_64 rng_;
    std::size_t sigma_;
    bool uniform_;
    std::vector<double> cumulative_;
};

//! Output byte used for symbol index k of a sigma-letter alphabet: 'a'+k up
//! to 26 letters, '!'+k up to 94, the raw byte k beyond that.
std::uint8_t alphabet_byte(std::size_t sigma, std::size_t k);

/*!
 * Bytes of the requested family. The debruijn family yields the binary de
 * Bruijn sequence of the largest order k with 2^k <= n (length 2^k); every
 * other family yields exactly n bytes. Throws std::invalid_argument for
 * inconsistent specs.
 */
std::vector<std::uint8_t> generate(const DatasetSpec& spec);

//! Whole file as raw bytes; throws std::runtime_error on I/O failure or an
//! empty file.
std::vector<std::uint8_t> load(const std::filesystem::path& path);

//! Fibonacci word F_k with F_0 = "b", F_1 = "a", F_k = F_{k-1} F_{k-2}.
std::string fibonacci_word(std::size_t k);

//! Reference lengths and alphabet sizes of externally supplied corpus files.
struct CorpusEntry
{
    std::string name;
    std::size_t length = 0;
    std::size_t sigma = 0;
};

//! INI-style manifest: one [name] section per file with `length` and `sigma`.
std::vector<CorpusEntry> read_manifest(const std::filesystem::path& path);

//! Mismatch description, or nullopt when the text agrees with the entry.
std::optional<std::string> check_against_manifest(const CorpusEntry& entry, const Text& t);

} // namespace radixsa
