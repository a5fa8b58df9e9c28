// Benchmark harness: timed, verified repetitions of each builder on each
// dataset, access-count profiles and CSV reports.
//
// Bench plan files are INI-style. Optional top-level keys `algos` (comma
// separated: radixsa, sa1, sa2) and `reps`; then one section per dataset:
//
//     algos = radixsa,sa2
//     reps = 10
//
//     [random26]
//     family = random
//     n = 1000000
//     sigma = 26
//     seed = 7
//
// Dataset keys: family, n, sigma, weights (comma separated rationals),
// period, seed, path. The section name labels the dataset.

#pragma once

#include <radixsa/datagen.hpp>
#include <radixsa/radixsa.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radixsa {

enum class Algo { radixsa, sa1, sa2 };

std::string_view to_string(Algo algo) noexcept;
Algo parse_algo(std::string_view name);

struct RunStats
{
    std::string dataset;
    std::size_t n = 0;
    std::size_t sigma = 0;
    Algo algo = Algo::radixsa;
    //! construction time of each repetition, milliseconds rounded to 1 us
    std::vector<double> wall_ms;
    double mean_access = 0;
    //! histogram[v] = number of suffixes that took part in v sorts (radixsa
    //! with histograms enabled); sum of v * histogram[v] is participations
    std::vector<std::uint64_t> access_histogram;
    std::uint64_t participations = 0;
    std::size_t passes = 0;
    std::size_t aux_bytes = 0;
    //! some repetition of sa2 used its fallback
    bool fell_back = false;

    double mean_ms() const noexcept;
    double stddev_ms() const noexcept;

    //! equality of the fields carried by the CSV report
    bool csv_equal(const RunStats& other) const noexcept;
};

struct BenchOptions
{
    std::size_t repetitions = 10;
    RadixSaConfig radix;
    double alpha = 1.0;
    //! fixed l for sa1/sa2; chosen from n and alpha when empty
    std::optional<std::size_t> ell;
    //! one extra untimed instrumented radixsa run per dataset for the histogram
    bool access_histogram = true;
};

/*!
 * Builds every dataset with every algorithm `repetitions` times, timing only
 * construction. Each output is checked with check_sa; a wrong suffix array
 * throws std::runtime_error.
 */
std::vector<RunStats> bench(const std::vector<DatasetSpec>& specs,
                            const std::vector<Algo>& algos, const BenchOptions& options);

struct AccessProfile
{
    std::vector<std::uint32_t> counts;
    std::vector<std::uint64_t> histogram;
    std::uint64_t total = 0;
    double mean = 0;
};

//! Per-suffix sort participations of one instrumented radixsa run.
AccessProfile access_profile(const Text& t, RadixSaConfig cfg = {});

//! Header plus one row per repetition:
//! dataset,n,sigma,algo,rep,ms,mean_access,passes,aux_bytes
void write_csv(std::ostream& out, const std::vector<RunStats>& rows);
std::vector<RunStats> read_csv(std::istream& in);

struct BenchPlan
{
    std::vector<DatasetSpec> datasets;
    std::vector<Algo> algos = { Algo::radixsa };
    std::size_t repetitions = 10;
};

BenchPlan read_bench_plan(const std::filesystem::path& path);

//! Published wall time of radixsa on uniform random sigma=26 text of
//! n = 2e7, measured on older hardware. Printed as context, never asserted.
inline constexpr double kReferenceRandomSeconds = 2.25;

//! kReferenceRandomSeconds when the dataset and algorithm match that setting.
std::optional<double> reference_seconds(const DatasetSpec& spec, Algo algo) noexcept;

//! Comma separated rationals such as "0.7,0.3" or "1/3,2/3".
std::vector<rational> parse_weights(std::string_view list);

} // namespace radixsa
