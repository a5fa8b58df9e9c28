// Checks on the collision probability of two l-mers of a random text: exact
// enumeration of every string for small sizes, Monte Carlo estimation with
// 99% normal-approximation intervals otherwise.

#pragma once

#include <radixsa/text.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace radixsa {

//! Enumeration limit on sigma^n.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 24;

//! Minimum number of Monte Carlo trials.
inline constexpr std::uint64_t kMinTrials = 10'000;

//! Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

//! Collision test of the l-mers starting at 0 and at k.
struct PairEstimate
{
    std::size_t offset = 0;
    bool overlapping = false;  //!< offset < ell
    //! exact probability (exact mode)
    std::optional<rational> exact;
    //! observed frequency and confidence radius (Monte Carlo mode)
    double estimate = 0;
    double radius = 0;
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    //! exact == theoretical, or theoretical inside [estimate - radius, estimate + radius]
    bool ok = false;
};

struct LemmaReport
{
    enum class Mode { exact, montecarlo };

    Mode mode = Mode::exact;
    std::size_t sigma = 0;
    std::size_t n = 0;
    std::size_t ell = 0;
    //! P^ell with P the single-symbol collision probability
    rational theoretical;
    std::vector<PairEstimate> pairs;

    // l-mers at 0, 2 and 3 with l = 3 all equal (exact mode, n >= 6)
    std::optional<rational> triple_probability;
    //! value the triple would have under 3-way independence: P^6
    rational triple_if_independent;
    //! triple_probability differs from the independent value
    bool triple_dependent = false;

    bool pairs_ok() const noexcept;
};

/*!
 * Enumerate all sigma^n strings under the uniform model. Offsets must satisfy
 * 1 <= k and k + ell <= n. Throws std::invalid_argument when sigma^n exceeds
 * kEnumerationGuard or the parameters are inconsistent.
 */
LemmaReport lemma_exact(std::size_t sigma, std::size_t n, std::size_t ell,
                        const std::vector<std::size_t>& offsets);

//! Same enumeration with every string weighted by the model.
LemmaReport lemma_exact(const ProbabilityModel& model, std::size_t n, std::size_t ell,
                        const std::vector<std::size_t>& offsets);

/*!
 * Estimate the collision frequency of each offset from `trials` independent
 * model-random strings. Only the first max(k) + ell symbols of each string
 * are drawn since nothing else is inspected. Throws std::invalid_argument if
 * trials < kMinTrials.
 */
LemmaReport lemma_montecarlo(const ProbabilityModel& model, std::size_t n, std::size_t ell,
                             std::uint64_t trials, const std::vector<std::size_t>& offsets,
                             std::uint64_t seed = 1);

} // namespace radixsa
