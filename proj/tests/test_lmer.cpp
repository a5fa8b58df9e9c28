#include "support.hpp"

#include <radixsa/lmer.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace radixsa;
using namespace radixsa::testing;

namespace {

//! padded l-mer as symbol codes, the reference for fingerprint order
std::vector<symbol_t> padded(const Text& t, std::size_t i, std::size_t ell) {
    std::vector<symbol_t> s(ell);
    for (std::size_t k = 0; k < ell; ++k) s[k] = t.at_padded(i + k);
    return s;
}

} // namespace

TEST(ChooseEll, UniformFormula) {
    const auto c = choose_ell(65536, ProbabilityModel::uniform(4), 1.0);
    EXPECT_EQ(c.ell, 24u);
    EXPECT_FALSE(c.degenerate_alphabet);
}

TEST(ChooseEll, NonUniformBase) {
    const auto half = ProbabilityModel::from_weights({ rational(1, 2), rational(1, 2) });
    EXPECT_EQ(choose_ell(65536, half, 1.0).ell, 48u);
}

TEST(ChooseEll, ClampedToLength) {
    EXPECT_EQ(choose_ell(2, ProbabilityModel::uniform(2), 1.0).ell, 2u);
}

TEST(ChooseEll, DegenerateAlphabet) {
    const auto c = choose_ell(1000, ProbabilityModel::uniform(1), 1.0);
    EXPECT_TRUE(c.degenerate_alphabet);
    EXPECT_EQ(c.ell, 1000u);
}

TEST(ChooseEll, Preconditions) {
    EXPECT_THROW(choose_ell(1, ProbabilityModel::uniform(2)), std::invalid_argument);
    EXPECT_THROW(choose_ell(100, ProbabilityModel::uniform(2), 0.5), std::invalid_argument);
}

TEST(ChooseEll, Monotonicity) {
    std::size_t prev = 0;
    for (std::size_t n = 2; n < 5000; n += 7) {
        const std::size_t ell = choose_ell(n, ProbabilityModel::uniform(4)).ell;
        EXPECT_GE(ell, prev);
        prev = ell;
    }
    for (std::size_t n : { 10u, 1000u, 1000000u }) {
        std::size_t by_alpha = 0;
        for (double alpha = 1.0; alpha < 6; alpha += 0.25) {
            const std::size_t ell = choose_ell(n, ProbabilityModel::uniform(4), alpha).ell;
            EXPECT_GE(ell, by_alpha);
            by_alpha = ell;
        }
        std::size_t by_sigma = n;
        for (std::size_t sigma = 2; sigma < 300; ++sigma) {
            const std::size_t ell = choose_ell(n, ProbabilityModel::uniform(sigma)).ell;
            EXPECT_LE(ell, by_sigma);
            by_sigma = ell;
        }
    }
}

TEST(ChooseEll, MeetsTheBound) {
    // P^ell <= n^-(alpha+2) for the chosen ell, and fails for ell - 1
    for (std::size_t n : { 100u, 4096u, 65536u, 1000003u }) {
        for (std::size_t sigma : { 2u, 3u, 4u, 26u }) {
            const auto model = ProbabilityModel::uniform(sigma);
            const std::size_t ell = choose_ell(n, model).ell;
            if (ell >= n) continue;
            const rational target = rational(1, boost::multiprecision::cpp_int(n) * n * n);
            EXPECT_LE(collision_probability(model, ell), target) << n << ' ' << sigma;
            EXPECT_GT(collision_probability(model, ell - 1), target) << n << ' ' << sigma;
        }
    }
}

TEST(CollisionProbability, Examples) {
    EXPECT_EQ(collision_probability(ProbabilityModel::uniform(4), 3), rational(1, 64));
    const auto m = ProbabilityModel::from_weights({ rational(1, 2), rational(1, 4), rational(1, 4) });
    EXPECT_EQ(collision_probability(m, 2), rational(9, 64));
    EXPECT_THROW(collision_probability(ProbabilityModel::uniform(2), 0), std::invalid_argument);
}

TEST(Fingerprint, RepeatedTrigram) {
    const Text t = ingest("cdaxcdayca");
    EXPECT_EQ(fingerprint(t, 0, 3), fingerprint(t, 4, 3));
    EXPECT_NE(fingerprint(t, 0, 4), fingerprint(t, 4, 4));
}

TEST(Fingerprint, PaddedTail) {
    const Text t = ingest("cdaxcdayca");
    const Fingerprint tail = fingerprint(t, 9, 3);
    ASSERT_EQ(tail.words.size(), 1u);
    // a = 1 in the top 3 bits, then two pad symbols
    EXPECT_EQ(tail.words[0], std::uint64_t(1) << 61);
    EXPECT_LT(tail, fingerprint(t, 2, 3));
}

TEST(Fingerprint, WordsPerFingerprint) {
    EXPECT_EQ(LmerConfig::with_ell(21).words_per_fingerprint(3), 1u);
    EXPECT_EQ(LmerConfig::with_ell(22).words_per_fingerprint(3), 2u);
    EXPECT_EQ(LmerConfig::with_ell(64).words_per_fingerprint(9), 9u);
}

TEST(Fingerprint, OrderEmbedding) {
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t sigma = std::vector<std::size_t> { 1, 2, 3, 26, 200 }[seed % 5];
        const Text t = random_text(80, sigma, seed);
        for (std::size_t ell : { 1u, 5u, 21u, 30u, 77u }) {
            const FingerprintTable table(t, ell);
            EXPECT_EQ(table.words(), LmerConfig::with_ell(ell).words_per_fingerprint(t.bits_per_symbol()));
            for (int trial = 0; trial < 300; ++trial) {
                const std::size_t i = rng() % t.size(), j = rng() % t.size();
                const auto a = fingerprint(t, i, ell), b = fingerprint(t, j, ell);
                const auto pa = padded(t, i, ell), pb = padded(t, j, ell);
                EXPECT_EQ(a < b, pa < pb);
                EXPECT_EQ(a == b, pa == pb);
                ASSERT_TRUE(std::equal(a.words.begin(), a.words.end(), table.row(i).begin(),
                                       table.row(i).end()));
            }
        }
    }
}

TEST(Fingerprint, NonOverlappingCollisionRate) {
    // all 2^6 binary strings; windows at 0 and 3 agree in exactly 2^3 of them
    std::size_t equal = 0;
    for (unsigned bits = 0; bits < 64; ++bits) {
        std::string s;
        for (int k = 0; k < 6; ++k) s += (bits >> k) & 1 ? 'b' : 'a';
        std::string alphabet_guard = s + "ab";  // both symbols present, same codes
        const Text t = ingest(alphabet_guard);
        equal += fingerprint(t, 0, 3) == fingerprint(t, 3, 3);
    }
    EXPECT_EQ(rational(static_cast<long long>(equal), 64), rational(1, 8));
}

TEST(LmerConfig, Automatic) {
    const Text t = random_text(65536, 4, 9);
    const auto cfg = LmerConfig::automatic(t);
    EXPECT_EQ(cfg.ell, 24u);
    EXPECT_EQ(LmerConfig::automatic(ingest("a")).ell, 1u);
    const auto unary = LmerConfig::automatic(ingest("aaaa"));
    EXPECT_TRUE(unary.degenerate_alphabet);
    EXPECT_EQ(unary.ell, 4u);
    EXPECT_THROW(LmerConfig::with_ell(0), std::invalid_argument);
}
