// Shared fixtures for the unit tests.

#pragma once

#include <radixsa/datagen.hpp>
#include <radixsa/text.hpp>

#include <string>
#include <vector>

namespace radixsa::testing {

inline std::vector<std::uint8_t> random_bytes(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    DatasetSpec spec;
    spec.family = Family::random;
    spec.n = n;
    spec.sigma = sigma;
    spec.seed = seed;
    return generate(spec);
}

inline Text random_text(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    return Text::from_bytes(random_bytes(n, sigma, seed));
}

inline Text family_text(Family family, std::size_t n, std::size_t period = 0,
                        std::size_t sigma = 4, std::uint64_t seed = 1) {
    DatasetSpec spec;
    spec.family = family;
    spec.n = n;
    spec.period = period;
    spec.sigma = sigma;
    spec.seed = seed;
    return Text::from_bytes(generate(spec));
}

inline SuffixArray sa_of(std::vector<index_t> order) {
    return SuffixArray { std::move(order) };
}

} // namespace radixsa::testing
