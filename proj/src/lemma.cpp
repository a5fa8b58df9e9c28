#include <radixsa/lemma.hpp>

#include <radixsa/datagen.hpp>
#include <radixsa/lmer.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace radixsa {

namespace {

constexpr std::size_t kTripleEll = 3;
constexpr std::size_t kTripleSpan = 6;  // windows at 0, 2, 3 of length 3

void check_offsets(std::size_t n, std::size_t ell, const std::vector<std::size_t>& offsets) {
    if (ell < 1) throw std::invalid_argument("lemma: ell must be >= 1");
    for (std::size_t k : offsets) {
        if (k < 1 || k + ell > n)
            throw std::invalid_argument("lemma: offset " + std::to_string(k) +
                                        " does not fit two windows of length " +
                                        std::to_string(ell) + " in n = " + std::to_string(n));
    }
}

template <class Symbol>
bool windows_equal(const std::vector<Symbol>& s, std::size_t a, std::size_t b,
                   std::size_t ell) {
    return std::equal(s.begin() + static_cast<std::ptrdiff_t>(a),
                      s.begin() + static_cast<std::ptrdiff_t>(a + ell),
                      s.begin() + static_cast<std::ptrdiff_t>(b));
}

rational power(const rational& base, std::size_t e) {
    rational result = 1, b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace

bool LemmaReport::pairs_ok() const noexcept {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairEstimate& p) { return p.ok; });
}

LemmaReport lemma_exact(std::size_t sigma, std::size_t n, std::size_t ell,
                        const std::vector<std::size_t>& offsets) {
    return lemma_exact(ProbabilityModel::uniform(sigma), n, ell, offsets);
}

LemmaReport lemma_exact(const ProbabilityModel& model, std::size_t n, std::size_t ell,
                        const std::vector<std::size_t>& offsets) {
    check_offsets(n, ell, offsets);
    const std::size_t sigma = model.sigma();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= sigma;
        if (total > kEnumerationGuard)
            throw std::invalid_argument("lemma: sigma^n exceeds the enumeration guard 2^24");
    }

    const bool uniform = model.kind() == ProbabilityModel::Kind::uniform;
    const bool with_triple = n >= kTripleSpan;
    const std::size_t events = offsets.size() + (with_triple ? 1 : 0);

    // Hits per event, grouped by symbol composition: every string with the
    // same symbol counts has the same probability. Uniform strings share one group.
    std::map<std::vector<std::uint32_t>, std::vector<std::uint64_t>> groups;
    std::vector<std::uint32_t> s(n, 0);
    std::vector<std::uint32_t> composition(uniform ? 0 : sigma, 0);
    if (!uniform) composition[0] = static_cast<std::uint32_t>(n);

    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto& hits = groups[composition];
        hits.resize(events + 1);
        ++hits[events];  // strings in the group
        for (std::size_t e = 0; e < offsets.size(); ++e)
            hits[e] += windows_equal(s, 0, offsets[e], ell);
        if (with_triple) {
            hits[offsets.size()] += windows_equal(s, 0, 2, kTripleEll) &&
                                    windows_equal(s, 2, 3, kTripleEll);
        }

        // odometer increment, keeping the composition in step
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (!uniform) --composition[s[pos]];
            if (++s[pos] < sigma) {
                if (!uniform) ++composition[s[pos]];
                break;
            }
            s[pos] = 0;
            if (!uniform) ++composition[0];
        }
    }

    std::vector<rational> prob(events, rational(0));
    for (const auto& [key, hits] : groups) {
        rational weight = 1;
        if (uniform) {
            weight = rational(1, static_cast<long long>(total));
        }
        else {
            for (std::size_t j = 0; j < sigma; ++j)
                weight *= power(model.weights()[j], key[j]);
        }
        for (std::size_t e = 0; e < events; ++e)
            prob[e] += weight * hits[e];
    }

    LemmaReport report;
    report.mode = LemmaReport::Mode::exact;
    report.sigma = sigma;
    report.n = n;
    report.ell = ell;
    report.theoretical = collision_probability(model, ell);
    for (std::size_t e = 0; e < offsets.size(); ++e) {
        PairEstimate p;
        p.offset = offsets[e];
        p.overlapping = offsets[e] < ell;
        p.exact = prob[e];
        p.estimate = prob[e].convert_to<double>();
        p.ok = prob[e] == report.theoretical;
        report.pairs.push_back(std::move(p));
    }
    report.triple_if_independent = collision_probability(model, 2 * kTripleEll);
    if (with_triple) {
        report.triple_probability = prob[offsets.size()];
        report.triple_dependent = *report.triple_probability != report.triple_if_independent;
    }
    return report;
}

LemmaReport lemma_montecarlo(const ProbabilityModel& model, std::size_t n, std::size_t ell,
                             std::uint64_t trials, const std::vector<std::size_t>& offsets,
                             std::uint64_t seed) {
    if (trials < kMinTrials)
        throw std::invalid_argument("lemma: at least 10000 Monte Carlo trials are required");
    check_offsets(n, ell, offsets);

    std::size_t window = ell;
    for (std::size_t k : offsets) window = std::max(window, k + ell);

    SymbolSampler draw(model, seed);
    std::vector<std::uint32_t> s(window);
    std::vector<std::uint64_t> hits(offsets.size(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& c : s) c = static_cast<std::uint32_t>(draw());
        for (std::size_t e = 0; e < offsets.size(); ++e)
            hits[e] += windows_equal(s, 0, offsets[e], ell);
    }

    LemmaReport report;
    report.mode = LemmaReport::Mode::montecarlo;
    report.sigma = model.sigma();
    report.n = n;
    report.ell = ell;
    report.theoretical = collision_probability(model, ell);
    report.triple_if_independent = collision_probability(model, 2 * kTripleEll);
    const double theory = report.theoretical.convert_to<double>();
    for (std::size_t e = 0; e < offsets.size(); ++e) {
        PairEstimate p;
        p.offset = offsets[e];
        p.overlapping = offsets[e] < ell;
        p.hits = hits[e];
        p.trials = trials;
        p.estimate = static_cast<double>(hits[e]) / static_cast<double>(trials);
        p.radius = kZ99 * std::sqrt(p.estimate * (1 - p.estimate) / static_cast<double>(trials));
        p.ok = std::abs(theory - p.estimate) <= p.radius;
        report.pairs.push_back(std::move(p));
    }
    return report;
}

} // namespace radixsa
