#include <radixsa/lmer.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radixsa {

EllChoice choose_ell(std::size_t n, const ProbabilityModel& model, double alpha) {
    if (n < 2)
        throw std::invalid_argument("choose_ell: n must be >= 2");
    if (!(alpha >= 1.0))
        throw std::invalid_argument("choose_ell: alpha must be >= 1");

    const rational& p = model.collision_base();
    if (p >= 1)
        return { n, true };

    const double log_base = -std::log(p.convert_to<double>());
    const double exact = (alpha + 2.0) * std::log(static_cast<double>(n)) / log_base;
    // absorb rounding noise so that integral values such as 3 * log_4 65536 stay put
    auto ell = static_cast<std::size_t>(std::ceil(exact - 1e-9));
    return { std::clamp<std::size_t>(ell, 1, n), false };
}

rational collision_probability(const ProbabilityModel& model, std::size_t ell) {
    if (ell < 1)
        throw std::invalid_argument("collision_probability: ell must be >= 1");
    rational result = 1;
    rational base = model.collision_base();
    for (std::size_t e = ell; e != 0; e >>= 1) {
        if (e & 1) result *= base;
        base *= base;
    }
    return result;
}

LmerConfig LmerConfig::automatic(const Text& t, double alpha) {
    return automatic(t, ProbabilityModel::uniform(t.sigma()), alpha);
}

LmerConfig LmerConfig::automatic(const Text& t, const ProbabilityModel& model,
                                 double alpha) {
    LmerConfig cfg;
    cfg.alpha = alpha;
    cfg.model = model;
    if (t.size() < 2) {
        cfg.ell = 1;
        cfg.degenerate_alphabet = t.sigma() == 1;
        return cfg;
    }
    EllChoice choice = choose_ell(t.size(), model, alpha);
    cfg.ell = choice.ell;
    cfg.degenerate_alphabet = choice.degenerate_alphabet;
    return cfg;
}

LmerConfig LmerConfig::with_ell(std::size_t ell) {
    if (ell < 1)
        throw std::invalid_argument("lmer config: ell must be >= 1");
    LmerConfig cfg;
    cfg.ell = ell;
    return cfg;
}

namespace {

void pack(const Text& t, std::size_t i, std::size_t ell, std::uint64_t* out,
          std::size_t words) {
    std::fill(out, out + words, 0);
    const unsigned b = t.bits_per_symbol();
    const std::size_t end = std::min(t.size(), i + ell);
    std::size_t off = 0;
    for (std::size_t k = i; k < end; ++k, off += b) {
        const std::uint64_t c = t[k];
        const std::size_t w = off / kWordBits;
        const unsigned in_word = static_cast<unsigned>(off % kWordBits);
        if (in_word + b <= kWordBits) {
            out[w] |= c << (kWordBits - in_word - b);
        }
        else {
            const unsigned spill = in_word + b - kWordBits;
            out[w] |= c >> spill;
            out[w + 1] |= c << (kWordBits - spill);
        }
    }
}

} // namespace

Fingerprint fingerprint(const Text& t, std::size_t i, std::size_t ell) {
    const std::size_t words = (ell * t.bits_per_symbol() + kWordBits - 1) / kWordBits;
    Fingerprint fp;
    fp.words.resize(words);
    pack(t, i, ell, fp.words.data(), words);
    return fp;
}

FingerprintTable::FingerprintTable(const Text& t, std::size_t ell)
    : n_(t.size()),
      words_((ell * t.bits_per_symbol() + kWordBits - 1) / kWordBits),
      data_(n_ * words_) {
    for (std::size_t i = 0; i < n_; ++i)
        pack(t, i, ell, data_.data() + i * words_, words_);
}

} // namespace radixsa
