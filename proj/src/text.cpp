#include <radixsa/text.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <string>

namespace radixsa {

Text::Text(std::vector<symbol_t> data, std::vector<std::uint64_t> alphabet)
    : data_(std::move(data)), alphabet_(std::move(alphabet)),
      bits_(static_cast<unsigned>(std::bit_width(alphabet_.size()))) { }

Text Text::from_bytes(std::span<const std::uint8_t> raw) {
    if (raw.empty())
        throw std::invalid_argument("text: input is empty");
    if (raw.size() > kMaxTextLength)
        throw std::invalid_argument("text: input longer than 2^31 - 1 symbols");

    std::array<bool, 256> used { };
    for (std::uint8_t c : raw) used[c] = true;

    std::array<symbol_t, 256> code { };
    std::vector<std::uint64_t> alphabet;
    for (unsigned c = 0; c < 256; ++c) {
        if (!used[c]) continue;
        alphabet.push_back(c);
        code[c] = static_cast<symbol_t>(alphabet.size());
    }

    std::vector<symbol_t> data(raw.size());
    std::transform(raw.begin(), raw.end(), data.begin(),
                   [&](std::uint8_t c) { return code[c]; });
    return Text(std::move(data), std::move(alphabet));
}

Text Text::from_string(std::string_view raw) {
    return from_bytes({ reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size() });
}

Text Text::from_symbols(std::span<const std::uint64_t> raw) {
    if (raw.empty())
        throw std::invalid_argument("text: input is empty");
    if (raw.size() > kMaxTextLength)
        throw std::invalid_argument("text: input longer than 2^31 - 1 symbols");

    std::vector<std::uint64_t> alphabet(raw.begin(), raw.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::vector<symbol_t> data(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), raw[i]);
        data[i] = static_cast<symbol_t>(it - alphabet.begin()) + 1;
    }
    return Text(std::move(data), std::move(alphabet));
}

symbol_t Text::code_of(std::uint64_t original) const noexcept {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), original);
    if (it == alphabet_.end() || *it != original) return 0;
    return static_cast<symbol_t>(it - alphabet_.begin()) + 1;
}

Text ingest(std::span<const std::uint8_t> raw) { return Text::from_bytes(raw); }

Text ingest(std::string_view raw) { return Text::from_string(raw); }

std::strong_ordering suffix_compare(const Text& t, std::size_t i, std::size_t j) {
    if (i == j) return std::strong_ordering::equal;
    const std::size_t n = t.size();
    const auto codes = t.codes();
    auto a = codes.begin() + static_cast<std::ptrdiff_t>(i);
    auto b = codes.begin() + static_cast<std::ptrdiff_t>(j);
    auto [ma, mb] = std::mismatch(a, codes.end(), b, codes.end());
    if (ma != codes.end() && mb != codes.end())
        return *ma <=> *mb;
    // one suffix ran out: the shorter one (larger start) is a proper prefix
    return (n - i) <=> (n - j);
}

ProbabilityModel::ProbabilityModel(Kind kind, std::vector<rational> weights)
    : kind_(kind), weights_(std::move(weights)) {
    for (const rational& w : weights_)
        collision_base_ += w * w;
}

ProbabilityModel ProbabilityModel::uniform(std::size_t sigma) {
    if (sigma == 0)
        throw std::invalid_argument("probability model: sigma must be >= 1");
    return ProbabilityModel(Kind::uniform,
                            std::vector<rational>(sigma, rational(1, sigma)));
}

ProbabilityModel ProbabilityModel::from_weights(std::vector<rational> weights) {
    if (weights.empty())
        throw std::invalid_argument("probability model: no weights given");
    rational sum = 0;
    for (const rational& w : weights) {
        if (w <= 0)
            throw std::invalid_argument("probability model: weights must be positive");
        sum += w;
    }
    if (sum != 1)
        throw std::invalid_argument("probability model: weights must sum to 1");
    return ProbabilityModel(Kind::explicit_weights, std::move(weights));
}

rational parse_rational(std::string_view text) {
    auto fail = [&]() -> rational {
        throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty()) fail();
        boost::multiprecision::cpp_int v = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) fail();
        return rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos)
        return rational(parse_int(text));
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    rational value = whole.empty() ? rational(0) : rational(parse_int(whole));
    if (!frac.empty()) value += rational(parse_int(frac), scale);
    return value;
}

} // namespace radixsa
