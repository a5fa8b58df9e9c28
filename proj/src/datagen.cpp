#include <radixsa/datagen.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <bit>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace radixsa {

std::string_view to_string(Family family) noexcept {
    switch (family) {
    case Family::random: return "random";
    case Family::periodic: return "periodic";
    case Family::fibonacci: return "fibonacci";
    case Family::unary: return "unary";
    case Family::debruijn: return "debruijn";
    case Family::file: return "file";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : { Family::random, Family::periodic, Family::fibonacci,
                      Family::unary, Family::debruijn, Family::file }) {
        if (to_string(f) == name) return f;
    }
    throw std::invalid_argument("unknown dataset family '" + std::string(name) + "'");
}

std::string DatasetSpec::label() const {
    if (!name.empty()) return name;
    std::string label(to_string(family));
    switch (family) {
    case Family::random:
        label += weights.empty() ? "_s" + std::to_string(sigma) : "_weighted";
        break;
    case Family::periodic:
        label += "_p" + std::to_string(period);
        break;
    case Family::file:
        return path.filename().string();
    default:
        break;
    }
    return label + "_n" + std::to_string(n);
}

SymbolSampler::SymbolSampler(const ProbabilityModel& model, std::uint64_t seed)
    : rng_(seed), sigma_(model.sigma()),
      uniform_(model.kind() == ProbabilityModel::Kind::uniform) {
    if (uniform_) return;
    double sum = 0;
    for (const rational& w : model.weights()) {
        sum += w.convert_to<double>();
        cumulative_.push_back(sum);
    }
}

std::size_t SymbolSampler::operator () () {
    if (uniform_) {
        const std::uint64_t s = sigma_;
        constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
        for (;;) {
            const std::uint64_t x = rng_();
            const std::uint64_t r = x % s;
            if (x - r <= kMax - (s - 1)) return static_cast<std::size_t>(r);
        }
    }
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    for (std::size_t j = 0; j + 1 < cumulative_.size(); ++j) {
        if (u < cumulative_[j]) return j;
    }
    return cumulative_.size() - 1;
}

std::uint8_t alphabet_byte(std::size_t sigma, std::size_t k) {
    if (sigma <= 26) return static_cast<std::uint8_t>('a' + k);
    if (sigma <= 94) return static_cast<std::uint8_t>('!' + k);
    return static_cast<std::uint8_t>(k);
}

std::string fibonacci_word(std::size_t k) {
    std::string prev = "b", cur = "a";
    if (k == 0) return prev;
    for (std::size_t i = 1; i < k; ++i) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("dataset spec: ") + what);
}

std::vector<std::uint8_t> random_bytes(const DatasetSpec& spec) {
    const ProbabilityModel model = spec.weights.empty()
        ? ProbabilityModel::uniform(spec.sigma)
        : ProbabilityModel::from_weights(spec.weights);
    const std::size_t sigma = model.sigma();
    require(sigma <= 256, "at most 256 symbols");
    SymbolSampler draw(model, spec.seed);
    std::vector<std::uint8_t> out(spec.n);
    for (auto& c : out) c = alphabet_byte(sigma, draw());
    return out;
}

std::vector<std::uint8_t> periodic_bytes(const DatasetSpec& spec) {
    require(spec.period >= 1, "periodic family needs period >= 1");
    require(spec.sigma >= 1 && spec.sigma <= 256, "sigma must be in [1, 256]");
    SymbolSampler draw(ProbabilityModel::uniform(spec.sigma), spec.seed);
    std::vector<std::uint8_t> block(std::min(spec.period, spec.n));
    for (auto& c : block) c = alphabet_byte(spec.sigma, draw());
    std::vector<std::uint8_t> out(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) out[i] = block[i % spec.period];
    return out;
}

std::vector<std::uint8_t> fibonacci_bytes(std::size_t n) {
    // F_k is a prefix of F_{k+1} for k >= 1, so grow until long enough
    std::string prev = "b", cur = "a";
    while (cur.size() < n) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return std::vector<std::uint8_t>(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n));
}

//! binary de Bruijn sequence of the given order (concatenated Lyndon words)
std::vector<std::uint8_t> debruijn_bytes(unsigned order) {
    std::vector<std::uint8_t> out;
    out.reserve(std::size_t(1) << order);
    std::vector<unsigned> a(order + 1, 0);
    // iterative Fredricksen-Kessler-Maiorana generation
    std::size_t len = 1;
    a[1] = 0;
    for (;;) {
        if (order % len == 0) {
            for (std::size_t i = 1; i <= len; ++i)
                out.push_back(static_cast<std::uint8_t>('a' + a[i]));
        }
        for (std::size_t i = len + 1; i <= order; ++i) a[i] = a[i - len];
        len = order;
        while (len > 0 && a[len] == 1) --len;
        if (len == 0) break;
        ++a[len];
    }
    return out;
}

} // namespace

std::vector<std::uint8_t> generate(const DatasetSpec& spec) {
    if (spec.family == Family::file) {
        if (spec.path.empty()) throw std::invalid_argument("file family needs a path");
        return load(spec.path);
    }
    require(spec.n >= 1, "n must be >= 1");
    require(spec.weights.empty() || spec.family == Family::random,
            "weights only apply to the random family");
    switch (spec.family) {
    case Family::random:
        require(spec.sigma >= 1 || !spec.weights.empty(), "sigma must be >= 1");
        return random_bytes(spec);
    case Family::periodic:
        return periodic_bytes(spec);
    case Family::fibonacci:
        return fibonacci_bytes(spec.n);
    case Family::unary:
        return std::vector<std::uint8_t>(spec.n, 'a');
    case Family::debruijn:
        require(spec.n >= 2, "debruijn family needs n >= 2");
        return debruijn_bytes(static_cast<unsigned>(std::bit_width(spec.n) - 1));
    case Family::file:
        break;
    }
    throw std::logic_error("unhandled dataset family");
}

std::vector<std::uint8_t> load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("error reading '" + path.string() + "'");
    if (bytes.empty()) throw std::runtime_error("'" + path.string() + "' is empty");
    return bytes;
}

std::vector<CorpusEntry> read_manifest(const std::filesystem::path& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path.string(), tree);
    }
    catch (const boost::property_tree::ptree_error& e) {
        throw std::runtime_error("manifest '" + path.string() + "': " + e.what());
    }
    std::vector<CorpusEntry> entries;
    for (const auto& [name, section] : tree) {
        CorpusEntry e;
        e.name = name;
        e.length = section.get<std::size_t>("length");
        e.sigma = section.get<std::size_t>("sigma");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::optional<std::string> check_against_manifest(const CorpusEntry& entry, const Text& t) {
    if (t.size() != entry.length) {
        return entry.name + ": length " + std::to_string(t.size()) + ", manifest says " +
               std::to_string(entry.length);
    }
    if (t.sigma() != entry.sigma) {
        return entry.name + ": alphabet size " + std::to_string(t.sigma()) +
               ", manifest says " + std::to_string(entry.sigma);
    }
    return std::nullopt;
}

} // namespace radixsa
