#include <radixsa/bench.hpp>

#include <radixsa/prob_builders.hpp>
#include <radixsa/verify.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace radixsa {

std::string_view to_string(Algo algo) noexcept {
    switch (algo) {
    case Algo::radixsa: return "radixsa";
    case Algo::sa1: return "sa1";
    case Algo::sa2: return "sa2";
    }
    return "unknown";
}

Algo parse_algo(std::string_view name) {
    for (Algo a : { Algo::radixsa, Algo::sa1, Algo::sa2 }) {
        if (to_string(a) == name) return a;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

double RunStats::mean_ms() const noexcept {
    if (wall_ms.empty()) return 0;
    return std::accumulate(wall_ms.begin(), wall_ms.end(), 0.0) /
           static_cast<double>(wall_ms.size());
}

double RunStats::stddev_ms() const noexcept {
    if (wall_ms.size() < 2) return 0;
    const double mean = mean_ms();
    double sq = 0;
    for (double x : wall_ms) sq += (x - mean) * (x - mean);
    return std::sqrt(sq / static_cast<double>(wall_ms.size() - 1));
}

bool RunStats::csv_equal(const RunStats& o) const noexcept {
    return dataset == o.dataset && n == o.n && sigma == o.sigma && algo == o.algo &&
           wall_ms == o.wall_ms && mean_access == o.mean_access && passes == o.passes &&
           aux_bytes == o.aux_bytes;
}

namespace {

using Clock = std::chrono::steady_clock;

double round_to_us(double ms) {
    return std::round(ms * 1000.0) / 1000.0;
}

struct Build
{
    SuffixArray sa;
    double ms = 0;
    double mean_access = 0;
    std::uint64_t participations = 0;
    std::size_t passes = 0;
    std::size_t aux_bytes = 0;
    bool fell_back = false;
};

LmerConfig lmer_config(const Text& t, const BenchOptions& options) {
    return options.ell ? LmerConfig::with_ell(*options.ell)
                       : LmerConfig::automatic(t, options.alpha);
}

Build run_once(const Text& t, Algo algo, const BenchOptions& options) {
    Build b;
    if (algo == Algo::radixsa) {
        RadixSaConfig cfg = options.radix;
        cfg.record_profile = false;
        const auto t0 = Clock::now();
        RadixSaResult r = radix_sa(t, cfg);
        const auto t1 = Clock::now();
        b.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        b.sa = std::move(r.sa);
        b.mean_access = r.stats.mean_accesses();
        b.participations = r.stats.participations;
        b.passes = r.stats.passes;
        b.aux_bytes = r.stats.peak_aux_bytes;
        return b;
    }

    const LmerConfig lc = lmer_config(t, options);
    PeakScope scope;
    const auto t0 = Clock::now();
    if (algo == Algo::sa1) {
        b.sa = sa1(t, lc);
    }
    else {
        Sa2Outcome out = sa2(t, lc, [&](const Text& text) {
            return radix_sa(text, options.radix).sa;
        });
        b.sa = std::move(out.sa);
        b.fell_back = out.fell_back;
    }
    const auto t1 = Clock::now();
    b.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    b.aux_bytes = scope.peak_bytes();
    return b;
}

} // namespace

std::vector<RunStats> bench(const std::vector<DatasetSpec>& specs,
                            const std::vector<Algo>& algos, const BenchOptions& options) {
    if (options.repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
    std::vector<RunStats> table;
    for (const DatasetSpec& spec : specs) {
        const Text t = Text::from_bytes(generate(spec));
        for (Algo algo : algos) {
            RunStats row;
            row.dataset = spec.label();
            row.n = t.size();
            row.sigma = t.sigma();
            row.algo = algo;
            for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
                Build b = run_once(t, algo, options);
                if (auto bad = check_sa(t, b.sa)) {
                    throw std::runtime_error("bench: " + std::string(to_string(algo)) +
                                             " produced a wrong suffix array for " +
                                             row.dataset + " (" +
                                             std::string(to_string(bad->kind)) +
                                             " at index " + std::to_string(bad->index) + ")");
                }
                row.wall_ms.push_back(round_to_us(b.ms));
                row.mean_access = b.mean_access;
                row.participations = b.participations;
                row.passes = b.passes;
                row.aux_bytes = std::max(row.aux_bytes, b.aux_bytes);
                row.fell_back = row.fell_back || b.fell_back;
            }
            if (algo == Algo::radixsa && options.access_histogram)
                row.access_histogram = access_profile(t, options.radix).histogram;
            table.push_back(std::move(row));
        }
    }
    return table;
}

AccessProfile access_profile(const Text& t, RadixSaConfig cfg) {
    cfg.record_profile = true;
    RadixSaResult r = radix_sa(t, cfg);
    AccessProfile p;
    p.counts = std::move(r.stats.access_profile);
    p.counts.resize(t.size(), 0);
    for (std::uint32_t c : p.counts) {
        if (c >= p.histogram.size()) p.histogram.resize(c + 1, 0);
        ++p.histogram[c];
        p.total += c;
    }
    p.mean = t.size() == 0 ? 0.0 : static_cast<double>(p.total) / static_cast<double>(t.size());
    return p;
}

void write_csv(std::ostream& out, const std::vector<RunStats>& rows) {
    out << "dataset,n,sigma,algo,rep,ms,mean_access,passes,aux_bytes\n";
    for (const RunStats& r : rows) {
        if (r.dataset.find_first_of(",\"\n") != std::string::npos)
            throw std::invalid_argument("dataset label '" + r.dataset + "' is not CSV-safe");
        for (std::size_t rep = 0; rep < r.wall_ms.size(); ++rep) {
            out << r.dataset << ',' << r.n << ',' << r.sigma << ',' << to_string(r.algo) << ','
                << rep << ',' << std::fixed << std::setprecision(3) << r.wall_ms[rep] << ','
                << std::defaultfloat
                << std::setprecision(std::numeric_limits<double>::max_digits10)
                << r.mean_access << ',' << r.passes << ',' << r.aux_bytes << '\n';
        }
    }
    if (!out) throw std::runtime_error("CSV write failed");
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t end = s.find(sep, begin);
        parts.emplace_back(s.substr(begin, end - begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& field, std::size_t lineno) {
    std::istringstream in(field);
    T value {};
    if (!(in >> value) || !(in >> std::ws).eof())
        throw std::runtime_error("CSV line " + std::to_string(lineno) + ": bad number '" +
                                 field + "'");
    return value;
}

} // namespace

std::vector<RunStats> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        trim(line) != "dataset,n,sigma,algo,rep,ms,mean_access,passes,aux_bytes")
        throw std::runtime_error("CSV: missing or unexpected header");

    std::vector<RunStats> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto f = split(trim(line), ',');
        if (f.size() != 9)
            throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected 9 fields");
        const Algo algo = parse_algo(f[3]);
        const auto rep = parse_number<std::size_t>(f[4], lineno);
        if (rep == 0) {
            RunStats r;
            r.dataset = f[0];
            r.n = parse_number<std::size_t>(f[1], lineno);
            r.sigma = parse_number<std::size_t>(f[2], lineno);
            r.algo = algo;
            r.mean_access = std::strtod(f[6].c_str(), nullptr);
            r.passes = parse_number<std::size_t>(f[7], lineno);
            r.aux_bytes = parse_number<std::size_t>(f[8], lineno);
            rows.push_back(std::move(r));
        }
        else if (rows.empty() || rows.back().dataset != f[0] || rows.back().algo != algo ||
                 rows.back().wall_ms.size() != rep) {
            throw std::runtime_error("CSV line " + std::to_string(lineno) +
                                     ": repetition out of sequence");
        }
        rows.back().wall_ms.push_back(std::strtod(f[5].c_str(), nullptr));
    }
    return rows;
}

std::optional<double> reference_seconds(const DatasetSpec& spec, Algo algo) noexcept {
    if (algo == Algo::radixsa && spec.family == Family::random && spec.weights.empty() &&
        spec.sigma == 26 && spec.n == 20'000'000)
        return kReferenceRandomSeconds;
    return std::nullopt;
}

std::vector<rational> parse_weights(std::string_view list) {
    std::vector<rational> weights;
    for (const std::string& part : split(list, ','))
        weights.push_back(parse_rational(trim(part)));
    return weights;
}

BenchPlan read_bench_plan(const std::filesystem::path& path) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path.string(), tree);
    }
    catch (const pt::ptree_error& e) {
        throw std::runtime_error("bench plan '" + path.string() + "': " + e.what());
    }

    BenchPlan plan;
    try {
        for (const auto& [key, node] : tree) {
            if (node.empty()) {
                if (key == "algos") {
                    plan.algos.clear();
                    for (const std::string& a : split(node.data(), ','))
                        plan.algos.push_back(parse_algo(trim(a)));
                }
                else if (key == "reps") {
                    plan.repetitions = node.get_value<std::size_t>();
                }
                else {
                    throw std::invalid_argument("unknown top-level key '" + key + "'");
                }
                continue;
            }
            DatasetSpec spec;
            spec.name = key;
            spec.family = parse_family(node.get<std::string>("family"));
            spec.n = node.get<std::size_t>("n", 0);
            spec.sigma = node.get<std::size_t>("sigma", spec.sigma);
            spec.period = node.get<std::size_t>("period", 0);
            spec.seed = node.get<std::uint64_t>("seed", 0);
            if (auto w = node.get_optional<std::string>("weights"))
                spec.weights = parse_weights(*w);
            if (auto p = node.get_optional<std::string>("path")) {
                std::filesystem::path file = *p;
                spec.path = file.is_relative() ? path.parent_path() / file : file;
            }
            plan.datasets.push_back(std::move(spec));
        }
    }
    catch (const pt::ptree_error& e) {
        throw std::runtime_error("bench plan '" + path.string() + "': " + e.what());
    }
    return plan;
}

} // namespace radixsa
