// radixsa command line: build, verify, lemma, gen, bench, corpus.

#include <radixsa/bench.hpp>
#include <radixsa/datagen.hpp>
#include <radixsa/lemma.hpp>
#include <radixsa/prob_builders.hpp>
#include <radixsa/radixsa.hpp>
#include <radixsa/sa_io.hpp>
#include <radixsa/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

using namespace radixsa;

namespace {

struct BuildArgs
{
    std::string input;
    std::string output;
    std::string algo = "radixsa";
    std::string format = "binary";
    double alpha = 1.0;
    std::optional<std::size_t> ell;
    unsigned cap = 8;
    std::size_t depth = 0;
    bool no_periods = false;
    std::string stats;
    bool report = false;
};

int run_build(const BuildArgs& a) {
    const Text t = Text::from_bytes(load(a.input));
    const Algo algo = parse_algo(a.algo);

    RadixSaConfig cfg;
    cfg.access_cap = a.cap;
    cfg.initial_depth = a.depth;
    cfg.detect_periods = !a.no_periods;
    const LmerConfig lc = a.ell ? LmerConfig::with_ell(*a.ell) : LmerConfig::automatic(t, a.alpha);

    RunStats row;
    row.dataset = std::filesystem::path(a.input).filename().string();
    row.n = t.size();
    row.sigma = t.sigma();
    row.algo = algo;

    SuffixArray sa;
    std::optional<RadixSaStats> stats;
    std::optional<Sa2Outcome> outcome;
    PeakScope scope;
    const auto t0 = std::chrono::steady_clock::now();
    switch (algo) {
    case Algo::radixsa: {
        RadixSaResult r = radix_sa(t, cfg);
        sa = std::move(r.sa);
        stats = std::move(r.stats);
        break;
    }
    case Algo::sa1:
        sa = sa1(t, lc);
        break;
    case Algo::sa2:
        outcome = sa2(t, lc, [&](const Text& text) { return radix_sa(text, cfg).sa; });
        sa = outcome->sa;
        break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.wall_ms.push_back(
        std::round(std::chrono::duration<double, std::milli>(t1 - t0).count() * 1000) / 1000);
    row.aux_bytes = stats ? stats->peak_aux_bytes : scope.peak_bytes();
    if (stats) {
        row.mean_access = stats->mean_accesses();
        row.participations = stats->participations;
        row.passes = stats->passes;
    }

    if (!a.output.empty())
        save_sa(a.output, sa, a.format == "text" ? SaFormat::text : SaFormat::binary);
    if (!a.stats.empty()) {
        std::ofstream out(a.stats);
        if (!out) throw std::runtime_error("cannot create '" + a.stats + "'");
        write_csv(out, { row });
    }
    if (a.report) {
        std::cout << "n " << t.size() << "\nsigma " << t.sigma() << "\nalgo " << a.algo
                  << "\nms " << row.wall_ms.front() << "\naux_bytes " << row.aux_bytes << '\n';
        if (algo != Algo::radixsa) std::cout << "ell " << lc.ell << '\n';
        if (stats) {
            std::cout << "initial_depth " << stats->initial_depth << "\npasses " << stats->passes
                      << "\npass_bound " << stats->pass_bound << "\nforced_final_pass "
                      << stats->forced_final_pass << "\nmean_accesses " << stats->mean_accesses()
                      << "\nbucket_sorts " << stats->bucket_sorts << "\nperiod_resolutions "
                      << stats->period_resolutions << "\nskipped_buckets "
                      << stats->skipped_buckets << '\n';
        }
        if (outcome) {
            std::cout << "fell_back " << outcome->fell_back << "\nnonsingleton_buckets "
                      << outcome->nonsingleton_buckets << "\nmax_bucket_size "
                      << outcome->max_bucket_size << '\n';
        }
    }
    return 0;
}

int run_verify(const std::string& text_path, const std::string& sa_path) {
    const Text t = Text::from_bytes(load(text_path));
    const SuffixArray sa = load_sa(sa_path);
    if (auto bad = check_sa(t, sa)) {
        std::cout << "invalid: " << to_string(bad->kind) << " at index " << bad->index << '\n';
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

struct LemmaArgs
{
    bool exact = false;
    bool mc = false;
    std::size_t sigma = 2;
    std::size_t n = 8;
    std::size_t ell = 3;
    std::vector<std::size_t> offsets;
    std::string weights;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    bool csv = false;
};

std::string show(const rational& r) {
    std::ostringstream s;
    s << r << " (" << std::setprecision(9) << r.convert_to<double>() << ")";
    return s.str();
}

int run_lemma(LemmaArgs a) {
    const ProbabilityModel model = a.weights.empty()
        ? ProbabilityModel::uniform(a.sigma)
        : ProbabilityModel::from_weights(parse_weights(a.weights));
    if (a.offsets.empty()) {
        for (std::size_t k = 1; k < a.ell && k + a.ell <= a.n; ++k) a.offsets.push_back(k);
    }
    const LemmaReport r = a.mc ? lemma_montecarlo(model, a.n, a.ell, a.trials, a.offsets, a.seed)
                               : lemma_exact(model, a.n, a.ell, a.offsets);

    if (a.csv) {
        std::cout << "mode,offset,overlapping,estimate,radius,theory,ok\n";
        for (const PairEstimate& p : r.pairs) {
            std::cout << (a.mc ? "montecarlo" : "exact") << ',' << p.offset << ','
                      << p.overlapping << ',' << std::setprecision(17) << p.estimate << ','
                      << p.radius << ',' << r.theoretical.convert_to<double>() << ',' << p.ok
                      << '\n';
        }
        if (r.triple_probability) {
            std::cout << "exact,triple,1," << r.triple_probability->convert_to<double>() << ",0,"
                      << r.triple_if_independent.convert_to<double>() << ','
                      << r.triple_dependent << '\n';
        }
        return r.pairs_ok() ? 0 : 1;
    }

    std::cout << (a.mc ? "monte carlo" : "exact") << ": sigma " << r.sigma << ", n " << r.n
              << ", ell " << r.ell << "\ntheory P^ell = " << show(r.theoretical) << '\n';
    for (const PairEstimate& p : r.pairs) {
        std::cout << "offset " << p.offset << (p.overlapping ? " (overlapping)" : "") << ": ";
        if (p.exact) std::cout << show(*p.exact);
        else std::cout << p.estimate << " +- " << p.radius << " (" << p.hits << '/' << p.trials << ')';
        std::cout << (p.ok ? "  ok" : "  MISMATCH") << '\n';
    }
    if (r.triple_probability) {
        std::cout << "triple at 0,2,3 with ell 3: " << show(*r.triple_probability)
                  << ", independent would be " << show(r.triple_if_independent)
                  << (r.triple_dependent ? "  dependent" : "  independent") << '\n';
    }
    return r.pairs_ok() ? 0 : 1;
}

struct GenArgs
{
    std::string family = "random";
    DatasetSpec spec;
    std::string weights;
    std::string output;
};

int run_gen(GenArgs a) {
    a.spec.family = parse_family(a.family);
    if (!a.weights.empty()) a.spec.weights = parse_weights(a.weights);
    const auto bytes = generate(a.spec);
    std::ofstream out(a.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot create '" + a.output + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return out ? 0 : 1;
}

int run_bench(const std::string& plan_path, std::optional<std::size_t> reps,
              const std::string& csv_path) {
    const BenchPlan plan = read_bench_plan(plan_path);
    BenchOptions options;
    options.repetitions = reps.value_or(plan.repetitions);
    const auto rows = bench(plan.datasets, plan.algos, options);
    for (const RunStats& r : rows) {
        std::cout << std::left << std::setw(24) << r.dataset << std::setw(9)
                  << to_string(r.algo) << " n " << r.n << "  mean " << std::fixed
                  << std::setprecision(3) << r.mean_ms() << " ms  sd " << r.stddev_ms()
                  << "  accesses " << r.mean_access << "  passes " << r.passes << "  aux "
                  << r.aux_bytes << std::defaultfloat << '\n';
    }
    for (const DatasetSpec& spec : plan.datasets) {
        for (Algo algo : plan.algos) {
            if (const auto ref = reference_seconds(spec, algo))
                std::cout << spec.label() << ' ' << to_string(algo) << ": reference " << *ref
                          << " s on older hardware (context only)\n";
        }
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot create '" + csv_path + "'");
        write_csv(out, rows);
    }
    return 0;
}

int run_corpus(const std::string& manifest, const std::string& file, std::string name) {
    if (name.empty()) name = std::filesystem::path(file).stem().string();
    for (const CorpusEntry& e : read_manifest(manifest)) {
        if (e.name != name) continue;
        const Text t = Text::from_bytes(load(file));
        if (auto problem = check_against_manifest(e, t)) {
            std::cout << problem.value() << '\n';
            return 1;
        }
        std::cout << name << ": ok (n " << t.size() << ", sigma " << t.sigma() << ")\n";
        return 0;
    }
    std::cout << "no manifest entry named '" << name << "'\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app { "Suffix array construction by radix sorting" };
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "build the suffix array of a file");
    b->add_option("input", build.input, "text file")->required()->check(CLI::ExistingFile);
    b->add_option("-o,--output", build.output, "suffix array file");
    b->add_option("--format", build.format, "output form")
        ->check(CLI::IsMember({ "binary", "text" }));
    b->add_option("--algo", build.algo, "builder")
        ->check(CLI::IsMember({ "radixsa", "sa1", "sa2" }));
    b->add_option("--alpha", build.alpha, "l-mer confidence exponent (sa1, sa2)");
    b->add_option("--ell", build.ell, "fixed l-mer length (sa1, sa2)");
    b->add_option("--cap", build.cap, "access cap C")->check(CLI::Range(1u, kUncapped));
    b->add_option("--depth", build.depth, "initial sort depth d (0 = widest)");
    b->add_flag("--no-periods", build.no_periods, "disable periodic-run handling");
    b->add_option("--stats", build.stats, "write run statistics as CSV");
    b->add_flag("--report", build.report, "print run statistics");

    std::string verify_text, verify_sa;
    auto* v = app.add_subcommand("verify", "check a suffix array file against its text");
    v->add_option("text", verify_text)->required()->check(CLI::ExistingFile);
    v->add_option("sa-file", verify_sa)->required()->check(CLI::ExistingFile);

    LemmaArgs lemma;
    auto* l = app.add_subcommand("lemma", "l-mer collision probabilities");
    auto* mode = l->add_option_group("mode");
    mode->add_flag("--exact", lemma.exact, "enumerate all strings");
    mode->add_flag("--mc", lemma.mc, "Monte Carlo estimate");
    mode->require_option(1);
    l->add_option("--sigma", lemma.sigma, "alphabet size (uniform model)");
    l->add_option("--weights", lemma.weights, "symbol weights, e.g. 0.7,0.3");
    l->add_option("--n", lemma.n, "string length");
    l->add_option("--ell", lemma.ell, "window length");
    l->add_option("--offsets", lemma.offsets, "window offsets (default 1..ell-1)")->delimiter(',');
    l->add_option("--trials", lemma.trials, "Monte Carlo trials");
    l->add_option("--seed", lemma.seed, "Monte Carlo seed");
    l->add_flag("--csv", lemma.csv, "CSV output");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate a dataset");
    g->add_option("--family", gen.family, "random|periodic|fibonacci|unary|debruijn");
    g->add_option("--n", gen.spec.n, "length")->required();
    g->add_option("--seed", gen.spec.seed, "64-bit seed");
    g->add_option("--sigma", gen.spec.sigma, "alphabet size");
    g->add_option("--weights", gen.weights, "symbol weights (random family)");
    g->add_option("--period", gen.spec.period, "block length (periodic family)");
    g->add_option("-o,--output", gen.output, "output file")->required();

    std::string plan;
    std::optional<std::size_t> reps;
    std::string csv;
    auto* be = app.add_subcommand("bench", "run a benchmark plan");
    be->add_option("--spec", plan, "bench plan file")->required()->check(CLI::ExistingFile);
    be->add_option("--reps", reps, "repetitions per dataset and algorithm");
    be->add_option("--csv", csv, "CSV report");

    std::string manifest, corpus_file, corpus_name;
    auto* c = app.add_subcommand("corpus", "check a corpus file against the manifest");
    c->add_option("--manifest", manifest)->required()->check(CLI::ExistingFile);
    c->add_option("file", corpus_file)->required()->check(CLI::ExistingFile);
    c->add_option("--name", corpus_name, "manifest entry (default: file stem)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*b) return run_build(build);
        if (*v) return run_verify(verify_text, verify_sa);
        if (*l) return run_lemma(lemma);
        if (*g) return run_gen(gen);
        if (*be) return run_bench(plan, reps, csv);
        if (*c) return run_corpus(manifest, corpus_file, corpus_name);
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
