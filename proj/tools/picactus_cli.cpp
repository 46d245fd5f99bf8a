#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "picactus/picactus.hpp"

namespace {

using namespace picactus;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitNoWitness = 3;

Graph load_graph(const std::string& path, const std::string& format) {
    auto fmt = format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list;
    if (path == "-")
        return read_graph(std::cin, fmt);
    return read_graph_file(path, fmt);
}

struct IndexChoice {
    const char* token;  // --indices selector
    const char* label;  // printed name
    const char* key;    // json/csv field
    std::int64_t IndexReport::* field;
};

constexpr IndexChoice kIndexChoices[] = {
    {"pi", "pi_vertex", "vertex_pi", &IndexReport::vertex_pi},
    {"pi_edge", "pi_edge", "edge_pi", &IndexReport::edge_pi},
    {"wiener", "wiener", "wiener", &IndexReport::wiener},
    {"szeged", "szeged", "szeged", &IndexReport::szeged},
};

struct ComputeOpts {
    std::string input;
    std::string format = "edge-list";
    std::vector<std::string> indices;
    bool all = false;
    std::string output = "text";
};

int run_compute(const ComputeOpts& opt) {
    auto rep = index_report(load_graph(opt.input, opt.format));
    std::vector<const IndexChoice*> picked;
    for (const auto& c : kIndexChoices)
        if (opt.all || opt.indices.empty() ||
            std::find(opt.indices.begin(), opt.indices.end(), c.token) != opt.indices.end())
            picked.push_back(&c);

    if (opt.output == "text") {
        for (const auto* c : picked)
            std::cout << c->label << ": " << rep.*(c->field) << '\n';
    } else if (opt.output == "json") {
        nlohmann::json j{{"schema_version", 1},
                         {"type", "index_report"},
                         {"order", rep.order},
                         {"size", rep.size}};
        for (const auto* c : picked)
            j[c->key] = rep.*(c->field);
        std::cout << j.dump(2) << '\n';
    } else {
        std::ostringstream head, row;
        head << "order,size";
        row << rep.order << ',' << rep.size;
        for (const auto* c : picked) {
            head << ',' << c->key;
            row << ',' << rep.*(c->field);
        }
        std::cout << head.str() << '\n' << row.str() << '\n';
    }
    return kExitOk;
}

struct BoundsOpts {
    int n = 0;
    int k = 0;
    std::string output = "text";
};

int run_bounds(const BoundsOpts& opt) {
    auto upper = pi_upper_bound(opt.n, opt.k);
    auto lower = pi_lower_bound(opt.n, opt.k);
    // floors in the formulas vanish exactly on these ranges, i.e. every class
    // member is forced to be a tree-shaped achiever
    bool tree_max = opt.n <= opt.k + 3;
    bool tree_min = opt.n <= opt.k + 2;
    if (opt.output == "text") {
        std::cout << "bound_max: " << upper << '\n'
                  << "bound_min: " << lower << '\n'
                  << "tree_regime_max: " << (tree_max ? "true" : "false") << '\n'
                  << "tree_regime_min: " << (tree_min ? "true" : "false") << '\n';
    } else if (opt.output == "json") {
        nlohmann::json j{{"schema_version", 1}, {"type", "bounds_report"},
                         {"n", opt.n},          {"k", opt.k},
                         {"bound_max", upper},  {"bound_min", lower},
                         {"tree_regime_max", tree_max}, {"tree_regime_min", tree_min}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n,k,bound_max,bound_min,tree_regime_max,tree_regime_min\n"
                  << opt.n << ',' << opt.k << ',' << upper << ',' << lower << ','
                  << (tree_max ? "true" : "false") << ',' << (tree_min ? "true" : "false")
                  << '\n';
    }
    return kExitOk;
}

struct ConstructOpts {
    int n = 0;
    int k = 0;
    std::string direction;
    std::string output;  // empty -> stdout
};

int run_construct(const ConstructOpts& opt) {
    auto witness = opt.direction == "max" ? construct_max(opt.n, opt.k)
                                          : construct_min(opt.n, opt.k);
    if (!witness) {
        std::cerr << "no witness: the " << opt.direction << " bound for n=" << opt.n
                  << " k=" << opt.k << " is not attained\n";
        return kExitNoWitness;
    }
    if (opt.output.empty()) {
        write_edge_list(std::cout, *witness);
        std::cerr << "vertex_pi: " << vertex_pi(*witness) << '\n';
    } else {
        std::ofstream out(opt.output);
        if (!out)
            throw input_error("cannot open " + opt.output);
        write_edge_list(out, *witness);
        std::cout << "vertex_pi: " << vertex_pi(*witness) << '\n';
    }
    return kExitOk;
}

struct EnumerateOpts {
    int n = 0;
    int k = -1;  // -1 -> no pendant filter
    bool count_only = false;
    int guard = kDefaultEnumerationGuard;
    int jobs = 1;
};

int run_enumerate(const EnumerateOpts& opt) {
    EnumerationSpec spec{.n = opt.n, .guard = opt.guard};
    if (opt.k >= 0)
        spec.k_filter = opt.k;
    if (opt.count_only) {
        std::int64_t count = 0;
        enumerate_cacti(spec, [&](const Graph&) { ++count; }, opt.jobs);
        std::cout << count << '\n';
        return kExitOk;
    }
    bool first = true;
    enumerate_cacti(
        spec,
        [&](const Graph& g) {
            if (!first)
                std::cout << '\n';
            first = false;
            write_edge_list(std::cout, g);
        },
        opt.jobs);
    return kExitOk;
}

struct VerifyOpts {
    int max_n = 8;
    int trials = 1000;
    std::uint64_t seed = 1;
    int jobs = 1;
    int guard = kDefaultEnumerationGuard;
    std::string report;  // empty -> stdout
    std::string format = "text";
};

std::string verification_to_text(const std::vector<ExtremalRecord>& records,
                                 const std::vector<LemmaReport>& lemmas) {
    std::ostringstream out;
    for (const auto& r : records) {
        out << "n=" << r.n << " k=" << r.k << " bound_max=" << r.bound_max
            << " bound_min=" << r.bound_min;
        out << " observed_max=";
        if (r.observed_max)
            out << *r.observed_max;
        else
            out << "none";
        out << " observed_min=";
        if (r.observed_min)
            out << *r.observed_min;
        else
            out << "none";
        out << " max_attained=" << (r.max_attained ? "yes" : "no")
            << " min_attained=" << (r.min_attained ? "yes" : "no")
            << " characterization=" << (r.characterization_ok ? "ok" : "FAIL");
        if (!r.max_achievers.empty())
            out << " max_achievers=" << detail::join(r.max_achievers, ';');
        if (!r.min_achievers.empty())
            out << " min_achievers=" << detail::join(r.min_achievers, ';');
        if (!r.excluded_max.empty())
            out << " excluded_max=" << detail::join(r.excluded_max, ';');
        if (!r.excluded_min.empty())
            out << " excluded_min=" << detail::join(r.excluded_min, ';');
        if (!r.violations.empty())
            out << " violations=" << detail::join(r.violations, ';');
        out << '\n';
    }
    for (const auto& l : lemmas) {
        out << l.lemma << ": instances=" << l.instances << " violations=" << l.violations.size()
            << '\n';
        for (const auto& v : l.violations)
            out << "  " << v.certificate << ' ' << v.detail << '\n';
    }
    return out.str();
}

int run_verify(const VerifyOpts& opt) {
    auto records = extremal_sweep({.n_max = opt.max_n, .jobs = opt.jobs, .guard = opt.guard});
    std::vector<LemmaReport> lemmas{lemma1_sweep(opt.max_n, opt.guard),
                                    lemma2_sweep(opt.max_n, opt.trials, opt.seed, opt.guard)};

    std::string doc;
    if (opt.format == "json")
        doc = verification_to_json(records, lemmas).dump(2) + "\n";
    else if (opt.format == "csv")
        doc = verification_to_csv(records, lemmas);
    else
        doc = verification_to_text(records, lemmas);
    if (opt.report.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(opt.report);
        if (!out)
            throw input_error("cannot open " + opt.report);
        out << doc;
    }

    std::int64_t bound_violations = 0;
    for (const auto& r : records)
        bound_violations += static_cast<std::int64_t>(r.violations.size());
    std::int64_t lemma_violations = 0;
    for (const auto& l : lemmas)
        lemma_violations += static_cast<std::int64_t>(l.violations.size());
    std::cerr << "summary: records=" << records.size() << " bound_violations=" << bound_violations
              << " lemma_violations=" << lemma_violations << '\n';
    return bound_violations + lemma_violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-based topological indices and extremal cactus tooling"};
    app.require_subcommand(1);

    ComputeOpts compute_opts;
    auto* compute = app.add_subcommand("compute", "compute indices of one connected graph");
    compute->add_option("input", compute_opts.input, "input path, or - for stdin")->required();
    compute->add_option("--format", compute_opts.format, "input format")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    compute->add_option("--indices", compute_opts.indices, "subset of indices to print")
        ->delimiter(',')
        ->check(CLI::IsMember({"pi", "pi_edge", "wiener", "szeged"}));
    compute->add_flag("--all", compute_opts.all, "print all four indices");
    compute->add_option("--output", compute_opts.output, "output form")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    BoundsOpts bounds_opts;
    auto* bounds = app.add_subcommand("bounds", "print extremal bounds for the (n, k) class");
    bounds->add_option("n", bounds_opts.n, "vertex count")->required();
    bounds->add_option("k", bounds_opts.k, "pendant vertex count")->required();
    bounds->add_option("--output", bounds_opts.output, "output form")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    ConstructOpts construct_opts;
    auto* construct =
        app.add_subcommand("construct", "build an extremal witness for the (n, k) class");
    construct->add_option("n", construct_opts.n, "vertex count")->required();
    construct->add_option("k", construct_opts.k, "pendant vertex count")->required();
    construct->add_option("direction", construct_opts.direction, "max or min")
        ->required()
        ->check(CLI::IsMember({"max", "min"}));
    construct->add_option("output", construct_opts.output, "edge list path; stdout if omitted");

    EnumerateOpts enumerate_opts;
    auto* enumerate =
        app.add_subcommand("enumerate", "stream all cacti of one order, one per class");
    enumerate->add_option("n", enumerate_opts.n, "vertex count")->required();
    enumerate->add_option("--k", enumerate_opts.k, "keep only graphs with k pendant vertices");
    enumerate->add_flag("--count", enumerate_opts.count_only, "print the class count only");
    enumerate->add_option("--guard", enumerate_opts.guard, "largest order to accept");
    enumerate->add_option("--jobs", enumerate_opts.jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "sweep all classes and check bounds and lemmas");
    verify->add_option("--max-n", verify_opts.max_n, "largest order to sweep");
    verify->add_option("--trials", verify_opts.trials, "rewrite trials for the invariance check");
    verify->add_option("--seed", verify_opts.seed, "seed for rewrite sampling");
    verify->add_option("--jobs", verify_opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--guard", verify_opts.guard, "largest order to accept");
    verify->add_option("--report", verify_opts.report, "report path; stdout if omitted");
    verify->add_option("--report-format", verify_opts.format, "report form")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute)
            return run_compute(compute_opts);
        if (*bounds)
            return run_bounds(bounds_opts);
        if (*construct)
            return run_construct(construct_opts);
        if (*enumerate)
            return run_enumerate(enumerate_opts);
        return run_verify(verify_opts);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
