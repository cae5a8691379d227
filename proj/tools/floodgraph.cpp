// floodgraph: command-line front end over the floodit C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "floodit/floodit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
    void operator()(fl_graph* g) const { fl_graph_free(g); }
};
struct ResultDeleter {
    void operator()(fl_result* r) const { fl_result_free(r); }
};
struct ReportDeleter {
    void operator()(fl_report* r) const { fl_report_free(r); }
};
using GraphPtr = std::unique_ptr<fl_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<fl_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<fl_report, ReportDeleter>;

// Raised on a failed library call; carries the message for stderr.
struct Failure {
    std::string message;
};

// A flag combination the parser cannot express.
struct Usage {
    std::string message;
};

void check(fl_status status) {
    if (status != FL_OK)
        throw Failure{std::string(fl_status_name(status)) + ": " + fl_last_error()};
}

std::string take(char* s) {
    std::string out(s);
    fl_string_free(s);
    return out;
}

GraphPtr load(const std::string& path) {
    fl_graph* g = nullptr;
    check(fl_graph_load(path.c_str(), &g));
    return GraphPtr(g);
}

struct SolveArgs {
    std::string variant;
    std::string file;
    std::optional<std::uint32_t> target;
    std::optional<std::uint32_t> root;
    std::vector<std::uint32_t> terminals;
    std::size_t k_limit = 4;
    std::size_t budget = 0;
    bool machine = false;
};

std::int64_t target_of(const SolveArgs& a) { return a.target ? static_cast<std::int64_t>(*a.target) : FL_TARGET_ANY; }

void print_result(const fl_result* r, const std::string& instance, bool machine) {
    if (machine) {
        char* json = nullptr;
        check(fl_result_record(r, instance.c_str(), &json));
        std::cout << take(json) << '\n';
        return;
    }
    std::cout << "instance: " << instance << '\n';
    std::cout << "variant: " << fl_result_variant(r) << " (" << fl_result_method(r) << ")\n";
    std::cout << "per-colour:";
    for (std::uint32_t d = 0; d < fl_result_colour_count(r); ++d) {
        const auto v = fl_result_per_colour(r, d);
        std::cout << ' ' << d << '=' << (v < 0 ? std::string("unreachable") : std::to_string(v));
    }
    std::cout << '\n';
    std::cout << "overall: " << fl_result_overall(r) << '\n';
    std::cout << "value: " << fl_result_value(r) << '\n';
    if (const auto n = fl_result_witness_length(r); n > 0) {
        std::cout << "witness:";
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t v = 0, c = 0;
            check(fl_result_witness_move(r, i, &v, &c));
            std::cout << " (" << v << ',' << c << ')';
        }
        std::cout << '\n';
    }
    if (const auto n = fl_result_subgraph_count(r); n >= 0)
        std::cout << "subgraphs: " << n << '\n';
    if (const auto n = fl_result_state_count(r); n >= 0)
        std::cout << "states: " << n << '\n';
    std::cout << "wall-ms: " << fl_result_wall_ms(r) << '\n';
}

int run_solve(const SolveArgs& a, bool oracle) {
    const GraphPtr g = load(a.file);
    fl_result* raw = nullptr;
    if (a.variant == "free") {
        check(oracle ? fl_oracle_free(g.get(), target_of(a), a.budget, &raw) : fl_solve_free(g.get(), target_of(a), &raw));
    } else if (a.variant == "fixed") {
        if (!a.root)
            throw Usage{"fixed requires --root"};
        check(oracle ? fl_oracle_fixed(g.get(), *a.root, target_of(a), a.budget, &raw)
                     : fl_solve_fixed(g.get(), *a.root, target_of(a), &raw));
    } else {
        if (a.terminals.empty())
            throw Usage{"link requires --terminals"};
        check(oracle ? fl_oracle_link(g.get(), a.terminals.data(), a.terminals.size(), target_of(a), a.budget, &raw)
                     : fl_solve_link(g.get(), a.terminals.data(), a.terminals.size(), target_of(a), a.k_limit, &raw));
    }
    const ResultPtr r(raw);
    print_result(r.get(), a.file, a.machine);
    return kExitOk;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0, rows = 0, cols = 0, colours = 0, base_n = 4;
    std::vector<std::uint32_t> colour_list;
    std::string base = "complete";
    std::vector<std::size_t> subdivisions;
    double p = 0.3;
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenArgs& a) {
    fl_gen_params p;
    fl_gen_params_init(&p);
    p.kind = a.kind.c_str();
    p.n = a.n;
    p.rows = a.rows;
    p.cols = a.cols;
    p.colour_count = a.colours;
    p.colours = a.colour_list.data();
    p.colours_len = a.colour_list.size();
    p.base = a.base.c_str();
    p.base_n = a.base_n;
    p.subdivisions = a.subdivisions.data();
    p.subdivisions_len = a.subdivisions.size();
    p.edge_probability = a.p;
    p.seed = a.seed;
    fl_graph* raw = nullptr;
    check(fl_graph_generate(&p, &raw));
    const GraphPtr g(raw);
    char* text = nullptr;
    check(fl_graph_write(g.get(), &text));
    const std::string body = take(text);
    if (a.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(a.output, std::ios::binary);
        if (!(out << body))
            throw Failure{"cannot write " + a.output};
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    std::size_t max_n = 6, colours = 3, samples = 0, random = 0, budget = 0;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
    fl_verify_params p;
    fl_verify_params_init(&p);
    p.suite = a.suite.c_str();
    p.max_n = a.max_n;
    p.colours = a.colours;
    p.seed = a.seed;
    p.samples = a.samples;
    p.random = a.random;
    p.max_states = a.budget;
    fl_report* raw = nullptr;
    check(fl_verify(&p, &raw));
    const ReportPtr r(raw);
    std::cout << fl_report_summary(r.get()) << '\n';
    return fl_report_passed(r.get()) ? kExitOk : kExitFailure;
}

struct BenchArgs {
    std::string variant;
    std::string family = "cycle";
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::size_t colours = 4;
    std::uint32_t root = 0;
    bool machine = false;
};

GraphPtr bench_graph(const BenchArgs& a, std::size_t size) {
    fl_gen_params p;
    fl_gen_params_init(&p);
    p.kind = a.family.c_str();
    p.colour_count = a.colours;
    p.seed = a.seed;
    if (a.family == "grid") {
        p.rows = p.cols = size;
    } else if (a.family == "subdivision") {
        p.base = "complete";
        p.base_n = 4;
        p.subdivisions = &size;
        p.subdivisions_len = 1;
    } else {
        p.n = size;
    }
    fl_graph* raw = nullptr;
    check(fl_graph_generate(&p, &raw));
    return GraphPtr(raw);
}

int run_bench(const BenchArgs& a) {
    if (!a.machine)
        std::cout << "family\tsize\tn\tm\t" << (a.variant == "free" ? "subgraphs" : "states") << "\toverall\twall_ms\n";
    for (std::size_t size : a.sizes) {
        const GraphPtr g = bench_graph(a, size);
        fl_result* raw = nullptr;
        check(a.variant == "free" ? fl_solve_free(g.get(), FL_TARGET_ANY, &raw)
                                  : fl_solve_fixed(g.get(), a.root, FL_TARGET_ANY, &raw));
        const ResultPtr r(raw);
        const std::string instance = a.family + "-" + std::to_string(size);
        if (a.machine) {
            print_result(r.get(), instance, true);
            continue;
        }
        const auto count = a.variant == "free" ? fl_result_subgraph_count(r.get()) : fl_result_state_count(r.get());
        std::cout << a.family << '\t' << size << '\t' << fl_graph_vertex_count(g.get()) << '\t'
                  << fl_graph_edge_count(g.get()) << '\t' << count << '\t' << fl_result_overall(r.get()) << '\t'
                  << fl_result_wall_ms(r.get()) << '\n';
    }
    return kExitOk;
}

void add_solve_options(CLI::App* cmd, SolveArgs& a, bool oracle) {
    cmd->add_option("variant", a.variant, "free, fixed or link")
        ->required()
        ->check(CLI::IsMember({"free", "fixed", "link"}));
    cmd->add_option("file", a.file, "instance file")->required();
    cmd->add_option("--target", a.target, "target colour (default: any)");
    cmd->add_option("--root", a.root, "root vertex (fixed)");
    cmd->add_option("--terminals", a.terminals, "terminal vertices v1,v2,... (link)")->delimiter(',');
    cmd->add_option("--k-limit", a.k_limit, "largest terminal set the linking DP accepts")->capture_default_str();
    cmd->add_flag("--machine", a.machine, "print one JSON record");
    if (oracle)
        cmd->add_option("--budget", a.budget, "visited-state cap")->envname("FLOOD_ORACLE_BUDGET");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers and oracles for Flood-It on coloured graphs"};
    app.set_version_flag("--version", fl_version());
    app.require_subcommand(1);

    SolveArgs solve_args, oracle_args;
    auto* solve = app.add_subcommand("solve", "run a polynomial-time solver");
    add_solve_options(solve, solve_args, false);
    auto* oracle = app.add_subcommand("oracle", "run the exhaustive oracle");
    add_solve_options(oracle, oracle_args, true);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", gen_args.kind, "path, cycle, complete, grid, subdivision or random")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "grid", "subdivision", "random"}));
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--rows", gen_args.rows, "grid rows");
    gen->add_option("--cols", gen_args.cols, "grid columns");
    gen->add_option("--c", gen_args.colours, "colour count");
    gen->add_option("--colour-list", gen_args.colour_list, "explicit colouring c0,c1,...")->delimiter(',');
    gen->add_option("--base", gen_args.base, "subdivision base: path, cycle or complete")->capture_default_str();
    gen->add_option("--base-n", gen_args.base_n, "subdivision base order")->capture_default_str();
    gen->add_option("--subdiv", gen_args.subdivisions, "internal vertices per base edge")->delimiter(',');
    gen->add_option("--p", gen_args.p, "random: extra-edge probability")->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "random seed")->capture_default_str();
    gen->add_option("-o,--output", gen_args.output, "output file (default: stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", verify_args.suite)
        ->required()
        ->check(CLI::IsMember({"spanning-tree", "corollaries", "solver-free", "solver-fixed", "solver-link"}));
    verify->add_option("--max-n", verify_args.max_n, "largest order")->capture_default_str();
    verify->add_option("--colours", verify_args.colours, "colour count")->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "random seed")->capture_default_str();
    verify->add_option("--samples", verify_args.samples,
                       "colourings per graph, or configurations for corollaries (default 3 / 100)");
    verify->add_option("--random", verify_args.random, "extra random instances");
    verify->add_option("--budget", verify_args.budget, "visited-state cap")->envname("FLOOD_ORACLE_BUDGET");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time a solver over a graph family");
    bench->add_option("variant", bench_args.variant)->required()->check(CLI::IsMember({"free", "fixed"}));
    bench->add_option("--family", bench_args.family)
        ->check(CLI::IsMember({"cycle", "grid", "subdivision"}))
        ->capture_default_str();
    bench->add_option("--sizes", bench_args.sizes, "sizes s1,s2,...")->delimiter(',')->required();
    bench->add_option("--seed", bench_args.seed)->capture_default_str();
    bench->add_option("--colours", bench_args.colours)->capture_default_str();
    bench->add_option("--root", bench_args.root, "fixed root")->capture_default_str();
    bench->add_flag("--machine", bench_args.machine, "print JSON records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve)
            return run_solve(solve_args, false);
        if (*oracle)
            return run_solve(oracle_args, true);
        if (*gen)
            return run_gen(gen_args);
        if (*verify)
            return run_verify(verify_args);
        return run_bench(bench_args);
    } catch (const Usage& u) {
        std::cerr << u.message << "\nRun with --help for more information.\n";
        return kExitUsage;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return kExitFailure;
    }
}
