// csp command line front end: exact/PTAS solving, reoptimization under
// sequence addition, benchmark suites, and property verification.
//
// Exit codes: 0 ok, 1 property failure, 2 input error, 3 budget exceeded,
// 4 opt-verification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "csp/bench.hpp"
#include "csp/errors.hpp"
#include "csp/exact.hpp"
#include "csp/gen_io.hpp"
#include "csp/ptas.hpp"
#include "csp/reduction.hpp"
#include "csp/reopt.hpp"
#include "csp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;
constexpr int kExitOptVerification = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

std::uint64_t budget_from_env() {
    if (const char* env = std::getenv("CSP_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("CSP_BUDGET must be a positive integer");
    }
    return csp::kDefaultBudget;
}

struct SolveArgs {
    std::string input;
    std::string method = "exact";
    int r = 0;
    std::string samples = "distinct-seq";
    bool prune = false;
    bool fasta = false;
    int jobs = 1;
    std::string out;
};

int run_solve(const SolveArgs& args) {
    const csp::Instance inst =
        csp::parse_instance(read_file(args.input), csp::ParseOptions{args.fasta});
    const csp::ExactOptions exact_opts{budget_from_env(), args.jobs, args.prune};

    csp::CostedSolution costed;
    std::uint64_t samples = 0;
    const std::uint64_t start = now_ns();
    if (args.method == "exact") {
        const csp::ExactResult res = csp::solve_exact_tuples(inst, exact_opts);
        costed = res.costed;
        samples = res.nodes_explored;
    } else if (args.method == "exact-patterns") {
        const csp::ExactResult res = csp::solve_exact_patterns(inst, exact_opts);
        costed = res.costed;
        samples = res.nodes_explored;
    } else {
        if (args.r < 1) throw std::invalid_argument("--method ptas requires --r");
        const csp::SampleMode mode = args.samples == "multiset"
                                         ? csp::SampleMode::kWindowMultiset
                                         : csp::SampleMode::kDistinctSequences;
        const csp::PtasResult res = csp::ptas_solve(inst, args.r, csp::PtasOptions{mode, args.jobs});
        costed = res.costed;
        samples = res.samples_examined;
    }
    const std::uint64_t elapsed = now_ns() - start;

    if (!args.out.empty()) write_file(args.out, csp::serialize_solution(costed));
    std::cout << args.method << ' ' << costed.cost << ' ' << costed.consensus << ' ' << elapsed
              << ' ' << samples << '\n';
    return kExitOk;
}

struct ReoptArgs {
    std::string base;
    std::string added;
    std::string opt;
    std::string method = "k-best-align";
    bool no_verify_opt = false;
    bool fasta = false;
    int jobs = 1;
    std::string out;
};

int run_reopt(const ReoptArgs& args) {
    const csp::ParseOptions parse_opts{args.fasta};
    const csp::Instance base = csp::parse_instance(read_file(args.base), parse_opts);
    const csp::Instance added = csp::parse_instance(read_file(args.added), parse_opts);
    if (added.l() != base.l())
        throw std::invalid_argument("added file must declare the same l as the base file");
    const csp::CostedSolution base_opt =
        csp::bind_solution(base, csp::parse_solution(read_file(args.opt)));

    csp::ReoptInput input{csp::ModifiedInstance(base, added.sequences()), base_opt};
    const csp::ExactOptions exact_opts{budget_from_env(), args.jobs, false};
    if (!args.no_verify_opt) csp::verify_base_opt(input, exact_opts);

    csp::CostedSolution costed;
    std::uint64_t candidates = static_cast<std::uint64_t>(input.modified.k());
    std::string branch_line;
    const std::uint64_t start = now_ns();
    if (args.method == "best-align") {
        costed = csp::best_align(input);
    } else if (args.method == "k-best-align") {
        costed = csp::k_best_align(input);
    } else {
        const csp::ReoptPtasResult res = csp::reopt_ptas(input, csp::ReoptOptions{args.jobs});
        costed = res.chosen;
        candidates = res.candidates;
        branch_line = std::string("branch ") +
                      (res.branch == csp::ReoptBranch::kGreedyExtension ? "SOL_A" : "SOL_B") +
                      " cost_a " + std::to_string(res.extension_cost) + " cost_a_realigned " +
                      std::to_string(res.extension_realigned_cost) + " cost_b " +
                      std::to_string(res.sampled_cost);
    }
    const std::uint64_t elapsed = now_ns() - start;

    if (!args.out.empty()) write_file(args.out, csp::serialize_solution(costed));
    std::cout << args.method << ' ' << costed.cost << ' ' << costed.consensus << ' ' << elapsed
              << ' ' << candidates << '\n';
    if (!branch_line.empty()) std::cout << branch_line << '\n';
    try {
        const csp::GapReport gap = csp::additive_gap(input, costed, exact_opts);
        std::cout << "gap " << gap.gap << " bound " << gap.bound << '\n';
    } catch (const csp::BudgetExceeded&) {
        std::cout << "gap NA bound " << input.modified.k() * base.l() << '\n';
    }
    return kExitOk;
}

struct BenchArgs {
    std::string suite;
    csp::BenchConfig cfg;
    std::string out;
};

int run_bench(const BenchArgs& args) {
    csp::BenchConfig cfg = args.cfg;
    cfg.budget = budget_from_env();
    csp::BenchOutput result;
    if (args.suite == "reopt-vs-scratch") {
        result = csp::bench_reopt_vs_scratch(cfg);
    } else if (args.suite == "error-growth") {
        result = csp::bench_error_growth(cfg);
    } else {
        result = csp::bench_ratio_sweep(cfg);
    }
    std::string csv = csp::csv_header() + '\n';
    for (const auto& rec : result.rows) csv += csp::to_csv_row(rec) + '\n';
    write_file(args.out, csv);
    std::cout << result.summary;
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    csp::VerifyConfig cfg;
};

int run_verify(const VerifyArgs& args) {
    csp::VerifyConfig cfg = args.cfg;
    cfg.budget = budget_from_env();
    std::vector<csp::PropertyResult> results;
    if (args.suite == "oracles") {
        results = csp::verify_oracles(cfg);
    } else if (args.suite == "bounds") {
        results = csp::verify_bounds(cfg);
    } else if (args.suite == "self-reducibility") {
        results = csp::verify_self_reducibility(cfg);
    } else {
        results = csp::verify_all(cfg);
    }
    bool all_pass = true;
    for (const auto& res : results) {
        std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << " (" << res.detail << ")";
        if (!res.pass) std::cout << " -> " << res.counterexample;
        std::cout << '\n';
        all_pass = all_pass && res.pass;
    }
    return all_pass ? kExitOk : kExitPropertyFailure;
}

struct GraphArgs {
    std::string input;
    bool fasta = false;
    std::string out;
};

int run_graph(const GraphArgs& args) {
    const csp::Instance inst =
        csp::parse_instance(read_file(args.input), csp::ParseOptions{args.fasta});
    const csp::TPartiteGraph graph = csp::TPartiteGraph::build(inst);
    const std::string edges = graph.dump_edges();
    if (args.out.empty()) {
        std::cout << edges;
        return kExitOk;
    }
    write_file(args.out, edges);
    // the two objectives side by side: sum-of-pairs clique weight vs the
    // consensus cost of the exact optimum (they are related, not equal)
    const csp::ExactOptions opts{budget_from_env(), 1, false};
    try {
        std::cout << "min_clique_weight " << csp::min_weight_clique(graph, opts).weight
                  << " exact_consensus_cost " << csp::solve_exact_auto(inst, opts).costed.cost
                  << '\n';
    } catch (const csp::BudgetExceeded&) {
        std::cout << "min_clique_weight NA exact_consensus_cost NA\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closest substring problem: exact oracles, sampling PTAS, reoptimization"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--input", solve_args.input, "instance file")->required();
    solve->add_option("--method", solve_args.method)
        ->check(CLI::IsMember({"exact", "exact-patterns", "ptas"}));
    solve->add_option("--r", solve_args.r, "sampling size for ptas");
    solve->add_option("--samples", solve_args.samples)
        ->check(CLI::IsMember({"distinct-seq", "multiset"}));
    solve->add_flag("--prune", solve_args.prune, "branch-and-bound tuple sweep");
    solve->add_flag("--fasta", solve_args.fasta, "skip > header lines");
    solve->add_option("--jobs", solve_args.jobs)->check(CLI::PositiveNumber);
    solve->add_option("--out", solve_args.out, "solution file");

    ReoptArgs reopt_args;
    CLI::App* reopt = app.add_subcommand("reopt", "reoptimize after sequence addition");
    reopt->add_option("--base", reopt_args.base, "base instance file")->required();
    reopt->add_option("--added", reopt_args.added, "added sequences (instance format)")->required();
    reopt->add_option("--opt", reopt_args.opt, "optimal solution file for the base")->required();
    reopt->add_option("--method", reopt_args.method)
        ->check(CLI::IsMember({"best-align", "k-best-align", "reopt-ptas"}));
    reopt->add_flag("--no-verify-opt", reopt_args.no_verify_opt,
                    "accept the given solution without the optimality check");
    reopt->add_flag("--fasta", reopt_args.fasta);
    reopt->add_option("--jobs", reopt_args.jobs)->check(CLI::PositiveNumber);
    reopt->add_option("--out", reopt_args.out, "solution file");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "benchmark suites, CSV output");
    bench->add_option("--suite", bench_args.suite)
        ->required()
        ->check(CLI::IsMember({"reopt-vs-scratch", "error-growth", "ratio-sweep"}));
    bench->add_option("--seeds", bench_args.cfg.seeds)->check(CLI::PositiveNumber);
    bench->add_option("--seed0", bench_args.cfg.seed0);
    bench->add_option("--t", bench_args.cfg.t)->check(CLI::PositiveNumber);
    bench->add_option("--n", bench_args.cfg.n)->check(CLI::PositiveNumber);
    bench->add_option("--l", bench_args.cfg.l)->check(CLI::PositiveNumber);
    bench->add_option("--sigma", bench_args.cfg.sigma)->check(CLI::PositiveNumber);
    bench->add_option("--k", bench_args.cfg.k)->check(CLI::PositiveNumber);
    bench->add_option("--kmax", bench_args.cfg.kmax)->check(CLI::PositiveNumber);
    bench->add_option("--r", bench_args.cfg.r)->check(CLI::PositiveNumber);
    bench->add_option("--planted-d", bench_args.cfg.planted_d,
                      "error-growth: plant one motif per sequence, max d mutations")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--jobs", bench_args.cfg.jobs)->check(CLI::PositiveNumber);
    bench->add_option("--dump-dir", bench_args.cfg.dump_dir);
    bench->add_option("--out", bench_args.out, "CSV file")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the module property suites");
    verify->add_option("--suite", verify_args.suite)
        ->check(CLI::IsMember({"all", "oracles", "bounds", "self-reducibility"}));
    verify->add_option("--seeds", verify_args.cfg.seeds)->check(CLI::PositiveNumber);
    verify->add_option("--seed0", verify_args.cfg.seed0);
    verify->add_option("--jobs", verify_args.cfg.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--dump-dir", verify_args.cfg.dump_dir);

    GraphArgs graph_args;
    CLI::App* graph = app.add_subcommand("graph", "dump the clique-reduction edge list");
    graph->add_option("--input", graph_args.input, "instance file")->required();
    graph->add_flag("--fasta", graph_args.fasta);
    graph->add_option("--out", graph_args.out, "edge list file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (reopt->parsed()) return run_reopt(reopt_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (graph->parsed()) return run_graph(graph_args);
    } catch (const csp::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const csp::OptVerificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOptVerification;
    } catch (const csp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
