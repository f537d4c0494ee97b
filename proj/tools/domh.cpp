#include <domh/bench.hpp>
#include <domh/encoders.hpp>
#include <domh/oracle.hpp>
#include <domh/ovgen.hpp>
#include <domh/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace domh;

namespace {

auto parse_format(const std::string & name) -> GraphFormat
{
    if (name == "edge-list")
        return GraphFormat::EdgeList;
    if (name == "dimacs")
        return GraphFormat::Dimacs;
    if (name == "graph6")
        return GraphFormat::Graph6;
    throw GraphFormatError("unknown graph format '" + name + "'");
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

auto write_output(const std::string & path, const std::string & text) -> void
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

auto split_list(const std::string & text) -> std::vector<std::string>
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (! item.empty())
            parts.push_back(item);
    return parts;
}

struct SolveArgs {
    std::string graph;
    std::string pattern;
    std::string solver = "auto";
    std::string format = "auto";
    int64_t timeout_ms = 300000;
    bool no_scatter_prune = false;
    bool stats = false;
};

auto cmd_solve(const SolveArgs & args) -> int
{
    Graph g = args.format == "auto"
        ? load_graph_file(args.graph)
        : load_graph_file(args.graph, parse_format(args.format));
    PatternSpec h = parse_pattern(args.pattern);
    SolverConfig cfg;
    cfg.timeout_ms = args.timeout_ms;
    cfg.scatter_prune = ! args.no_scatter_prune;
    SolveOutcome out = run_solver(parse_solver(args.solver), g, h, cfg);
    if (args.stats) {
        std::cerr << "nodes=" << out.stats.nodes << " max_depth=" << out.stats.max_depth
                  << " time_ms=" << out.stats.wall_ms << "\n";
    }
    switch (out.status) {
    case SolveStatus::Found: {
        std::string reason;
        if (! verify_solution(g, h, out.witness, &reason))
            throw std::logic_error("witness failed verification: " + reason);
        std::cout << "YES\n";
        for (size_t i = 0; i < out.witness.size(); ++i)
            std::cout << out.witness[i] << (i + 1 == out.witness.size() ? "\n" : " ");
        return 0;
    }
    case SolveStatus::NotFound:
        std::cout << "NO\n";
        return 0;
    case SolveStatus::Timeout:
        std::cout << "TIMEOUT\n";
        return 2;
    }
    return 1;
}

struct EncodeArgs {
    std::string graph;
    std::string pattern;
    std::string format;
    std::string graph_format = "auto";
    std::string out;
};

auto cmd_encode(const EncodeArgs & args) -> int
{
    Graph g = args.graph_format == "auto"
        ? load_graph_file(args.graph)
        : load_graph_file(args.graph, parse_format(args.graph_format));
    PatternSpec h = parse_pattern(args.pattern);
    std::string text;
    if (args.format == "cnf" || args.format == "cnf-ladder") {
        auto mode = args.format == "cnf" ? SatMode::Pairwise : SatMode::Ladder;
        auto [f, vm] = encode_sat(g, h, mode);
        text = write_dimacs(f, vm);
    }
    else if (args.format == "lp") {
        auto [m, vm] = encode_ilp(g, h);
        (void)vm;
        text = write_lp(m);
    }
    else {
        throw std::runtime_error("unknown encode format '" + args.format + "'");
    }
    write_output(args.out, text);
    return 0;
}

struct GenOvArgs {
    int k = 6;
    int set_size = 45;
    double p = 0.75;
    uint64_t seed = 1;
    std::string target;
    std::string out;
};

auto cmd_gen_ov(const GenOvArgs & args) -> int
{
    OvTarget target;
    if (args.target == "yes")
        target = OvTarget::Yes;
    else if (args.target == "no")
        target = OvTarget::No;
    else
        throw std::runtime_error("--target must be yes or no");
    OvInstance inst = gen_ov(args.k, args.set_size, args.p, args.seed, target);
    write_output(args.out, write_ov(inst));
    return 0;
}

struct BenchArgs {
    std::string manifest;
    std::string pattern;
    std::string solvers;
    std::vector<std::string> external;
    std::string out;
    int64_t timeout_ms = 300000;
    int jobs = 1;
    bool no_scatter_prune = false;
};

auto cmd_bench(const BenchArgs & args) -> int
{
    std::vector<std::string> manifest = load_manifest(read_file(args.manifest));
    std::vector<BenchSolver> solvers;
    for (const auto & name : split_list(args.solvers))
        solvers.push_back(BenchSolver{name, parse_solver(name)});
    for (const auto & spec : args.external) {
        if (spec.rfind("cnf:", 0) == 0) {
            solvers.push_back(BenchSolver{"external-cnf", SolverChoice::Auto,
                BenchSolver::External::Cnf, spec.substr(4)});
        }
        else if (spec.rfind("lp:", 0) == 0) {
            solvers.push_back(BenchSolver{"external-lp", SolverChoice::Auto,
                BenchSolver::External::Lp, spec.substr(3)});
        }
        else {
            throw std::runtime_error("--external expects cnf:<command> or lp:<command>");
        }
    }
    if (solvers.empty())
        throw std::runtime_error("no solvers given");
    BenchOptions opts;
    opts.timeout_ms = args.timeout_ms;
    opts.jobs = args.jobs;
    opts.scatter_prune = ! args.no_scatter_prune;
    auto records = run_bench(manifest, args.pattern, solvers, opts);
    write_output(args.out, render_csv(records, args.timeout_ms));
    return 0;
}

struct CountArgs {
    std::string graph;
    std::string pattern;
    std::string format = "auto";
    int64_t timeout_ms = -1;
};

auto cmd_count(const CountArgs & args) -> int
{
    Graph g = args.format == "auto"
        ? load_graph_file(args.graph)
        : load_graph_file(args.graph, parse_format(args.format));
    PatternSpec h = parse_pattern(args.pattern);
    OccurrenceCounts counts = count_occurrences(g, h, args.timeout_ms);
    if (counts.timed_out) {
        std::cout << "TIMEOUT\n";
        return 2;
    }
    std::cout << "occurrences " << counts.occurrences << "\n";
    std::cout << "dominating " << counts.dominating << "\n";
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"dominating induced pattern solvers"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto * solve = app.add_subcommand("solve", "decide one instance");
    solve->add_option("--graph", solve_args.graph, "host graph file")->required();
    solve->add_option("--pattern", solve_args.pattern, "M<k>, C<k>, P<k>, or @<file>")->required();
    solve->add_option("--solver", solve_args.solver, "auto|proto|matching|cycle|path|oracle");
    solve->add_option("--timeout", solve_args.timeout_ms, "time budget in ms");
    solve->add_option("--format", solve_args.format, "auto|edge-list|dimacs|graph6");
    solve->add_flag("--no-scatter-prune", solve_args.no_scatter_prune,
        "disable the scattered-set lower bound");
    solve->add_flag("--stats", solve_args.stats, "print search stats to stderr");

    EncodeArgs encode_args;
    auto * encode = app.add_subcommand("encode", "emit the instance as CNF or LP");
    encode->add_option("--graph", encode_args.graph, "host graph file")->required();
    encode->add_option("--pattern", encode_args.pattern, "M<k>, C<k>, P<k>, or @<file>")->required();
    encode->add_option("--format", encode_args.format, "cnf|cnf-ladder|lp")->required();
    encode->add_option("--graph-format", encode_args.graph_format, "auto|edge-list|dimacs|graph6");
    encode->add_option("--out", encode_args.out, "output file (default stdout)");

    GenOvArgs gen_args;
    auto * gen = app.add_subcommand("gen-ov", "generate a certified orthogonal-vectors instance");
    gen->add_option("--k", gen_args.k, "number of vector sets");
    gen->add_option("--set-size", gen_args.set_size, "vectors per set");
    gen->add_option("--p", gen_args.p, "per-bit one probability");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--target", gen_args.target, "yes|no")->required();
    gen->add_option("--out", gen_args.out, "output file (default stdout)");

    BenchArgs bench_args;
    auto * bench = app.add_subcommand("bench", "run solvers over a manifest of graphs");
    bench->add_option("--manifest", bench_args.manifest, "file with one graph path per line")->required();
    bench->add_option("--pattern", bench_args.pattern, "M<k>, C<k>, P<k>, or @<file>")->required();
    bench->add_option("--solvers", bench_args.solvers, "comma list of solver names")->required();
    bench->add_option("--external", bench_args.external,
        "external runner, cnf:<command> or lp:<command> (repeatable)");
    bench->add_option("--out", bench_args.out, "CSV output file (default stdout)");
    bench->add_option("--timeout", bench_args.timeout_ms, "per-cell budget in ms");
    bench->add_option("--jobs", bench_args.jobs, "concurrent cells");
    bench->add_flag("--no-scatter-prune", bench_args.no_scatter_prune,
        "disable the scattered-set lower bound");

    CountArgs count_args;
    auto * count = app.add_subcommand("count", "count pattern occurrences and dominating ones");
    count->add_option("--graph", count_args.graph, "host graph file")->required();
    count->add_option("--pattern", count_args.pattern, "M<k>, C<k>, P<k>, or @<file>")->required();
    count->add_option("--format", count_args.format, "auto|edge-list|dimacs|graph6");
    count->add_option("--timeout", count_args.timeout_ms, "time budget in ms, -1 for none");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_args);
        if (encode->parsed())
            return cmd_encode(encode_args);
        if (gen->parsed())
            return cmd_gen_ov(gen_args);
        if (bench->parsed())
            return cmd_bench(bench_args);
        if (count->parsed())
            return cmd_count(count_args);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
