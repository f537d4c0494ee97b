#include <domh/bench.hpp>

#include <domh/encoders.hpp>
#include <domh/verify.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <unistd.h>

using std::string;
using std::vector;

namespace domh {

namespace {

auto run_command_capture(const string & command, string & output) -> bool
{
    output.clear();
    FILE * pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (! pipe)
        return false;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, got);
    pclose(pipe);
    return true;
}

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const char * suffix)
    {
        static std::atomic<uint64_t> counter{0};
        path = std::filesystem::temp_directory_path() /
            ("domh-" + std::to_string(getpid()) + "-" +
                std::to_string(counter.fetch_add(1)) + suffix);
    }

    ~TempFile()
    {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

/// SAT-competition output: an "s SATISFIABLE" / "s UNSATISFIABLE" line,
/// models on "v" lines as 0-terminated literal lists.
auto run_external_cnf(const Graph & g, const PatternSpec & h, const string & command)
    -> string
{
    auto [f, vm] = encode_sat(g, h, SatMode::Pairwise);
    TempFile tmp{".cnf"};
    {
        std::ofstream out(tmp.path);
        out << write_dimacs(f, vm);
    }
    string output;
    if (! run_command_capture(command + " " + tmp.path.string(), output))
        return "error";

    std::istringstream in(output);
    string line;
    std::optional<bool> sat;
    vector<uint8_t> model(size_t(f.num_vars) + 1, 0);
    while (std::getline(in, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != string::npos)
                sat = false;
            else if (line.find("SATISFIABLE") != string::npos)
                sat = true;
        }
        else if (line.rfind("v", 0) == 0) {
            std::istringstream lits(line.substr(1));
            long long lit;
            while (lits >> lit) {
                long long v = lit > 0 ? lit : -lit;
                if (v >= 1 && v <= f.num_vars)
                    model[size_t(v)] = lit > 0;
            }
        }
    }
    if (! sat)
        return "error";
    if (! *sat)
        return "no";
    auto decoded = decode_model(vm, model);
    if (! decoded || ! verify_solution(g, h, *decoded))
        return "error";
    return "yes";
}

/// LP runner contract: the command gets the model file path as its one
/// argument and prints either a line starting with "infeasible", or one
/// "name value" pair per line for a feasible assignment.
auto run_external_lp(const Graph & g, const PatternSpec & h, const string & command)
    -> string
{
    auto [m, vm] = encode_ilp(g, h);
    TempFile tmp{".lp"};
    {
        std::ofstream out(tmp.path);
        out << write_lp(m);
    }
    string output;
    if (! run_command_capture(command + " " + tmp.path.string(), output))
        return "error";

    std::istringstream in(output);
    string line;
    vector<int> witness(size_t(vm.k), -1);
    bool any = false;
    while (std::getline(in, line)) {
        if (line.rfind("infeasible", 0) == 0)
            return "no";
        std::istringstream fields(line);
        string name;
        double value = 0.0;
        if (! (fields >> name >> value))
            continue;
        int v = -1, p = -1;
        if (std::sscanf(name.c_str(), "x_%d_%d", &v, &p) != 2)
            continue;
        if (v < 0 || v >= vm.n || p < 0 || p >= vm.k)
            return "error";
        any = true;
        if (value >= 0.5) {
            if (witness[size_t(p)] >= 0)
                return "error";
            witness[size_t(p)] = v;
        }
    }
    if (! any)
        return "error";
    for (int v : witness)
        if (v < 0)
            return "error";
    if (! verify_solution(g, h, witness))
        return "error";
    return "yes";
}

auto run_cell(const Graph & g, const PatternSpec & h, const BenchSolver & bs,
    const BenchOptions & opts, BenchRecord & rec) -> void
{
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    try {
        if (bs.external == BenchSolver::External::None) {
            SolverConfig cfg;
            cfg.timeout_ms = opts.timeout_ms;
            cfg.scatter_prune = opts.scatter_prune;
            SolveOutcome out = run_solver(bs.choice, g, h, cfg);
            rec.time_ms = out.stats.wall_ms;
            rec.nodes = out.stats.nodes;
            switch (out.status) {
            case SolveStatus::Found: {
                string reason;
                if (! verify_solution(g, h, out.witness, &reason))
                    throw std::logic_error("witness failed verification: " + reason);
                rec.result = "yes";
                break;
            }
            case SolveStatus::NotFound:
                rec.result = "no";
                break;
            case SolveStatus::Timeout:
                rec.result = "timeout";
                break;
            }
            return;
        }
        string result = bs.external == BenchSolver::External::Cnf
            ? run_external_cnf(g, h, bs.command)
            : run_external_lp(g, h, bs.command);
        rec.time_ms = elapsed();
        rec.nodes = 0;
        // externals are not interruptible; past the budget they count as
        // timed out even when they answered
        if (result != "error" && rec.time_ms >= double(opts.timeout_ms))
            result = "timeout";
        rec.result = result;
    }
    catch (const std::exception &) {
        rec.time_ms = elapsed();
        rec.nodes = 0;
        rec.result = "error";
    }
}

} // namespace

auto run_bench(const vector<string> & manifest, const string & pattern_spec,
    const vector<BenchSolver> & solvers, const BenchOptions & opts) -> vector<BenchRecord>
{
    PatternSpec h = parse_pattern(pattern_spec);
    for (const auto & bs : solvers) {
        if (bs.external == BenchSolver::External::None && ! solver_accepts(bs.choice, h))
            throw PatternError(
                "solver '" + bs.name + "' cannot run pattern " + h.name());
    }

    vector<std::optional<Graph>> graphs(manifest.size());
    for (size_t i = 0; i < manifest.size(); ++i) {
        try {
            graphs[i] = load_graph_file(manifest[i]);
        }
        catch (const std::exception &) {
            graphs[i] = std::nullopt;
        }
    }

    size_t cols = solvers.size();
    vector<BenchRecord> records(manifest.size() * cols);
    for (size_t i = 0; i < manifest.size(); ++i) {
        for (size_t j = 0; j < cols; ++j) {
            BenchRecord & rec = records[i * cols + j];
            rec.instance = manifest[i];
            rec.solver = solvers[j].name;
            rec.pattern = pattern_spec;
            rec.result = "error";
        }
    }

    auto work = [&](size_t cell) {
        size_t i = cell / cols;
        size_t j = cell % cols;
        if (! graphs[i])
            return; // error row already in place
        run_cell(*graphs[i], h, solvers[j], opts, records[cell]);
    };

    size_t cells = records.size();
    int jobs = std::max(1, opts.jobs);
    if (jobs <= 1 || cells <= 1) {
        for (size_t cell = 0; cell < cells; ++cell)
            work(cell);
        return records;
    }
    std::atomic<size_t> next{0};
    vector<std::thread> pool;
    size_t threads = std::min(size_t(jobs), cells);
    for (size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t cell = next.fetch_add(1);
                if (cell >= cells)
                    return;
                work(cell);
            }
        });
    }
    for (auto & th : pool)
        th.join();
    return records;
}

namespace {

auto format_ms(double ms) -> string
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

auto format_summary_ms(double ms, int64_t timeout_ms) -> string
{
    if (ms >= double(timeout_ms))
        return "TO";
    return format_ms(ms);
}

} // namespace

auto render_csv(const vector<BenchRecord> & records, int64_t timeout_ms) -> string
{
    std::ostringstream out;
    out << "instance,solver,pattern,result,time_ms,nodes\n";
    for (const auto & rec : records) {
        out << rec.instance << "," << rec.solver << "," << rec.pattern << ","
            << rec.result << "," << format_ms(rec.time_ms) << "," << rec.nodes << "\n";
    }

    vector<string> order;
    for (const auto & rec : records)
        if (std::find(order.begin(), order.end(), rec.solver) == order.end())
            order.push_back(rec.solver);

    for (const auto & solver : order) {
        vector<string> groups = {"yes", "no"};
        for (const char * extra : {"timeout", "error"}) {
            for (const auto & rec : records) {
                if (rec.solver == solver && rec.result == extra) {
                    groups.push_back(extra);
                    break;
                }
            }
        }
        for (const auto & group : groups) {
            vector<double> times;
            for (const auto & rec : records)
                if (rec.solver == solver && rec.result == group)
                    times.push_back(rec.time_ms);
            out << "# solver " << solver << ": " << group << " count=" << times.size();
            if (times.empty()) {
                out << " median=- min=- max=-\n";
                continue;
            }
            std::sort(times.begin(), times.end());
            size_t c = times.size();
            double median = c % 2 == 1 ? times[c / 2] : (times[c / 2 - 1] + times[c / 2]) / 2.0;
            out << " median=" << format_summary_ms(median, timeout_ms)
                << " min=" << format_summary_ms(times.front(), timeout_ms)
                << " max=" << format_summary_ms(times.back(), timeout_ms) << "\n";
        }
    }
    return out.str();
}

auto load_manifest(const string & text) -> vector<string>
{
    vector<string> paths;
    std::istringstream in(text);
    string line;
    while (std::getline(in, line)) {
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == string::npos)
            continue;
        size_t end = line.find_last_not_of(" \t\r");
        string trimmed = line.substr(begin, end - begin + 1);
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        paths.push_back(trimmed);
    }
    return paths;
}

} // namespace domh
