#pragma once

#include <domh/dispatch.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace domh {

/// One benchmark column: an in-process solver, or an external command fed
/// an encoded instance file (see the README for the output each external
/// runner must produce).
struct BenchSolver {
    enum class External {
        None,
        Cnf, // command gets a DIMACS file, answers in SAT-competition form
        Lp   // command gets an LP file, prints "name value" lines or "infeasible"
    };

    std::string name;
    SolverChoice choice = SolverChoice::Auto;
    External external = External::None;
    std::string command;
};

struct BenchRecord {
    std::string instance;
    std::string solver;
    std::string pattern;
    std::string result; // yes | no | timeout | error
    double time_ms = 0.0;
    uint64_t nodes = 0;
};

struct BenchOptions {
    int64_t timeout_ms = 300000;
    int jobs = 1;
    bool scatter_prune = true;
};

/// One record per (manifest instance, solver), instances outermost in
/// manifest order, solvers in list order. Graphs are loaded up front;
/// unreadable ones yield result=error rows and the run continues, as do
/// solver exceptions. Every yes witness is re-verified before being
/// recorded. Cells may run on opts.jobs threads; record order is fixed
/// either way.
std::vector<BenchRecord> run_bench(const std::vector<std::string> & manifest,
    const std::string & pattern_spec, const std::vector<BenchSolver> & solvers,
    const BenchOptions & opts);

/// CSV header and data rows, then per solver (first-appearance order) a
/// block of "# solver <name>: <group> ..." lines: yes and no groups
/// always, timeout and error only when nonempty, each with count and the
/// median/min/max wall time. Median of an even count is the mean of the
/// middle pair. Summary times print with three decimals, or "TO" at or
/// above the timeout.
std::string render_csv(const std::vector<BenchRecord> & records, int64_t timeout_ms);

/// One graph path per line; blank lines and '#' comments are skipped.
std::vector<std::string> load_manifest(const std::string & text);

} // namespace domh
