#include <domh/dispatch.hpp>

#include <domh/oracle.hpp>
#include <domh/solver_cycle.hpp>
#include <domh/solver_matching.hpp>
#include <domh/solver_path.hpp>
#include <domh/solver_proto.hpp>

namespace domh {

auto parse_solver(const std::string & name) -> SolverChoice
{
    if (name == "auto")
        return SolverChoice::Auto;
    if (name == "proto")
        return SolverChoice::Proto;
    if (name == "matching")
        return SolverChoice::Matching;
    if (name == "cycle")
        return SolverChoice::Cycle;
    if (name == "path")
        return SolverChoice::Path;
    if (name == "oracle")
        return SolverChoice::Oracle;
    throw PatternError("unknown solver '" + name + "'");
}

auto solver_name(SolverChoice choice) -> std::string
{
    switch (choice) {
    case SolverChoice::Auto: return "auto";
    case SolverChoice::Proto: return "proto";
    case SolverChoice::Matching: return "matching";
    case SolverChoice::Cycle: return "cycle";
    case SolverChoice::Path: return "path";
    case SolverChoice::Oracle: return "oracle";
    }
    return "?";
}

auto auto_solver(const PatternSpec & h) -> SolverChoice
{
    switch (h.kind) {
    case PatternKind::Matching: return SolverChoice::Matching;
    case PatternKind::Cycle: return SolverChoice::Cycle;
    case PatternKind::Path: return SolverChoice::Path;
    case PatternKind::Explicit: return SolverChoice::Proto;
    }
    return SolverChoice::Proto;
}

auto solver_accepts(SolverChoice choice, const PatternSpec & h) -> bool
{
    switch (choice) {
    case SolverChoice::Auto:
        return true;
    case SolverChoice::Matching:
        return h.kind == PatternKind::Matching;
    case SolverChoice::Cycle:
        return h.kind == PatternKind::Cycle;
    case SolverChoice::Path:
        return h.kind == PatternKind::Path;
    case SolverChoice::Proto:
    case SolverChoice::Oracle:
        return h.num_vertices() <= max_pattern_vertices;
    }
    return false;
}

auto run_solver(SolverChoice choice, const Graph & g, const PatternSpec & h,
    const SolverConfig & cfg) -> SolveOutcome
{
    if (choice == SolverChoice::Auto)
        choice = auto_solver(h);
    if (! solver_accepts(choice, h))
        throw PatternError("solver '" + solver_name(choice) + "' cannot run pattern " + h.name());
    switch (choice) {
    case SolverChoice::Matching:
        return solve_matching(g, h.k, cfg);
    case SolverChoice::Cycle:
        return solve_cycle(g, h.k, cfg);
    case SolverChoice::Path:
        return solve_path(g, h.k, cfg);
    case SolverChoice::Oracle:
        return solve_oracle(g, h, cfg);
    case SolverChoice::Proto:
    case SolverChoice::Auto:
        break;
    }
    return solve_proto(g, h, cfg);
}

} // namespace domh
