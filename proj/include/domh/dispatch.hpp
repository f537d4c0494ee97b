#pragma once

#include <domh/bnb.hpp>
#include <domh/pattern.hpp>

#include <string>

namespace domh {

enum class SolverChoice {
    Auto,
    Proto,
    Matching,
    Cycle,
    Path,
    Oracle
};

/// Parse "auto" / "proto" / "matching" / "cycle" / "path" / "oracle".
SolverChoice parse_solver(const std::string & name);

std::string solver_name(SolverChoice choice);

/// What Auto resolves to: the tailored solver for M/C/P patterns, proto for
/// explicit ones.
SolverChoice auto_solver(const PatternSpec & h);

/// Whether the solver can run this pattern. Tailored solvers only accept
/// their own family; proto and oracle accept anything within the size cap.
bool solver_accepts(SolverChoice choice, const PatternSpec & h);

/// Run the chosen solver on the instance; Auto resolves first. Throws
/// PatternError on a solver/pattern mismatch.
SolveOutcome run_solver(SolverChoice choice, const Graph & g, const PatternSpec & h,
    const SolverConfig & cfg);

} // namespace domh
