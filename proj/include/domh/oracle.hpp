#pragma once

#include <domh/bnb.hpp>
#include <domh/graph.hpp>
#include <domh/pattern.hpp>

#include <functional>

namespace domh {

/// Counts from a full enumeration run.
struct OccurrenceCounts {
    long long occurrences = 0; // induced occurrences, one per automorphism class
    long long dominating = 0;  // those whose image also dominates
    bool timed_out = false;
};

/// Enumerate induced occurrences of h in g by plain backtracking over roles
/// in id order, vertices ascending, with no degree heuristics and no bounds.
/// Exactly one embedding per automorphism class is reported: the one whose
/// image tuple is lexicographically smallest within its class. The callback
/// returns false to stop early. Returns false if the walk was cut short by
/// the callback or the deadline.
///
/// Deliberately simple and slow; this is the reference the optimized solvers
/// are checked against.
bool for_each_occurrence(const Graph & g, const PatternSpec & h,
    const std::function<bool(const std::vector<int> &)> & fn,
    int64_t timeout_ms = -1);

/// First dominating occurrence in enumeration order, or NotFound.
SolveOutcome solve_oracle(const Graph & g, const PatternSpec & h, const SolverConfig & cfg = {});

OccurrenceCounts count_occurrences(const Graph & g, const PatternSpec & h, int64_t timeout_ms = -1);

} // namespace domh
