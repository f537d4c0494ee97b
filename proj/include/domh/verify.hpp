#pragma once

#include <domh/graph.hpp>
#include <domh/pattern.hpp>

#include <string>
#include <vector>

namespace domh {

/// OR of closed-neighborhood rows over s, then an all-ones test.
bool is_dominating(const Graph & g, const Bitset & s);
bool is_dominating(const Graph & g, const std::vector<int> & s);

/// True iff every pair of members is at hop distance >= d. BFS with early
/// cutoff from each member.
bool pairwise_hop_distance_ge(const Graph & g, const std::vector<int> & s, int d);

/// Independent solution checker: map must be an injective map from pattern
/// roles to host vertices whose image induces the pattern and dominates g.
/// Never consults solver state. On failure, *reason (if given) says why.
bool verify_solution(const Graph & g, const PatternSpec & h, const std::vector<int> & map,
    std::string * reason = nullptr);

} // namespace domh
