#pragma once

#include <domh/graph.hpp>

#include <vector>

namespace domh {

/// A set of vertices with pairwise hop distance >= 3. Any two members have
/// disjoint closed neighborhoods, so no single solution vertex can cover two
/// of them; the solution needs at least |members| vertices overall.
struct ScatteredSet {
    std::vector<int> members; // in acceptance order
    Bitset member_bits;
    int size() const { return int(members.size()); }
};

/// Greedy 3-scattered set: sweep vertices in ascending degree order (ties by
/// id), accept a vertex unless it is within hop distance 2 of an earlier
/// accepted one.
ScatteredSet greedy_3_scattered(const Graph & g);

/// Incremental lower-bound state for the search: tracks, for each scattered
/// vertex, how many assigned solution vertices cover it. uncovered counts the
/// scattered vertices with no cover yet; if uncovered exceeds the number of
/// unassigned pattern roles, no completion can dominate and the branch dies.
struct ScatterPruneState {
    std::vector<int> cover_count; // per host vertex; only scattered ones used
    Bitset scattered;
    int uncovered = 0;

    void init(const Graph & g, const ScatteredSet & s);
    void on_assign(const Graph & g, int v);
    void on_unassign(const Graph & g, int v);

    /// Prune iff uncovered > roles_total - roles_assigned.
    bool prune(int roles_assigned, int roles_total) const
    {
        return uncovered > roles_total - roles_assigned;
    }
};

} // namespace domh
