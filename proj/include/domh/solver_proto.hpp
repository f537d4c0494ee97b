#pragma once

#include <domh/bnb.hpp>

namespace domh {

/// Role order used once the first role of a given orbit representative has
/// been placed: BFS from the representative (neighbors in ascending id), then
/// any other components in ascending order of their smallest vertex, each
/// BFS'd from that vertex. slots[i] is the role placed i-th; for each slot,
/// earlier slots split into pattern neighbors and non-neighbors of its role.
struct ProtoOrdering {
    std::vector<int> slots;
    std::vector<std::vector<int>> nbr_slots;     // earlier slots adjacent in h
    std::vector<std::vector<int>> non_nbr_slots; // earlier slots non-adjacent in h
};

ProtoOrdering make_proto_ordering(const PatternSpec & h, int rep);

struct ProtoOptions {
    bool use_cache = true; // keep per-depth fold prefixes across siblings
};

/// Generic pattern solver: first role ranges over one representative per
/// pattern orbit crossed with the closed neighborhood of a minimum-degree
/// host vertex; later roles take the intersection of host neighborhoods of
/// assigned pattern neighbors minus the neighborhoods of assigned
/// non-neighbors, done with two-pointer merges over sorted arrays.
class ProtoStrategy : public BranchStrategy {
public:
    ProtoStrategy(SearchContext & ctx, const PatternSpec & h, ProtoOptions opts = {});

    void candidates(int depth, std::vector<Candidate> & out) override;
    void apply(const Candidate & c) override;
    void unapply(const Candidate & c) override;
    bool complete() const override;
    void witness(std::vector<int> & role_to_vertex) const override;

    /// Candidate host vertices for the next slot of the active ordering;
    /// exposed so tests can compare against a brute-force filter.
    std::vector<int> extension_vertices(int depth);

private:
    struct CacheEntry {
        uint64_t stamp = 0; // stamp of the assignment two slots back
        bool universe = false;
        std::vector<int> vec;
        bool valid = false;
    };

    SearchContext & ctx_;
    const PatternSpec & h_;
    ProtoOptions opts_;
    int roles_;
    OrbitPartition orbits_;
    std::vector<ProtoOrdering> orderings_; // one per orbit representative
    int active_rep_ = -1;                  // index into orderings_
    std::vector<CacheEntry> cache_;        // per depth
    std::vector<int> scratch_a_, scratch_b_;
};

SolveOutcome solve_proto(const Graph & g, const PatternSpec & h, const SolverConfig & cfg = {},
    ProtoOptions opts = {});

} // namespace domh
