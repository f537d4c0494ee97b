#pragma once

#include <domh/graph.hpp>
#include <domh/heuristics.hpp>
#include <domh/pattern.hpp>

#include <cstdint>
#include <vector>

namespace domh {

struct SolverConfig {
    int64_t timeout_ms = 300000;   // wall clock budget; 5 minutes by default
    bool scatter_prune = true;     // lower-bound pruning via a 3-scattered set
    int check_interval = 1024;     // poll the clock every this many nodes
};

enum class SolveStatus {
    Found,
    NotFound,
    Timeout
};

struct SearchStats {
    uint64_t nodes = 0; // assignments performed
    int max_depth = 0;
    double wall_ms = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::NotFound;
    std::vector<int> witness; // role -> host vertex; only for Found
    SearchStats stats;
};

/// Partial map from pattern roles to host vertices. Role-free strategies push
/// entries with role = -1 and decode the role map themselves at the end.
struct Assignment {
    std::vector<int> role_to_vertex;          // -1 where unassigned
    Bitset assigned;                          // host vertices in use
    std::vector<std::pair<int, int>> stack;   // (role, vertex), LIFO
    std::vector<uint64_t> stamps;             // unique id per live entry
    uint64_t next_stamp = 1;

    void init(int roles, int n)
    {
        role_to_vertex.assign(roles, -1);
        assigned = Bitset(n);
        stack.clear();
        stamps.clear();
    }

    int count() const { return int(stack.size()); }

    void push(int role, int v)
    {
        if (role >= 0)
            role_to_vertex[role] = v;
        assigned.set(v);
        stack.emplace_back(role, v);
        stamps.push_back(next_stamp++);
    }

    void pop()
    {
        auto [role, v] = stack.back();
        stack.pop_back();
        stamps.pop_back();
        assigned.reset(v);
        if (role >= 0)
            role_to_vertex[role] = -1;
    }
};

/// Per-vertex count of assigned dominators (assigned u with v in N[u]).
/// A vertex is dominated iff its count is positive. The scan cursors make
/// repeated min-degree-undominated queries cheap: along a search path the
/// dominated set only grows, so the first undominated position in
/// degree_order never moves backwards.
struct DominationCounters {
    std::vector<int> count;
    std::vector<int> scan_base; // per depth, index into degree_order

    void init(const Graph & g, int roles)
    {
        count.assign(g.n, 0);
        scan_base.assign(roles + 2, 0);
    }

    void on_assign(const Graph & g, int v)
    {
        ++count[v];
        for (int u : g.adj[v])
            ++count[u];
    }

    void on_unassign(const Graph & g, int v)
    {
        --count[v];
        for (int u : g.adj[v])
            --count[u];
    }

    /// Smallest-degree undominated vertex (ties by id), or -1 if everything
    /// is dominated. depth is the current number of assigned roles; the scan
    /// resumes from the parent's cursor and records its own for the children.
    int min_degree_undominated(const Graph & g, int depth)
    {
        int idx = scan_base[depth];
        while (idx < g.n && count[g.degree_order[idx]] > 0)
            ++idx;
        scan_base[depth + 1] = idx;
        return idx < g.n ? g.degree_order[idx] : -1;
    }
};

/// Shared search state threaded through every strategy.
struct SearchContext {
    const Graph & g;
    int roles;
    Assignment assign;
    DominationCounters dom;
    ScatterPruneState scatter;
    bool scatter_enabled = true;

    SearchContext(const Graph & g_, int roles_, const SolverConfig & cfg) :
        g(g_), roles(roles_)
    {
        assign.init(roles, g.n);
        dom.init(g, roles);
        scatter_enabled = cfg.scatter_prune;
        if (scatter_enabled)
            scatter.init(g, greedy_3_scattered(g));
    }

    void do_assign(int role, int v)
    {
        assign.push(role, v);
        dom.on_assign(g, v);
        if (scatter_enabled)
            scatter.on_assign(g, v);
    }

    void do_unassign()
    {
        int v = assign.stack.back().second;
        if (scatter_enabled)
            scatter.on_unassign(g, v);
        dom.on_unassign(g, v);
        assign.pop();
    }
};

/// One branching option: tag and aux fields mean whatever the owning
/// strategy says they mean (a pattern role, an edge partner, segment ends).
struct Candidate {
    int tag = -1;
    int vertex = -1;
    int aux0 = -1;
    int aux1 = -1;
};

/// Strategy plugged into run_bnb. candidates() must be deterministic;
/// apply/unapply must be exact inverses (run_bnb restores the context to its
/// initial state before returning, whatever the outcome).
class BranchStrategy {
public:
    virtual ~BranchStrategy() = default;

    /// Fill out with the branching options at the current node. depth is the
    /// number of assigned roles (0 = root).
    virtual void candidates(int depth, std::vector<Candidate> & out) = 0;

    virtual void apply(const Candidate & c) = 0;
    virtual void unapply(const Candidate & c) = 0;

    /// All pattern roles placed (structure closed where that matters).
    virtual bool complete() const = 0;

    /// Strategy-specific cut beyond the shared scattered-set bound. Most
    /// strategies bake their budgets into candidate classification instead.
    virtual bool bound() const { return false; }

    /// Decode the witness; only called when complete() holds.
    virtual void witness(std::vector<int> & role_to_vertex) const = 0;
};

/// Depth-first branch and bound over an explicit frame stack. At every node:
/// apply a candidate, check completeness (then domination), check the bounds,
/// otherwise expand. Deterministic given deterministic strategies. Found
/// witnesses are re-checked with verify_solution before being returned; an
/// inconsistency throws std::logic_error rather than returning a bad answer.
SolveOutcome run_bnb(const Graph & g, const PatternSpec & h, BranchStrategy & strategy,
    SearchContext & ctx, const SolverConfig & cfg);

} // namespace domh
