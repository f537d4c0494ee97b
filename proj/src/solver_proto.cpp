#include <domh/solver_proto.hpp>

#include <algorithm>
#include <deque>

using std::vector;

namespace domh {

auto make_proto_ordering(const PatternSpec & h, int rep) -> ProtoOrdering
{
    int r = h.num_vertices();
    ProtoOrdering ord;
    vector<bool> visited(r, false);

    auto bfs = [&](int start) {
        std::deque<int> queue{start};
        visited[start] = true;
        while (! queue.empty()) {
            int p = queue.front();
            queue.pop_front();
            ord.slots.push_back(p);
            for (int q : h.neighbors(p)) {
                if (! visited[q]) {
                    visited[q] = true;
                    queue.push_back(q);
                }
            }
        }
    };

    // the representative's component first, then the rest by smallest vertex
    bfs(rep);
    for (int p = 0; p < r; ++p)
        if (! visited[p])
            bfs(p);

    ord.nbr_slots.resize(r);
    ord.non_nbr_slots.resize(r);
    for (int d = 0; d < r; ++d) {
        for (int i = 0; i < d; ++i) {
            if (h.adjacent(ord.slots[i], ord.slots[d]))
                ord.nbr_slots[d].push_back(i);
            else
                ord.non_nbr_slots[d].push_back(i);
        }
    }
    return ord;
}

ProtoStrategy::ProtoStrategy(SearchContext & ctx, const PatternSpec & h, ProtoOptions opts) :
    ctx_(ctx), h_(h), opts_(opts), roles_(h.num_vertices()), orbits_(orbits(h))
{
    for (int rep : orbits_.representatives)
        orderings_.push_back(make_proto_ordering(h, rep));
    cache_.resize(roles_ + 1);
}

auto ProtoStrategy::candidates(int depth, vector<Candidate> & out) -> void
{
    if (depth == 0) {
        // one role per orbit, each tried on the closed neighborhood of a
        // minimum-degree host vertex: every solution must intersect it
        int v_min = ctx_.g.degree_order[0];
        vector<int> closed = ctx_.g.adj[v_min];
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v_min), v_min);
        for (size_t rep_idx = 0; rep_idx < orderings_.size(); ++rep_idx)
            for (int v : closed)
                out.push_back(Candidate{orbits_.representatives[rep_idx], v, int(rep_idx), -1});
        return;
    }

    int role = orderings_[active_rep_].slots[depth];
    for (int v : extension_vertices(depth))
        out.push_back(Candidate{role, v, -1, -1});
}

auto ProtoStrategy::extension_vertices(int depth) -> vector<int>
{
    const int d = depth;
    const auto & ord = orderings_[active_rep_];
    const Graph & g = ctx_.g;

    bool universe = true;
    vector<int> & cur = scratch_a_;
    vector<int> & tmp = scratch_b_;
    cur.clear();

    auto intersect_with = [&](const vector<int> & list) {
        if (universe) {
            cur = list;
            universe = false;
            return;
        }
        tmp.clear();
        std::set_intersection(cur.begin(), cur.end(), list.begin(), list.end(), std::back_inserter(tmp));
        cur.swap(tmp);
    };
    auto subtract = [&](const vector<int> & list) {
        if (universe) {
            cur.clear();
            size_t li = 0;
            for (int v = 0; v < g.n; ++v) {
                while (li < list.size() && list[li] < v)
                    ++li;
                if (li < list.size() && list[li] == v)
                    continue;
                cur.push_back(v);
            }
            universe = false;
            return;
        }
        tmp.clear();
        std::set_difference(cur.begin(), cur.end(), list.begin(), list.end(), std::back_inserter(tmp));
        cur.swap(tmp);
    };
    auto apply_op = [&](int i) {
        const vector<int> & operand = g.adj[ctx_.assign.stack[i].second];
        bool is_nbr = std::binary_search(ord.nbr_slots[d].begin(), ord.nbr_slots[d].end(), i);
        if (is_nbr)
            intersect_with(operand);
        else
            subtract(operand);
    };

    // ops for earlier slots in slot order; the prefix up to slot d-2 is
    // shared by every sibling at slot d-1, so it is cached under the stamp of
    // that assignment (LIFO discipline makes the single stamp sufficient)
    int first_op = 0;
    if (opts_.use_cache && d >= 2) {
        CacheEntry & ce = cache_[d];
        uint64_t key = ctx_.assign.stamps[d - 2];
        if (ce.valid && ce.stamp == key) {
            universe = ce.universe;
            cur = ce.vec;
        }
        else {
            for (int i = 0; i <= d - 2; ++i)
                apply_op(i);
            ce.valid = true;
            ce.stamp = key;
            ce.universe = universe;
            ce.vec = cur;
        }
        first_op = d - 1;
    }
    for (int i = first_op; i < d; ++i)
        apply_op(i);

    vector<int> out;
    out.reserve(cur.size());
    for (int v : cur)
        if (! ctx_.assign.assigned.test(v))
            out.push_back(v);
    return out;
}

auto ProtoStrategy::apply(const Candidate & c) -> void
{
    if (ctx_.assign.count() == 0)
        active_rep_ = c.aux0;
    ctx_.do_assign(c.tag, c.vertex);
}

auto ProtoStrategy::unapply(const Candidate &) -> void
{
    ctx_.do_unassign();
    if (ctx_.assign.count() == 0)
        active_rep_ = -1;
}

auto ProtoStrategy::complete() const -> bool
{
    return ctx_.assign.count() == roles_;
}

auto ProtoStrategy::witness(vector<int> & role_to_vertex) const -> void
{
    role_to_vertex = ctx_.assign.role_to_vertex;
}

auto solve_proto(const Graph & g, const PatternSpec & h, const SolverConfig & cfg,
    ProtoOptions opts) -> SolveOutcome
{
    if (h.num_vertices() > max_pattern_vertices)
        throw PatternError("pattern too large for the generic solver");
    SearchContext ctx{g, h.num_vertices(), cfg};
    ProtoStrategy strategy{ctx, h, opts};
    return run_bnb(g, h, strategy, ctx, cfg);
}

} // namespace domh
