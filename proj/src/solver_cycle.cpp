#include <domh/solver_cycle.hpp>

#include <algorithm>
#include <stdexcept>

using std::vector;

namespace domh {

CycleStrategy::CycleStrategy(SearchContext & ctx, int k) :
    ctx_(ctx), k_(k), store_(ctx.g)
{
}

auto CycleStrategy::classify(int v) const -> CycleClass
{
    int d = ctx_.dom.count[v];
    int d_end = store_.d_end(v);
    if (d != d_end)
        return CycleClass{}; // adjacent to a segment interior: chord
    int remaining = k_ - ctx_.assign.count();
    int segments = store_.active_count();

    if (d_end == 0) {
        if (remaining - 1 >= segments + 1)
            return CycleClass{CycleAction::NewSegment, -1, -1};
        return CycleClass{};
    }
    if (d_end == 1) {
        if (remaining - 1 < segments)
            return CycleClass{};
        for (int id : store_.active_segments()) {
            const auto & s = store_.segment(id);
            if (ctx_.g.adjacent(s.end0, v))
                return CycleClass{CycleAction::Append, s.end0, -1};
            if (ctx_.g.adjacent(s.end1, v))
                return CycleClass{CycleAction::Append, s.end1, -1};
        }
        throw std::logic_error("d_end = 1 without an adjacent end");
    }
    if (d_end == 2) {
        int e1 = -1, e2 = -1;
        for (int id : store_.active_segments()) {
            const auto & s = store_.segment(id);
            int ends[2] = {s.end0, s.end1};
            int distinct = s.end0 == s.end1 ? 1 : 2;
            for (int i = 0; i < distinct; ++i) {
                if (ctx_.g.adjacent(ends[i], v)) {
                    if (e1 < 0)
                        e1 = ends[i];
                    else
                        e2 = ends[i];
                }
            }
        }
        if (e1 < 0 || e2 < 0)
            throw std::logic_error("d_end = 2 without two adjacent ends");
        if (store_.segment_of_end(e1) != store_.segment_of_end(e2)) {
            if (remaining - 1 >= segments - 1)
                return CycleClass{CycleAction::Join, e1, e2};
            return CycleClass{};
        }
        if (segments == 1 && remaining == 1)
            return CycleClass{CycleAction::Close, e1, e2};
        return CycleClass{};
    }
    return CycleClass{};
}

auto CycleStrategy::candidates(int depth, vector<Candidate> & out) -> void
{
    const Graph & g = ctx_.g;

    int u = ctx_.dom.min_degree_undominated(g, depth);
    long long dom_size = u >= 0 ? g.degree(u) + 1 : -1;

    // minimum-degree segment end, ties by id
    int e = -1;
    for (int id : store_.active_segments()) {
        const auto & s = store_.segment(id);
        int ends[2] = {s.end0, s.end1};
        int distinct = s.end0 == s.end1 ? 1 : 2;
        for (int i = 0; i < distinct; ++i) {
            int cand = ends[i];
            if (e < 0 || g.degree(cand) < g.degree(e) || (g.degree(cand) == g.degree(e) && cand < e))
                e = cand;
        }
    }
    long long ext_size = e >= 0 ? g.degree(e) : -1;

    list_buf_.clear();
    if (u >= 0 && (e < 0 || dom_size < ext_size)) {
        const auto & a = g.adj[u];
        list_buf_.insert(list_buf_.end(), a.begin(), a.end());
        list_buf_.insert(std::lower_bound(list_buf_.begin(), list_buf_.end(), u), u);
    }
    else if (e >= 0) {
        list_buf_ = g.adj[e];
    }
    else {
        for (int v : g.degree_order)
            if (! ctx_.assign.assigned.test(v))
                list_buf_.push_back(v);
    }

    for (int v : list_buf_) {
        if (ctx_.assign.assigned.test(v))
            continue;
        CycleClass cc = classify(v);
        if (cc.action != CycleAction::Invalid)
            out.push_back(Candidate{int(cc.action), v, cc.end1, cc.end2});
    }
}

auto CycleStrategy::apply(const Candidate & c) -> void
{
    ctx_.do_assign(-1, c.vertex);
    switch (CycleAction(c.tag)) {
    case CycleAction::NewSegment:
        moves_.push_back(store_.new_segment(c.vertex));
        break;
    case CycleAction::Append:
        moves_.push_back(store_.append(c.vertex, c.aux0));
        break;
    case CycleAction::Join:
        moves_.push_back(store_.join(c.vertex, c.aux0, c.aux1));
        break;
    case CycleAction::Close:
        moves_.push_back(store_.close(c.vertex, c.aux0, c.aux1));
        break;
    default:
        throw std::logic_error("invalid candidate applied");
    }
}

auto CycleStrategy::unapply(const Candidate &) -> void
{
    store_.undo(moves_.back());
    moves_.pop_back();
    ctx_.do_unassign();
}

auto CycleStrategy::complete() const -> bool
{
    return ctx_.assign.count() == k_;
}

auto CycleStrategy::witness(vector<int> & role_to_vertex) const -> void
{
    if (! store_.closed())
        throw std::logic_error("complete cycle state is not closed");
    int start = -1;
    for (auto [role, v] : ctx_.assign.stack)
        if (start < 0 || v < start)
            start = v;
    auto cycle = store_.walk_cycle(start);
    for (int i = 0; i < k_; ++i)
        role_to_vertex[i] = cycle[i];
}

auto CycleStrategy::check_invariants() const -> void
{
    store_.check_invariants(ctx_.assign.assigned);
    int members = 0;
    for (int id : store_.active_segments()) {
        const auto & s = store_.segment(id);
        members += int(store_.walk_from(s.end0).size());
    }
    if (! store_.closed() && members != ctx_.assign.count())
        throw std::logic_error("segment membership does not cover assignment");
}

auto solve_cycle(const Graph & g, int k, const SolverConfig & cfg) -> SolveOutcome
{
    if (k < 3)
        throw PatternError("cycle pattern needs k >= 3");
    PatternSpec h = PatternSpec::cycle(k);
    SearchContext ctx{g, k, cfg};
    CycleStrategy strategy{ctx, k};
    return run_bnb(g, h, strategy, ctx, cfg);
}

} // namespace domh
