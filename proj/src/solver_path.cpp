#include <domh/solver_path.hpp>

#include <algorithm>
#include <stdexcept>

using std::vector;

namespace domh {

PathStrategy::PathStrategy(SearchContext & ctx, int k, PathOptions opts) :
    ctx_(ctx), k_(k), opts_(opts), store_(ctx.g)
{
}

auto PathStrategy::classify(int v) const -> PathClass
{
    int d = ctx_.dom.count[v];
    int d_end = store_.d_end(v);
    if (d != d_end)
        return PathClass{};
    int remaining = k_ - ctx_.assign.count();
    int segments = store_.active_count();

    if (d_end == 0) {
        if (remaining - 1 >= segments)
            return PathClass{PathAction::NewSegment, -1, -1};
        return PathClass{};
    }
    if (d_end == 1) {
        if (remaining - 1 < segments - 1)
            return PathClass{};
        for (int id : store_.active_segments()) {
            const auto & s = store_.segment(id);
            if (ctx_.g.adjacent(s.end0, v))
                return PathClass{PathAction::Append, s.end0, -1};
            if (ctx_.g.adjacent(s.end1, v))
                return PathClass{PathAction::Append, s.end1, -1};
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
        if (store_.segment_of_end(e1) == store_.segment_of_end(e2))
            return PathClass{}; // would close a cycle
        if (remaining - 1 >= segments - 2)
            return PathClass{PathAction::Join, e1, e2};
        return PathClass{};
    }
    return PathClass{};
}

auto PathStrategy::candidates(int depth, vector<Candidate> & out) -> void
{
    const Graph & g = ctx_.g;

    int u = ctx_.dom.min_degree_undominated(g, depth);
    long long dom_size = u >= 0 ? g.degree(u) + 1 : -1;

    // segment whose two ends have the smallest combined neighborhood; for the
    // merge the union is deduplicated, so measure it exactly
    int best_seg = -1;
    long long best_size = -1;
    if (opts_.use_extension_rule) {
        for (int id : store_.active_segments()) {
            const auto & s = store_.segment(id);
            long long size;
            if (s.end0 == s.end1) {
                size = g.degree(s.end0);
            }
            else {
                const auto & a = g.adj[s.end0];
                const auto & b = g.adj[s.end1];
                size_t i = 0, j = 0;
                size = 0;
                while (i < a.size() || j < b.size()) {
                    if (j == b.size() || (i < a.size() && a[i] < b[j]))
                        ++i;
                    else if (i == a.size() || b[j] < a[i])
                        ++j;
                    else {
                        ++i;
                        ++j;
                    }
                    ++size;
                }
            }
            if (best_seg < 0 || size < best_size) {
                best_seg = id;
                best_size = size;
            }
        }
    }

    list_buf_.clear();
    if (u >= 0 && (best_seg < 0 || dom_size < best_size)) {
        const auto & a = g.adj[u];
        list_buf_.insert(list_buf_.end(), a.begin(), a.end());
        list_buf_.insert(std::lower_bound(list_buf_.begin(), list_buf_.end(), u), u);
    }
    else if (best_seg >= 0) {
        const auto & s = store_.segment(best_seg);
        if (s.end0 == s.end1) {
            list_buf_ = g.adj[s.end0];
        }
        else {
            std::set_union(g.adj[s.end0].begin(), g.adj[s.end0].end(),
                g.adj[s.end1].begin(), g.adj[s.end1].end(), std::back_inserter(list_buf_));
        }
    }
    else {
        for (int v : g.degree_order)
            if (! ctx_.assign.assigned.test(v))
                list_buf_.push_back(v);
    }

    for (int v : list_buf_) {
        if (ctx_.assign.assigned.test(v))
            continue;
        PathClass pc = classify(v);
        if (pc.action != PathAction::Invalid)
            out.push_back(Candidate{int(pc.action), v, pc.end1, pc.end2});
    }
}

auto PathStrategy::apply(const Candidate & c) -> void
{
    ctx_.do_assign(-1, c.vertex);
    switch (PathAction(c.tag)) {
    case PathAction::NewSegment:
        moves_.push_back(store_.new_segment(c.vertex));
        break;
    case PathAction::Append:
        moves_.push_back(store_.append(c.vertex, c.aux0));
        break;
    case PathAction::Join:
        moves_.push_back(store_.join(c.vertex, c.aux0, c.aux1));
        break;
    default:
        throw std::logic_error("invalid candidate applied");
    }
}

auto PathStrategy::unapply(const Candidate &) -> void
{
    store_.undo(moves_.back());
    moves_.pop_back();
    ctx_.do_unassign();
}

auto PathStrategy::complete() const -> bool
{
    return ctx_.assign.count() == k_ && store_.active_count() == 1;
}

auto PathStrategy::witness(vector<int> & role_to_vertex) const -> void
{
    int id = store_.active_segments().at(0);
    const auto & s = store_.segment(id);
    auto path = store_.walk_from(std::min(s.end0, s.end1));
    for (int i = 0; i < k_; ++i)
        role_to_vertex[i] = path[i];
}

auto PathStrategy::check_invariants() const -> void
{
    store_.check_invariants(ctx_.assign.assigned);
    int members = 0;
    for (int id : store_.active_segments())
        members += int(store_.walk_from(store_.segment(id).end0).size());
    if (members != ctx_.assign.count())
        throw std::logic_error("segment membership does not cover assignment");
}

auto solve_path(const Graph & g, int k, const SolverConfig & cfg, PathOptions opts) -> SolveOutcome
{
    if (k < 1)
        throw PatternError("path pattern needs k >= 1");
    PatternSpec h = PatternSpec::path(k);
    SearchContext ctx{g, k, cfg};
    PathStrategy strategy{ctx, k, opts};
    return run_bnb(g, h, strategy, ctx, cfg);
}

} // namespace domh
