#include <domh/solver_matching.hpp>

#include <algorithm>
#include <stdexcept>

using std::vector;

namespace domh {

MatchingStrategy::MatchingStrategy(SearchContext & ctx, int k) :
    ctx_(ctx), k_(k), unstarted_(k)
{
}

auto MatchingStrategy::classify(int v) const -> MatchingClass
{
    int d = ctx_.dom.count[v];
    if (d == 0)
        return unstarted_ > 0 ? MatchingClass{MatchingAction::StartEdge, -1} : MatchingClass{};
    if (d == 1) {
        // the unique dominator must be a started endpoint; if it sits inside
        // a finished edge the vertex cannot join the matching
        for (int u : started_)
            if (ctx_.g.adjacent(u, v))
                return MatchingClass{MatchingAction::FinishEdge, u};
    }
    return MatchingClass{};
}

auto MatchingStrategy::candidates(int depth, vector<Candidate> & out) -> void
{
    const Graph & g = ctx_.g;

    // rule sizing; the undominated scan also feeds the per-depth cursor
    int u = ctx_.dom.min_degree_undominated(g, depth);
    long long dom_size = u >= 0 ? g.degree(u) + 1 : -1;

    int w = -1;
    for (int s : started_)
        if (w < 0 || g.degree(s) < g.degree(w) || (g.degree(s) == g.degree(w) && s < w))
            w = s;
    long long ext_size = w >= 0 ? g.degree(w) : -1;

    list_buf_.clear();
    if (u >= 0 && (w < 0 || dom_size < ext_size)) {
        // closed neighborhood of the min-degree undominated vertex
        const auto & a = g.adj[u];
        list_buf_.insert(list_buf_.end(), a.begin(), a.end());
        list_buf_.insert(std::lower_bound(list_buf_.begin(), list_buf_.end(), u), u);
    }
    else if (w >= 0) {
        list_buf_ = g.adj[w];
    }
    else {
        // everything dominated, nothing started: any unassigned vertex may in
        // principle continue the solution, so classify them all
        for (int v : g.degree_order)
            if (! ctx_.assign.assigned.test(v))
                list_buf_.push_back(v);
    }

    for (int v : list_buf_) {
        if (ctx_.assign.assigned.test(v))
            continue;
        MatchingClass mc = classify(v);
        if (mc.action == MatchingAction::StartEdge)
            out.push_back(Candidate{tag_start, v, -1, -1});
        else if (mc.action == MatchingAction::FinishEdge)
            out.push_back(Candidate{tag_finish, v, mc.partner, -1});
    }
}

auto MatchingStrategy::apply(const Candidate & c) -> void
{
    ctx_.do_assign(-1, c.vertex);
    if (c.tag == tag_start) {
        started_.push_back(c.vertex);
        --unstarted_;
        undo_pos_.push_back(-1);
    }
    else {
        auto it = std::find(started_.begin(), started_.end(), c.aux0);
        if (it == started_.end())
            throw std::logic_error("finish partner is not a started endpoint");
        undo_pos_.push_back(int(it - started_.begin()));
        started_.erase(it);
        finished_.emplace_back(c.aux0, c.vertex);
    }
}

auto MatchingStrategy::unapply(const Candidate & c) -> void
{
    int pos = undo_pos_.back();
    undo_pos_.pop_back();
    if (c.tag == tag_start) {
        started_.pop_back();
        ++unstarted_;
    }
    else {
        finished_.pop_back();
        started_.insert(started_.begin() + pos, c.aux0);
    }
    ctx_.do_unassign();
}

auto MatchingStrategy::complete() const -> bool
{
    return int(finished_.size()) == k_;
}

auto MatchingStrategy::witness(vector<int> & role_to_vertex) const -> void
{
    // edge i occupies roles 2i and 2i+1; smaller endpoint first
    for (int i = 0; i < k_; ++i) {
        auto [a, b] = finished_[i];
        role_to_vertex[2 * i] = std::min(a, b);
        role_to_vertex[2 * i + 1] = std::max(a, b);
    }
}

auto MatchingStrategy::check_invariants() const -> void
{
    if (2 * int(finished_.size()) + int(started_.size()) + 2 * unstarted_ != 2 * k_)
        throw std::logic_error("matching edge accounting broken");
    if (2 * int(finished_.size()) + int(started_.size()) != ctx_.assign.count())
        throw std::logic_error("matching assignment count broken");

    vector<int> all;
    for (int v : started_)
        all.push_back(v);
    for (auto [a, b] : finished_) {
        if (! ctx_.g.adjacent(a, b))
            throw std::logic_error("finished pair not an edge");
        all.push_back(a);
        all.push_back(b);
    }
    for (int v : all)
        if (! ctx_.assign.assigned.test(v))
            throw std::logic_error("tracked vertex not assigned");
    // induced: no adjacency other than inside finished pairs
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            bool same_edge = false;
            for (auto [a, b] : finished_)
                if ((all[i] == a && all[j] == b) || (all[i] == b && all[j] == a))
                    same_edge = true;
            if (! same_edge && ctx_.g.adjacent(all[i], all[j]))
                throw std::logic_error("matching state not induced");
        }
}

auto solve_matching(const Graph & g, int k, const SolverConfig & cfg) -> SolveOutcome
{
    if (k < 1)
        throw PatternError("matching pattern needs k >= 1");
    PatternSpec h = PatternSpec::matching(k);
    SearchContext ctx{g, h.num_vertices(), cfg};
    MatchingStrategy strategy{ctx, k};
    return run_bnb(g, h, strategy, ctx, cfg);
}

} // namespace domh
