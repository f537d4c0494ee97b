#include <domh/heuristics.hpp>

#include <deque>

namespace domh {

auto greedy_3_scattered(const Graph & g) -> ScatteredSet
{
    ScatteredSet out;
    out.member_bits = Bitset(g.n);

    // excluded = within hop distance 2 of an accepted vertex. The BFS needs
    // its own visited set: exclusion zones overlap, and an already-excluded
    // vertex must still be traversed to reach depth 2.
    Bitset excluded(g.n);
    Bitset visited(g.n);
    std::deque<std::pair<int, int>> queue;

    for (int v : g.degree_order) {
        if (excluded.test(v))
            continue;
        out.members.push_back(v);
        out.member_bits.set(v);
        visited.clear();
        visited.set(v);
        excluded.set(v);
        queue.assign(1, {v, 0});
        while (! queue.empty()) {
            auto [u, depth] = queue.front();
            queue.pop_front();
            if (depth == 2)
                continue;
            for (int w : g.adj[u]) {
                if (! visited.test(w)) {
                    visited.set(w);
                    excluded.set(w);
                    queue.push_back({w, depth + 1});
                }
            }
        }
    }
    return out;
}

auto ScatterPruneState::init(const Graph & g, const ScatteredSet & s) -> void
{
    cover_count.assign(g.n, 0);
    scattered = s.member_bits;
    uncovered = s.size();
}

auto ScatterPruneState::on_assign(const Graph & g, int v) -> void
{
    if (scattered.test(v)) {
        if (cover_count[v]++ == 0)
            --uncovered;
    }
    for (int u : g.adj[v]) {
        if (scattered.test(u)) {
            if (cover_count[u]++ == 0)
                --uncovered;
        }
    }
}

auto ScatterPruneState::on_unassign(const Graph & g, int v) -> void
{
    if (scattered.test(v)) {
        if (--cover_count[v] == 0)
            ++uncovered;
    }
    for (int u : g.adj[v]) {
        if (scattered.test(u)) {
            if (--cover_count[u] == 0)
                ++uncovered;
        }
    }
}

} // namespace domh
