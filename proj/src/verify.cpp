#include <domh/verify.hpp>

#include <deque>

using std::string;
using std::vector;

namespace domh {

auto is_dominating(const Graph & g, const Bitset & s) -> bool
{
    Bitset covered(g.n);
    for (int v = 0; v < g.n; ++v)
        if (s.test(v))
            covered.or_with(g.dom_matrix[v]);
    return covered.all();
}

auto is_dominating(const Graph & g, const vector<int> & s) -> bool
{
    Bitset covered(g.n);
    for (int v : s)
        covered.or_with(g.dom_matrix[v]);
    return covered.all();
}

auto pairwise_hop_distance_ge(const Graph & g, const vector<int> & s, int d) -> bool
{
    if (d <= 1 || s.size() < 2)
        return true;

    Bitset member(g.n);
    for (int v : s)
        member.set(v);

    // BFS out to depth d-1 from each member; seeing another member means some
    // pair is closer than d. Each start only needs to find later members, but
    // scanning all is just as cheap and simpler.
    vector<int> dist(g.n);
    std::deque<int> queue;
    for (int start : s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[start] = 0;
        queue.assign(1, start);
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u != start && member.test(u))
                return false;
            if (dist[u] == d - 1)
                continue;
            for (int w : g.adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return true;
}

auto verify_solution(const Graph & g, const PatternSpec & h, const vector<int> & map,
    string * reason) -> bool
{
    auto fail = [&](const string & why) {
        if (reason != nullptr)
            *reason = why;
        return false;
    };

    int r = h.num_vertices();
    if (int(map.size()) != r)
        return fail("witness has " + std::to_string(map.size()) + " entries, pattern has " + std::to_string(r) + " vertices");

    Bitset seen(g.n);
    for (int p = 0; p < r; ++p) {
        int v = map[p];
        if (v < 0 || v >= g.n)
            return fail("role " + std::to_string(p) + " maps outside the host graph");
        if (seen.test(v))
            return fail("not injective: host vertex " + std::to_string(v) + " used twice");
        seen.set(v);
    }

    for (int p = 0; p < r; ++p) {
        for (int q = p + 1; q < r; ++q) {
            bool in_pattern = h.adjacent(p, q);
            bool in_host = g.adjacent(map[p], map[q]);
            if (in_pattern && ! in_host)
                return fail("pattern edge {" + std::to_string(p) + "," + std::to_string(q) + "} maps to a non-edge");
            if (! in_pattern && in_host)
                return fail("pattern non-edge {" + std::to_string(p) + "," + std::to_string(q) + "} maps to an edge");
        }
    }

    if (! is_dominating(g, map))
        return fail("image does not dominate the host graph");

    return true;
}

} // namespace domh
