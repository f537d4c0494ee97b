#include <domh/pattern.hpp>

#include <algorithm>
#include <cctype>

using std::string;
using std::vector;

namespace domh {

namespace {

auto check_k(PatternKind kind, int k) -> void
{
    switch (kind) {
    case PatternKind::Matching:
        if (k < 1)
            throw PatternError("matching pattern needs k >= 1");
        break;
    case PatternKind::Cycle:
        if (k < 3)
            throw PatternError("cycle pattern needs k >= 3");
        break;
    case PatternKind::Path:
        if (k < 1)
            throw PatternError("path pattern needs k >= 1");
        break;
    case PatternKind::Explicit:
        break;
    }
}

} // namespace

auto PatternSpec::num_vertices() const -> int
{
    switch (kind) {
    case PatternKind::Matching: return 2 * k;
    case PatternKind::Cycle: return k;
    case PatternKind::Path: return k;
    case PatternKind::Explicit: return expl->n;
    }
    return 0;
}

auto PatternSpec::adjacent(int p, int q) const -> bool
{
    if (p == q)
        return false;
    switch (kind) {
    case PatternKind::Matching:
        return p / 2 == q / 2;
    case PatternKind::Cycle:
        return (p + 1) % k == q || (q + 1) % k == p;
    case PatternKind::Path:
        return p + 1 == q || q + 1 == p;
    case PatternKind::Explicit:
        return expl->adjacent(p, q);
    }
    return false;
}

auto PatternSpec::edges() const -> vector<std::pair<int, int>>
{
    vector<std::pair<int, int>> out;
    int r = num_vertices();
    for (int p = 0; p < r; ++p)
        for (int q = p + 1; q < r; ++q)
            if (adjacent(p, q))
                out.emplace_back(p, q);
    return out;
}

auto PatternSpec::neighbors(int p) const -> vector<int>
{
    vector<int> out;
    int r = num_vertices();
    for (int q = 0; q < r; ++q)
        if (adjacent(p, q))
            out.push_back(q);
    return out;
}

auto PatternSpec::name() const -> string
{
    switch (kind) {
    case PatternKind::Matching: return "M" + std::to_string(k);
    case PatternKind::Cycle: return "C" + std::to_string(k);
    case PatternKind::Path: return "P" + std::to_string(k);
    case PatternKind::Explicit: return "explicit(" + std::to_string(expl->n) + ")";
    }
    return "?";
}

auto PatternSpec::matching(int k) -> PatternSpec
{
    check_k(PatternKind::Matching, k);
    return PatternSpec{PatternKind::Matching, k, std::nullopt};
}

auto PatternSpec::cycle(int k) -> PatternSpec
{
    check_k(PatternKind::Cycle, k);
    return PatternSpec{PatternKind::Cycle, k, std::nullopt};
}

auto PatternSpec::path(int k) -> PatternSpec
{
    check_k(PatternKind::Path, k);
    return PatternSpec{PatternKind::Path, k, std::nullopt};
}

auto PatternSpec::explicit_graph(Graph g) -> PatternSpec
{
    if (g.n > max_pattern_vertices)
        throw PatternError("explicit pattern exceeds " + std::to_string(max_pattern_vertices) + " vertices");
    PatternSpec h{PatternKind::Explicit, g.n, std::move(g)};
    return h;
}

auto parse_pattern(const string & spec) -> PatternSpec
{
    if (spec.empty())
        throw PatternError("empty pattern spec");

    if (spec[0] == '@') {
        string path = spec.substr(1);
        try {
            return PatternSpec::explicit_graph(load_graph_file(path));
        }
        catch (const GraphFormatError & e) {
            throw PatternError("pattern file '" + path + "': " + e.what());
        }
    }

    char c = spec[0];
    if (c != 'M' && c != 'C' && c != 'P')
        throw PatternError("pattern spec must start with M, C, P or @: '" + spec + "'");
    int k = 0;
    if (spec.size() < 2)
        throw PatternError("missing k in pattern spec '" + spec + "'");
    for (size_t i = 1; i < spec.size(); ++i) {
        if (! std::isdigit(static_cast<unsigned char>(spec[i])))
            throw PatternError("bad pattern spec '" + spec + "'");
        k = k * 10 + (spec[i] - '0');
        if (k > 1000000)
            throw PatternError("pattern parameter too large");
    }
    switch (c) {
    case 'M': return PatternSpec::matching(k);
    case 'C': return PatternSpec::cycle(k);
    default: return PatternSpec::path(k);
    }
}

namespace {

// Enumerate automorphisms by extending partial vertex maps, pruning any
// prefix that already violates adjacency. Equivalent to filtering all r!
// permutations, just without visiting dead prefixes.
struct AutSearch {
    const PatternSpec & h;
    int r;
    vector<int> image;
    vector<bool> used;
    vector<vector<int>> found;

    explicit AutSearch(const PatternSpec & h_) :
        h(h_), r(h_.num_vertices()), image(r, -1), used(r, false) {}

    void run(int p)
    {
        if (p == r) {
            found.push_back(image);
            return;
        }
        for (int v = 0; v < r; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int q = 0; q < p; ++q) {
                if (h.adjacent(q, p) != h.adjacent(image[q], v)) {
                    ok = false;
                    break;
                }
            }
            if (! ok)
                continue;
            image[p] = v;
            used[v] = true;
            run(p + 1);
            used[v] = false;
            image[p] = -1;
        }
    }
};

} // namespace

auto automorphisms(const PatternSpec & h) -> vector<vector<int>>
{
    if (h.num_vertices() > max_pattern_vertices)
        throw PatternError("pattern too large for automorphism enumeration");
    AutSearch search{h};
    search.run(0);
    return search.found;
}

auto orbits(const PatternSpec & h) -> OrbitPartition
{
    int r = h.num_vertices();
    vector<int> parent(r);
    for (int v = 0; v < r; ++v)
        parent[v] = v;

    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    for (auto & a : automorphisms(h)) {
        for (int v = 0; v < r; ++v) {
            int x = find(v), y = find(a[v]);
            if (x != y)
                parent[std::max(x, y)] = std::min(x, y);
        }
    }

    OrbitPartition out;
    out.orbit_of.assign(r, -1);
    for (int v = 0; v < r; ++v) {
        int root = find(v);
        if (root == v) {
            out.orbit_of[v] = int(out.representatives.size());
            out.representatives.push_back(v);
        }
        else {
            out.orbit_of[v] = out.orbit_of[root];
        }
    }
    return out;
}

} // namespace domh
