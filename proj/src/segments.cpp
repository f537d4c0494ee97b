#include <domh/segments.hpp>

#include <algorithm>
#include <stdexcept>

using std::vector;

namespace domh {

SegmentStore::SegmentStore(const Graph & g) :
    g_(g),
    link_(g.n, std::array<int, 2>{-1, -1}),
    is_end_(g.n, 0),
    end_seg_(g.n, -1),
    d_end_(g.n, 0)
{
}

auto SegmentStore::active_segments() const -> vector<int>
{
    vector<int> out;
    for (size_t i = 0; i < segs_.size(); ++i)
        if (segs_[i].active)
            out.push_back(int(i));
    return out;
}

auto SegmentStore::set_end(int v, bool value) -> void
{
    if (bool(is_end_[v]) == value)
        throw std::logic_error("redundant end flip");
    is_end_[v] = value ? 1 : 0;
    int delta = value ? 1 : -1;
    for (int u : g_.adj[v])
        d_end_[u] += delta;
}

auto SegmentStore::link(int a, int b) -> void
{
    auto attach = [&](int x, int y) {
        if (link_[x][0] == -1)
            link_[x][0] = y;
        else if (link_[x][1] == -1)
            link_[x][1] = y;
        else
            throw std::logic_error("vertex already has two links");
    };
    attach(a, b);
    attach(b, a);
}

auto SegmentStore::unlink(int a, int b) -> void
{
    auto detach = [&](int x, int y) {
        if (link_[x][1] == y)
            link_[x][1] = -1;
        else if (link_[x][0] == y)
            link_[x][0] = -1;
        else
            throw std::logic_error("unlink of absent link");
    };
    detach(a, b);
    detach(b, a);
}

auto SegmentStore::new_segment(int v) -> Move
{
    int id = int(segs_.size());
    segs_.push_back(Segment{v, v, true});
    ++active_count_;
    end_seg_[v] = id;
    set_end(v, true);
    return Move{Move::New, v, -1, -1, id, -1, -1, -1, -1, -1};
}

auto SegmentStore::append(int v, int e) -> Move
{
    int id = end_seg_[e];
    Segment & s = segs_[id];
    Move m{Move::Append, v, e, -1, id, -1, s.end0, s.end1, -1, -1};

    bool singleton = s.end0 == s.end1;
    link(v, e);
    if (s.end1 == e)
        s.end1 = v;
    else
        s.end0 = v;
    end_seg_[v] = id;
    if (! singleton)
        set_end(e, false);
    set_end(v, true);
    return m;
}

auto SegmentStore::join(int v, int e1, int e2) -> Move
{
    int s1 = end_seg_[e1], s2 = end_seg_[e2];
    if (s1 == s2)
        throw std::logic_error("join within one segment");
    Segment & a = segs_[s1];
    Segment & b = segs_[s2];
    Move m{Move::Join, v, e1, e2, s1, s2, a.end0, a.end1, b.end0, b.end1};

    bool singleton1 = a.end0 == a.end1;
    bool singleton2 = b.end0 == b.end1;
    int other1 = a.end0 == e1 ? a.end1 : a.end0; // e1 itself for singletons
    int other2 = b.end0 == e2 ? b.end1 : b.end0;

    link(v, e1);
    link(v, e2);
    a.end0 = other1;
    a.end1 = other2;
    b.active = false;
    --active_count_;
    end_seg_[other2] = s1;
    if (! singleton1)
        set_end(e1, false);
    if (! singleton2)
        set_end(e2, false);
    return m;
}

auto SegmentStore::close(int v, int e1, int e2) -> Move
{
    if (e1 == e2)
        throw std::logic_error("close needs two distinct ends");
    Move m{Move::Close, v, e1, e2, end_seg_[e1], -1, -1, -1, -1, -1};
    link(v, e1);
    link(v, e2);
    set_end(e1, false);
    set_end(e2, false);
    closed_ = true;
    return m;
}

auto SegmentStore::undo(const Move & m) -> void
{
    switch (m.kind) {
    case Move::New:
        set_end(m.v, false);
        end_seg_[m.v] = -1;
        segs_.pop_back();
        --active_count_;
        break;

    case Move::Append: {
        Segment & s = segs_[m.seg];
        bool was_singleton = m.saved_end0 == m.saved_end1;
        set_end(m.v, false);
        if (! was_singleton)
            set_end(m.e1, true);
        s.end0 = m.saved_end0;
        s.end1 = m.saved_end1;
        unlink(m.v, m.e1);
        end_seg_[m.v] = -1;
        break;
    }

    case Move::Join: {
        Segment & a = segs_[m.seg];
        Segment & b = segs_[m.seg2];
        bool singleton1 = m.saved_end0 == m.saved_end1;
        bool singleton2 = m.saved2_end0 == m.saved2_end1;
        if (! singleton1)
            set_end(m.e1, true);
        if (! singleton2)
            set_end(m.e2, true);
        a.end0 = m.saved_end0;
        a.end1 = m.saved_end1;
        b.active = true;
        ++active_count_;
        end_seg_[b.end0] = m.seg2;
        end_seg_[b.end1] = m.seg2;
        end_seg_[a.end0] = m.seg;
        end_seg_[a.end1] = m.seg;
        unlink(m.v, m.e1);
        unlink(m.v, m.e2);
        break;
    }

    case Move::Close:
        closed_ = false;
        set_end(m.e1, true);
        set_end(m.e2, true);
        unlink(m.v, m.e1);
        unlink(m.v, m.e2);
        break;
    }
}

auto SegmentStore::walk_from(int from) const -> vector<int>
{
    vector<int> out{from};
    int prev = -1, cur = from;
    while (true) {
        int next = link_[cur][0] != prev && link_[cur][0] != -1 ? link_[cur][0]
            : (link_[cur][1] != prev ? link_[cur][1] : -1);
        if (next == -1)
            break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

auto SegmentStore::walk_cycle(int start) const -> vector<int>
{
    vector<int> out{start};
    if (link_[start][0] == -1 || link_[start][1] == -1)
        throw std::logic_error("walk_cycle start is not interior to a cycle");
    int first = std::min(link_[start][0], link_[start][1]);
    int prev = start, cur = first;
    while (cur != start) {
        out.push_back(cur);
        int next = link_[cur][0] != prev ? link_[cur][0] : link_[cur][1];
        prev = cur;
        cur = next;
    }
    return out;
}

auto SegmentStore::check_invariants(const Bitset & assigned) const -> void
{
    // links are symmetric and only between assigned, host-adjacent vertices
    for (int v = 0; v < g_.n; ++v) {
        for (int slot = 0; slot < 2; ++slot) {
            int u = link_[v][slot];
            if (u == -1)
                continue;
            if (! assigned.test(v) || ! assigned.test(u))
                throw std::logic_error("link on unassigned vertex");
            if (! g_.adjacent(u, v))
                throw std::logic_error("link without host edge");
            if (link_[u][0] != v && link_[u][1] != v)
                throw std::logic_error("asymmetric link");
        }
    }

    // every active segment walks end0 -> end1 and its members agree
    int ends_seen = 0;
    for (size_t id = 0; id < segs_.size(); ++id) {
        const Segment & s = segs_[id];
        if (! s.active)
            continue;
        if (end_seg_[s.end0] != int(id) || end_seg_[s.end1] != int(id))
            throw std::logic_error("segment end mapping broken");
        auto path = walk_from(s.end0);
        if (path.back() != s.end1)
            throw std::logic_error("segment walk does not reach other end");
        for (int v : path)
            if (! assigned.test(v))
                throw std::logic_error("segment member not assigned");
        ends_seen += s.end0 == s.end1 ? 1 : 2;
        if (! is_end_[s.end0] || ! is_end_[s.end1])
            throw std::logic_error("segment end not flagged");
    }

    int flagged = 0;
    for (int v = 0; v < g_.n; ++v)
        flagged += is_end_[v] ? 1 : 0;
    if (! closed_ && flagged != ends_seen)
        throw std::logic_error("stray end flags");

    // d_end must equal the direct recount
    for (int v = 0; v < g_.n; ++v) {
        int expect = 0;
        for (int u : g_.adj[v])
            expect += is_end_[u] ? 1 : 0;
        if (d_end_[v] != expect)
            throw std::logic_error("d_end count drifted");
    }
}

} // namespace domh
