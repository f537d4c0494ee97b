#pragma once

#include <domh/graph.hpp>

#include <array>
#include <vector>

namespace domh {

/// Collection of vertex-disjoint induced paths ("segments") under
/// construction, stored as doubly-linked lists so joins are O(1). Each
/// assigned vertex has up to two links; ends have one free slot (singletons
/// have two). d_end[v] counts, for any host vertex v, the assigned dominators
/// of v that are currently segment ends: the quantity the cycle and path
/// classifiers branch on. All moves return enough state to be exactly undone
/// in LIFO order.
class SegmentStore {
public:
    struct Segment {
        int end0 = -1;
        int end1 = -1; // == end0 for singletons
        bool active = false;
    };

    struct Move {
        enum Kind { New, Append, Join, Close } kind;
        int v = -1;
        int e1 = -1, e2 = -1;
        int seg = -1, seg2 = -1;
        int saved_end0 = -1, saved_end1 = -1;   // seg's ends before the move
        int saved2_end0 = -1, saved2_end1 = -1; // seg2's ends before a join
    };

    explicit SegmentStore(const Graph & g);

    int active_count() const { return active_count_; }
    bool closed() const { return closed_; }
    int d_end(int v) const { return d_end_[v]; }
    bool is_end(int v) const { return is_end_[v]; }
    int segment_of_end(int e) const { return end_seg_[e]; }
    const Segment & segment(int id) const { return segs_[id]; }
    int num_segments() const { return int(segs_.size()); }

    /// Active segment ids, ascending.
    std::vector<int> active_segments() const;

    /// v becomes a fresh singleton segment.
    Move new_segment(int v);

    /// v extends the segment whose end is e; v becomes that end.
    Move append(int v, int e);

    /// v bridges ends e1, e2 of two distinct segments into one.
    Move join(int v, int e1, int e2);

    /// v connects both ends of the sole remaining segment into a cycle.
    Move close(int v, int e1, int e2);

    /// Exact inverse of the most recent un-undone move.
    void undo(const Move & m);

    /// Walk a segment from one end to the other. from must be an end.
    std::vector<int> walk_from(int from) const;

    /// Walk the closed cycle starting at start, first step to the smaller
    /// neighbor. Only valid after close().
    std::vector<int> walk_cycle(int start) const;

    /// Deep structural check for tests: links, ends, end counts, segments.
    void check_invariants(const Bitset & assigned) const;

private:
    void set_end(int v, bool value);
    void link(int a, int b);
    void unlink(int a, int b);

    const Graph & g_;
    std::vector<std::array<int, 2>> link_;
    std::vector<uint8_t> is_end_;
    std::vector<int> end_seg_;
    std::vector<int> d_end_;
    std::vector<Segment> segs_;
    int active_count_ = 0;
    bool closed_ = false;
};

} // namespace domh
