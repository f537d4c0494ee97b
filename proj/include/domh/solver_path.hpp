#pragma once

#include <domh/bnb.hpp>
#include <domh/segments.hpp>

namespace domh {

enum class PathAction {
    NewSegment,
    Append,
    Join,
    Invalid
};

struct PathClass {
    PathAction action = PathAction::Invalid;
    int end1 = -1;
    int end2 = -1;
};

struct PathOptions {
    /// Testing hook: with the extension rule off, branching falls back to the
    /// domination rule plus a full classified sweep. Answers must not change.
    bool use_extension_rule = true;
};

/// Solver for Dominating Induced Path P<k>. Same segment machinery as the
/// cycle solver, minus the close move: a vertex adjacent to both ends of one
/// segment would always create a chordal cycle, so it is invalid. Budget: s
/// segments still need s-1 junction vertices to merge into one path, so a
/// move leaving s segments and r unassigned roles needs r >= s-1. The
/// extension rule branches on the combined neighborhoods of the two ends of
/// the segment for which that union is smallest; completions must extend or
/// merge existing segments through exactly such vertices, so the sweep is
/// exhaustive.
class PathStrategy : public BranchStrategy {
public:
    PathStrategy(SearchContext & ctx, int k, PathOptions opts = {});

    void candidates(int depth, std::vector<Candidate> & out) override;
    void apply(const Candidate & c) override;
    void unapply(const Candidate & c) override;
    bool complete() const override;
    void witness(std::vector<int> & role_to_vertex) const override;

    PathClass classify(int v) const;
    const SegmentStore & store() const { return store_; }
    SegmentStore & store() { return store_; }
    void check_invariants() const;

private:
    SearchContext & ctx_;
    int k_;
    PathOptions opts_;
    SegmentStore store_;
    std::vector<SegmentStore::Move> moves_;
    std::vector<int> list_buf_;
};

SolveOutcome solve_path(const Graph & g, int k, const SolverConfig & cfg = {}, PathOptions opts = {});

} // namespace domh
