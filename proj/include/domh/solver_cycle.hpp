#pragma once

#include <domh/bnb.hpp>
#include <domh/segments.hpp>

namespace domh {

/// Role of a host vertex relative to the segments, judged by D_end (assigned
/// dominators that are segment ends) with the requirement that every
/// dominator IS such an end (otherwise a chord would appear).
enum class CycleAction {
    NewSegment,
    Append,
    Join,
    Close,
    Invalid
};

struct CycleClass {
    CycleAction action = CycleAction::Invalid;
    int end1 = -1;
    int end2 = -1;
};

/// Solver for Dominating Induced Cycle C<k>. Grows vertex-disjoint induced
/// paths; a vertex adjacent to zero ends opens a segment, to one end extends
/// it, to the two ends of distinct segments merges them, and to both ends of
/// the sole segment closes the cycle (only as the final vertex). Budget: a
/// move leaving s segments and r unassigned roles needs r >= s, since every
/// segment still costs at least one junction vertex to close up.
class CycleStrategy : public BranchStrategy {
public:
    CycleStrategy(SearchContext & ctx, int k);

    void candidates(int depth, std::vector<Candidate> & out) override;
    void apply(const Candidate & c) override;
    void unapply(const Candidate & c) override;
    bool complete() const override;
    void witness(std::vector<int> & role_to_vertex) const override;

    CycleClass classify(int v) const;
    const SegmentStore & store() const { return store_; }
    SegmentStore & store() { return store_; }
    void check_invariants() const;

private:
    SearchContext & ctx_;
    int k_;
    SegmentStore store_;
    std::vector<SegmentStore::Move> moves_;
    std::vector<int> list_buf_;
};

SolveOutcome solve_cycle(const Graph & g, int k, const SolverConfig & cfg = {});

} // namespace domh
