#pragma once

#include <domh/bnb.hpp>

namespace domh {

/// What assigning a host vertex would mean for the induced matching under
/// construction, judged by its number of assigned dominators D: D = 0 starts
/// a new edge, D = 1 with the dominator a started endpoint finishes that
/// edge, anything else breaks induced-ness.
enum class MatchingAction {
    StartEdge,
    FinishEdge,
    Invalid
};

struct MatchingClass {
    MatchingAction action = MatchingAction::Invalid;
    int partner = -1; // started endpoint being finished
};

/// Solver for Dominating Induced Matching M<k>. Keeps started edges (one
/// endpoint placed) and finished edges; branches either on the closed
/// neighborhood of the minimum-degree undominated vertex or on the open
/// neighborhood of the minimum-degree started endpoint, whichever list is
/// shorter.
class MatchingStrategy : public BranchStrategy {
public:
    MatchingStrategy(SearchContext & ctx, int k);

    void candidates(int depth, std::vector<Candidate> & out) override;
    void apply(const Candidate & c) override;
    void unapply(const Candidate & c) override;
    bool complete() const override;
    void witness(std::vector<int> & role_to_vertex) const override;

    MatchingClass classify(int v) const;

    const std::vector<int> & started() const { return started_; }
    const std::vector<std::pair<int, int>> & finished() const { return finished_; }

    /// Structural sanity of the partial state; cheap enough for tests to
    /// call after every move.
    void check_invariants() const;

private:
    enum Tag { tag_start = 0, tag_finish = 1 };

    SearchContext & ctx_;
    int k_;
    std::vector<int> started_;
    std::vector<std::pair<int, int>> finished_;
    int unstarted_ = 0;
    std::vector<int> undo_pos_; // started_ index a finish removed from
    std::vector<int> list_buf_;
};

SolveOutcome solve_matching(const Graph & g, int k, const SolverConfig & cfg = {});

} // namespace domh
