#include <domh/bnb.hpp>
#include <domh/verify.hpp>

#include <chrono>
#include <stdexcept>

namespace domh {

namespace {

struct Frame {
    std::vector<Candidate> cands;
    size_t idx = 0;
};

} // namespace

auto run_bnb(const Graph & g, const PatternSpec & h, BranchStrategy & strategy,
    SearchContext & ctx, const SolverConfig & cfg) -> SolveOutcome
{
    using clock = std::chrono::steady_clock;
    auto started = clock::now();

    SolveOutcome out;
    auto elapsed_ms = [&]() {
        return std::chrono::duration<double, std::milli>(clock::now() - started).count();
    };

    int roles = h.num_vertices();

    // root-level bound: an empty assignment already fails if the scattered
    // set is bigger than the whole pattern
    if (ctx.scatter_enabled && ctx.scatter.prune(0, roles)) {
        out.status = SolveStatus::NotFound;
        out.stats.wall_ms = elapsed_ms();
        return out;
    }

    // frames[d] holds the candidate list entered with d roles assigned; for
    // every frame below the top, cands[idx] is currently applied
    std::vector<Frame> frames(roles + 1);
    int top = 0;
    frames[0].cands.clear();
    frames[0].idx = 0;
    strategy.candidates(0, frames[0].cands);

    auto unwind = [&](bool include_current) {
        if (include_current)
            strategy.unapply(frames[top].cands[frames[top].idx]);
        for (int t = top - 1; t >= 0; --t)
            strategy.unapply(frames[t].cands[frames[t].idx]);
    };

    while (true) {
        Frame & f = frames[top];
        if (f.idx >= f.cands.size()) {
            if (top == 0) {
                out.status = SolveStatus::NotFound;
                break;
            }
            --top;
            Frame & parent = frames[top];
            strategy.unapply(parent.cands[parent.idx]);
            ++parent.idx;
            continue;
        }

        const Candidate & c = f.cands[f.idx];
        strategy.apply(c);
        ++out.stats.nodes;
        if (ctx.assign.count() > out.stats.max_depth)
            out.stats.max_depth = ctx.assign.count();

        if (strategy.complete()) {
            if (is_dominating(g, ctx.assign.assigned)) {
                out.witness.assign(roles, -1);
                strategy.witness(out.witness);
                std::string reason;
                if (! verify_solution(g, h, out.witness, &reason))
                    throw std::logic_error("solver produced an invalid witness: " + reason);
                unwind(true);
                out.status = SolveStatus::Found;
                break;
            }
            strategy.unapply(c);
            ++f.idx;
            continue;
        }

        if (out.stats.nodes % uint64_t(cfg.check_interval) == 0 && elapsed_ms() > double(cfg.timeout_ms)) {
            unwind(true);
            out.status = SolveStatus::Timeout;
            break;
        }

        if ((ctx.scatter_enabled && ctx.scatter.prune(ctx.assign.count(), roles)) || strategy.bound()) {
            strategy.unapply(c);
            ++f.idx;
            continue;
        }

        if (ctx.assign.count() >= roles)
            throw std::logic_error("strategy not complete at full depth");
        ++top;
        frames[top].cands.clear();
        frames[top].idx = 0;
        strategy.candidates(ctx.assign.count(), frames[top].cands);
    }

    if (ctx.assign.count() != 0)
        throw std::logic_error("search state not fully unwound");
    out.stats.wall_ms = elapsed_ms();
    return out;
}

} // namespace domh
