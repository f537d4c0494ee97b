#include <domh/oracle.hpp>
#include <domh/verify.hpp>

#include <chrono>
#include <stdexcept>

using std::vector;

namespace domh {

namespace {

struct Enumerator {
    const Graph & g;
    const PatternSpec & h;
    const std::function<bool(const vector<int> &)> & fn;
    int r;
    vector<vector<int>> auts;
    vector<int> image;
    vector<bool> used;
    uint64_t steps = 0;
    int64_t timeout_ms;
    std::chrono::steady_clock::time_point started;
    bool stopped = false;
    bool timed_out = false;

    Enumerator(const Graph & g_, const PatternSpec & h_,
        const std::function<bool(const vector<int> &)> & fn_, int64_t timeout_ms_) :
        g(g_), h(h_), fn(fn_), r(h_.num_vertices()), auts(automorphisms(h_)),
        image(r, -1), used(g_.n, false), timeout_ms(timeout_ms_),
        started(std::chrono::steady_clock::now())
    {
    }

    bool canonical() const
    {
        // keep only the lexicographically smallest image tuple among all
        // re-labelings of the pattern
        for (auto & a : auts) {
            for (int p = 0; p < r; ++p) {
                int lhs = image[a[p]], rhs = image[p];
                if (lhs < rhs)
                    return false;
                if (lhs > rhs)
                    break;
            }
        }
        return true;
    }

    bool out_of_time()
    {
        if (timeout_ms < 0)
            return false;
        if (++steps % 1024 != 0)
            return false;
        auto ms = std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started).count();
        return ms > double(timeout_ms);
    }

    void walk(int p)
    {
        if (stopped)
            return;
        if (p == r) {
            if (canonical() && ! fn(image))
                stopped = true;
            return;
        }
        for (int v = 0; v < g.n && ! stopped; ++v) {
            if (used[v])
                continue;
            if (out_of_time()) {
                stopped = true;
                timed_out = true;
                return;
            }
            bool ok = true;
            for (int q = 0; q < p; ++q) {
                if (h.adjacent(q, p) != g.adjacent(image[q], v)) {
                    ok = false;
                    break;
                }
            }
            if (! ok)
                continue;
            image[p] = v;
            used[v] = true;
            walk(p + 1);
            used[v] = false;
            image[p] = -1;
        }
    }
};

} // namespace

auto for_each_occurrence(const Graph & g, const PatternSpec & h,
    const std::function<bool(const vector<int> &)> & fn, int64_t timeout_ms) -> bool
{
    if (h.num_vertices() > max_pattern_vertices)
        throw PatternError("pattern too large for enumeration");
    Enumerator e{g, h, fn, timeout_ms};
    e.walk(0);
    if (e.timed_out)
        return false;
    return ! e.stopped;
}

auto solve_oracle(const Graph & g, const PatternSpec & h, const SolverConfig & cfg) -> SolveOutcome
{
    auto started = std::chrono::steady_clock::now();
    SolveOutcome out;

    bool exhausted = for_each_occurrence(g, h, [&](const vector<int> & image) {
        ++out.stats.nodes;
        if (is_dominating(g, image)) {
            out.witness = image;
            return false;
        }
        return true;
    }, cfg.timeout_ms);

    if (! out.witness.empty()) {
        std::string reason;
        if (! verify_solution(g, h, out.witness, &reason))
            throw std::logic_error("oracle produced an invalid witness: " + reason);
        out.status = SolveStatus::Found;
    }
    else {
        out.status = exhausted ? SolveStatus::NotFound : SolveStatus::Timeout;
    }
    out.stats.max_depth = h.num_vertices();
    out.stats.wall_ms = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started).count();
    return out;
}

auto count_occurrences(const Graph & g, const PatternSpec & h, int64_t timeout_ms) -> OccurrenceCounts
{
    OccurrenceCounts counts;
    bool exhausted = for_each_occurrence(g, h, [&](const vector<int> & image) {
        ++counts.occurrences;
        if (is_dominating(g, image))
            ++counts.dominating;
        return true;
    }, timeout_ms);
    counts.timed_out = ! exhausted;
    return counts;
}

} // namespace domh
