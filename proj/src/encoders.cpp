#include <domh/encoders.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using std::vector;

namespace domh {

namespace {

auto closed_neighborhood(const Graph & g, int v) -> vector<int>
{
    vector<int> out = g.adj[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

auto at_most_one(CnfFormula & f, SatMode mode, const vector<int> & members) -> void
{
    int t = int(members.size());
    if (t < 2)
        return;
    if (mode == SatMode::Pairwise) {
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                f.clauses.push_back({-members[i], -members[j]});
        return;
    }
    // sequential chain: aux s_i records "one of the first i members is set"
    int first_aux = f.num_vars + 1;
    f.num_vars += t - 1;
    f.ladder_groups.push_back(LadderGroup{members, first_aux});
    auto aux = [&](int i) { return first_aux + i - 1; }; // s_i, 1-based
    for (int i = 1; i <= t - 1; ++i)
        f.clauses.push_back({-members[i - 1], aux(i)});
    for (int i = 2; i <= t - 1; ++i)
        f.clauses.push_back({-aux(i - 1), aux(i)});
    for (int i = 2; i <= t; ++i)
        f.clauses.push_back({-members[i - 1], -aux(i - 1)});
}

/// Ordered pairs of role pairs and host pairs whose simultaneous assignment
/// is forbidden: pattern edge onto host non-edge and pattern non-edge onto
/// host edge, both ways around.
template <typename Fn>
auto for_each_conflict(const Graph & g, const PatternSpec & h, Fn && emit) -> void
{
    int k = h.num_vertices();
    for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
            bool pattern_edge = h.adjacent(p, q);
            for (int u = 0; u < g.n; ++u) {
                for (int v = u + 1; v < g.n; ++v) {
                    if (g.adjacent(u, v) == pattern_edge)
                        continue;
                    emit(u, p, v, q);
                    emit(v, p, u, q);
                }
            }
        }
    }
}

} // namespace

auto encode_sat(const Graph & g, const PatternSpec & h, SatMode mode) -> std::pair<CnfFormula, VarMap>
{
    if (g.n < 1)
        throw std::invalid_argument("host graph has no vertices");
    VarMap vm{g.n, h.num_vertices()};
    CnfFormula f;
    f.num_vars = vm.primaries();

    for (int p = 0; p < vm.k; ++p) {
        vector<int> clause;
        for (int v = 0; v < vm.n; ++v)
            clause.push_back(vm.var(v, p));
        f.clauses.push_back(std::move(clause));
    }
    for (int p = 0; p < vm.k; ++p) {
        vector<int> members;
        for (int v = 0; v < vm.n; ++v)
            members.push_back(vm.var(v, p));
        at_most_one(f, mode, members);
    }
    for (int v = 0; v < vm.n; ++v) {
        vector<int> clause;
        auto closed = closed_neighborhood(g, v);
        for (int p = 0; p < vm.k; ++p)
            for (int u : closed)
                clause.push_back(vm.var(u, p));
        f.clauses.push_back(std::move(clause));
    }
    for (int v = 0; v < vm.n; ++v) {
        vector<int> members;
        for (int p = 0; p < vm.k; ++p)
            members.push_back(vm.var(v, p));
        at_most_one(f, mode, members);
    }
    for_each_conflict(g, h, [&](int u, int p, int v, int q) {
        at_most_one(f, mode, {vm.var(u, p), vm.var(v, q)});
    });
    return {std::move(f), vm};
}

auto LpModel::var_name(int idx) const -> std::string
{
    return "x_" + std::to_string(idx % n) + "_" + std::to_string(idx / n);
}

auto encode_ilp(const Graph & g, const PatternSpec & h) -> std::pair<LpModel, VarMap>
{
    if (g.n < 1)
        throw std::invalid_argument("host graph has no vertices");
    VarMap vm{g.n, h.num_vertices()};
    LpModel m;
    m.n = vm.n;
    m.k = vm.k;

    for (int p = 0; p < vm.k; ++p) {
        LpRow row{"a" + std::to_string(p), {}, 'E', 1};
        for (int v = 0; v < vm.n; ++v)
            row.terms.emplace_back(1, vm.var(v, p) - 1);
        m.rows.push_back(std::move(row));
    }
    for (int v = 0; v < vm.n; ++v) {
        LpRow row{"d" + std::to_string(v), {}, 'G', 1};
        auto closed = closed_neighborhood(g, v);
        for (int p = 0; p < vm.k; ++p)
            for (int u : closed)
                row.terms.emplace_back(1, vm.var(u, p) - 1);
        m.rows.push_back(std::move(row));
    }
    for (int v = 0; v < vm.n; ++v) {
        LpRow row{"i" + std::to_string(v), {}, 'L', 1};
        for (int p = 0; p < vm.k; ++p)
            row.terms.emplace_back(1, vm.var(v, p) - 1);
        m.rows.push_back(std::move(row));
    }
    int next_conflict = 0;
    for_each_conflict(g, h, [&](int u, int p, int v, int q) {
        LpRow row{"c" + std::to_string(next_conflict++), {}, 'L', 1};
        row.terms.emplace_back(1, vm.var(u, p) - 1);
        row.terms.emplace_back(1, vm.var(v, q) - 1);
        m.rows.push_back(std::move(row));
    });
    return {std::move(m), vm};
}

auto write_dimacs(const CnfFormula & f, const VarMap & vm) -> std::string
{
    std::ostringstream out;
    for (int idx = 1; idx <= vm.primaries(); ++idx)
        out << "c x " << idx << " " << vm.vertex_of(idx) << " " << vm.role_of(idx) << "\n";
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto & cl : f.clauses) {
        for (int lit : cl)
            out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

auto write_lp(const LpModel & m) -> std::string
{
    std::ostringstream out;
    out << "Minimize\n obj: 0";
    if (m.n * m.k > 0)
        out << " " << m.var_name(0);
    out << "\nSubject To\n";
    for (const auto & row : m.rows) {
        out << " " << row.name << ":";
        for (size_t i = 0; i < row.terms.size(); ++i) {
            auto [coeff, idx] = row.terms[i];
            out << (i == 0 ? " " : " + ");
            if (coeff != 1)
                out << coeff << " ";
            out << m.var_name(idx);
        }
        const char * rel = row.sense == 'L' ? "<=" : row.sense == 'G' ? ">=" : "=";
        out << " " << rel << " " << row.rhs << "\n";
    }
    out << "Binary\n";
    for (int idx = 0; idx < m.n * m.k; ++idx)
        out << " " << m.var_name(idx) << "\n";
    out << "End\n";
    return out.str();
}

auto eval_cnf(const CnfFormula & f, const vector<uint8_t> & assignment) -> bool
{
    for (const auto & cl : f.clauses) {
        bool sat = false;
        for (int lit : cl) {
            int v = lit > 0 ? lit : -lit;
            if ((assignment[v] != 0) == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (! sat)
            return false;
    }
    return true;
}

auto witness_assignment(const CnfFormula & f, const VarMap & vm, const vector<int> & witness)
    -> vector<uint8_t>
{
    vector<uint8_t> assignment(f.num_vars + 1, 0);
    for (int p = 0; p < vm.k; ++p)
        assignment[vm.var(witness[p], p)] = 1;
    for (const auto & group : f.ladder_groups) {
        uint8_t running = 0;
        for (size_t i = 0; i + 1 < group.members.size(); ++i) {
            running |= assignment[group.members[i]];
            assignment[group.first_aux + int(i)] = running;
        }
    }
    return assignment;
}

namespace {

struct DpllState {
    const CnfFormula & f;
    vector<vector<int>> occ; // var -> clauses containing it
    int64_t budget;

    explicit DpllState(const CnfFormula & f_, int64_t budget_) : f(f_), budget(budget_)
    {
        occ.resize(f.num_vars + 1);
        for (size_t ci = 0; ci < f.clauses.size(); ++ci)
            for (int lit : f.clauses[ci])
                occ[lit > 0 ? lit : -lit].push_back(int(ci));
    }

    /// Propagate the given clauses and everything they trigger. Returns
    /// false on conflict. a holds -1 unassigned, else 0/1.
    auto propagate(vector<int8_t> & a, vector<int> initial_clauses) -> bool
    {
        vector<int> queue = std::move(initial_clauses);
        size_t head = 0;
        while (head < queue.size()) {
            int ci = queue[head++];
            const auto & cl = f.clauses[ci];
            int free_lit = 0;
            int free_count = 0;
            bool sat = false;
            for (int lit : cl) {
                int v = lit > 0 ? lit : -lit;
                if (a[v] < 0) {
                    ++free_count;
                    free_lit = lit;
                    if (free_count > 1)
                        break;
                }
                else if ((a[v] == 1) == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (sat || free_count > 1)
                continue;
            if (free_count == 0)
                return false;
            int v = free_lit > 0 ? free_lit : -free_lit;
            a[v] = free_lit > 0 ? 1 : 0;
            for (int next : occ[v])
                queue.push_back(next);
        }
        return true;
    }

    auto search(vector<int8_t> a, vector<int> trigger, vector<uint8_t> & model) -> SatVerdict
    {
        if (! propagate(a, std::move(trigger)))
            return SatVerdict::Unsat;
        int branch_var = 0;
        for (int v = 1; v <= f.num_vars; ++v) {
            if (a[v] < 0) {
                branch_var = v;
                break;
            }
        }
        if (branch_var == 0) {
            model.assign(f.num_vars + 1, 0);
            for (int v = 1; v <= f.num_vars; ++v)
                model[v] = a[v] == 1;
            return SatVerdict::Sat;
        }
        if (budget == 0)
            return SatVerdict::Unknown;
        --budget;
        for (int8_t value : {int8_t(1), int8_t(0)}) {
            vector<int8_t> child = a;
            child[branch_var] = value;
            SatVerdict sub = search(std::move(child), occ[branch_var], model);
            if (sub != SatVerdict::Unsat)
                return sub;
        }
        return SatVerdict::Unsat;
    }
};

} // namespace

auto mini_dpll(const CnfFormula & f, int64_t budget) -> DpllResult
{
    if (budget <= 0)
        throw std::invalid_argument("mini_dpll budget must be positive");
    DpllState state{f, budget};
    vector<int8_t> a(f.num_vars + 1, -1);
    vector<int> all_clauses(f.clauses.size());
    for (size_t i = 0; i < all_clauses.size(); ++i)
        all_clauses[i] = int(i);
    DpllResult result;
    result.verdict = state.search(std::move(a), std::move(all_clauses), result.model);
    if (result.verdict == SatVerdict::Sat && ! eval_cnf(f, result.model))
        throw std::logic_error("sat model failed re-evaluation");
    if (result.verdict != SatVerdict::Sat)
        result.model.clear();
    return result;
}

auto decode_model(const VarMap & vm, const vector<uint8_t> & model) -> std::optional<vector<int>>
{
    vector<int> witness(vm.k, -1);
    for (int p = 0; p < vm.k; ++p) {
        for (int v = 0; v < vm.n; ++v) {
            if (model[vm.var(v, p)]) {
                if (witness[p] >= 0)
                    return std::nullopt;
                witness[p] = v;
            }
        }
        if (witness[p] < 0)
            return std::nullopt;
    }
    return witness;
}

} // namespace domh
