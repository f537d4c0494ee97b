#pragma once

#include <domh/graph.hpp>
#include <domh/pattern.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domh {

/// Variable layout shared by the CNF and LP encodings: one boolean per
/// (host vertex v, pattern role p) pair meaning "v plays p". Indices are
/// 1-based and role-major; ladder auxiliaries live strictly above the
/// primaries.
struct VarMap {
    int n = 0; // host vertices
    int k = 0; // pattern roles

    int primaries() const { return n * k; }
    int var(int v, int p) const { return 1 + p * n + v; }
    int vertex_of(int idx) const { return (idx - 1) % n; }
    int role_of(int idx) const { return (idx - 1) / n; }
};

/// One at-most-one group compiled with the sequential encoding. members
/// lists the guarded variables in order; the auxiliaries first_aux ..
/// first_aux + |members| - 2 form the prefix-or chain.
struct LadderGroup {
    std::vector<int> members;
    int first_aux = 0;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<LadderGroup> ladder_groups; // empty in pairwise mode
};

enum class SatMode {
    Pairwise, // each at-most-one over t variables costs t(t-1)/2 binary clauses
    Ladder    // sequential encoding: t-1 auxiliaries, 3t-4 clauses (t >= 2)
};

/// CNF for "g contains a dominating induced copy of h". Clause groups, in
/// emission order: per-role at-least-one, per-role at-most-one, per-host-
/// vertex domination, per-host-vertex at-most-one (a vertex plays at most
/// one role), and pair conflicts forbidding maps that break an edge or a
/// non-edge. Emission is role-major then vertex id, so output is
/// byte-stable.
std::pair<CnfFormula, VarMap> encode_sat(const Graph & g, const PatternSpec & h, SatMode mode);

struct LpRow {
    std::string name;
    std::vector<std::pair<int, int>> terms; // (coefficient, 0-based variable index)
    char sense = 'L';                       // 'L' <=, 'G' >=, 'E' =
    int rhs = 0;
};

/// Integer program over the same binary variable grid. Row groups: a<p>
/// (each role used exactly once), d<v> (domination), i<v> (at most one role
/// per host vertex), c<j> (pair conflicts).
struct LpModel {
    int n = 0;
    int k = 0;
    std::vector<LpRow> rows;

    std::string var_name(int idx) const; // "x_<v>_<p>"
};

std::pair<LpModel, VarMap> encode_ilp(const Graph & g, const PatternSpec & h);

/// DIMACS text: "c x <idx> <v> <p>" comments recording the variable map,
/// then the "p cnf" header and 0-terminated clauses.
std::string write_dimacs(const CnfFormula & f, const VarMap & vm);

/// CPLEX-LP text with sections Minimize (constant zero objective),
/// Subject To, Binary, End.
std::string write_lp(const LpModel & m);

/// assignment is 1-based over all variables; index 0 is ignored. True iff
/// every clause has a satisfied literal (vacuously true when empty).
bool eval_cnf(const CnfFormula & f, const std::vector<uint8_t> & assignment);

/// Total assignment induced by a role->vertex witness: primary variables
/// from the map, ladder auxiliaries from their prefix-or definition.
std::vector<uint8_t> witness_assignment(const CnfFormula & f, const VarMap & vm,
    const std::vector<int> & witness);

enum class SatVerdict {
    Sat,
    Unsat,
    Unknown
};

struct DpllResult {
    SatVerdict verdict = SatVerdict::Unknown;
    std::vector<uint8_t> model; // 1-based; only meaningful for Sat
};

/// Small complete solver: unit propagation plus two-way branching on the
/// first unassigned variable. budget caps branch nodes; exhausting it
/// yields Unknown. Sat models are re-checked with eval_cnf before being
/// returned.
DpllResult mini_dpll(const CnfFormula & f, int64_t budget);

/// Role->vertex map read off a model's primary variables, or nullopt if
/// some role does not have exactly one vertex set.
std::optional<std::vector<int>> decode_model(const VarMap & vm, const std::vector<uint8_t> & model);

} // namespace domh
