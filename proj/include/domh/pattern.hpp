#pragma once

#include <domh/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domh {

class PatternError : public std::runtime_error {
public:
    explicit PatternError(const std::string & what) : std::runtime_error(what) {}
};

enum class PatternKind {
    Matching, // M<k>: k disjoint edges, 2k vertices
    Cycle,    // C<k>: induced cycle on k >= 3 vertices
    Path,     // P<k>: induced path on k >= 1 vertices
    Explicit  // arbitrary small graph loaded from a file
};

/// Pattern to search for. Built-in kinds keep their structure symbolic (the
/// tailored solvers only ever look at k); edges/adjacency are computed on
/// demand for the generic solvers and encoders.
struct PatternSpec {
    PatternKind kind;
    int k = 0;                       // parameter of the built-in kinds
    std::optional<Graph> expl;       // only for Explicit

    int num_vertices() const;
    bool adjacent(int p, int q) const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int p) const;

    /// Short display name: "M3", "C5", "P4", or "explicit(<n>)".
    std::string name() const;

    static PatternSpec matching(int k);
    static PatternSpec cycle(int k);
    static PatternSpec path(int k);
    static PatternSpec explicit_graph(Graph g);
};

/// "M<k>" / "C<k>" / "P<k>", or "@<file>" for an explicit pattern file.
/// Explicit files are read with the graph loaders (extension picks the
/// format: .g6/.graph6 -> graph6, .col/.dimacs -> dimacs, else edge list).
PatternSpec parse_pattern(const std::string & spec);

/// Vertex orbits of the pattern's automorphism group. Orbits are numbered by
/// their smallest member, ascending; representatives[i] is that member.
struct OrbitPartition {
    std::vector<int> orbit_of;        // vertex -> orbit index
    std::vector<int> representatives; // orbit index -> smallest vertex
    int num_orbits() const { return int(representatives.size()); }
};

OrbitPartition orbits(const PatternSpec & h);

/// All automorphisms of the pattern, identity included, in lexicographic
/// order of the image tuple. Exponential in the worst case; patterns are
/// capped at 16 vertices and practical ones are far smaller.
std::vector<std::vector<int>> automorphisms(const PatternSpec & h);

/// Largest pattern any of the generic machinery accepts.
inline constexpr int max_pattern_vertices = 16;

} // namespace domh
