#pragma once

#include <domh/bitset.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace domh {

class GraphFormatError : public std::runtime_error {
public:
    explicit GraphFormatError(const std::string & what) : std::runtime_error(what) {}
};

enum class GraphFormat {
    EdgeList,
    Dimacs,
    Graph6
};

/// Undirected simple graph, vertices 0..n-1. Everything derived (sorted
/// adjacency, neighbor hash sets, closed-neighborhood rows, degree order) is
/// materialized once at construction and read-only afterwards.
struct Graph {
    int n = 0;
    long long m = 0;

    /// adj[v]: neighbors of v in ascending order.
    std::vector<std::vector<int>> adj;

    /// nbr_member[v]: same neighbors as a hash set, for O(1) adjacency tests.
    std::vector<std::unordered_set<int>> nbr_member;

    /// dom_matrix[v]: closed neighborhood N[v] as a bit row. A vertex set S
    /// dominates iff the OR of its rows is all-ones.
    std::vector<Bitset> dom_matrix;

    /// All vertices sorted by (degree, id) ascending.
    std::vector<int> degree_order;

    int degree(int v) const { return int(adj[v].size()); }

    bool adjacent(int u, int v) const
    {
        return u != v && nbr_member[u].count(v) > 0;
    }

    /// Build from an edge list. Duplicate edges are collapsed; self-loops are
    /// rejected. n must cover every endpoint.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>> & edges);
};

/// Parse a graph from text in the given format. Throws GraphFormatError on
/// malformed input, out-of-range vertex ids, self-loops, or empty input.
Graph load_graph(std::string_view text, GraphFormat format);

/// Format implied by a file name: .g6/.graph6 are graph6, .col/.dimacs are
/// dimacs, anything else an edge list.
GraphFormat guess_graph_format(const std::string & path);

/// Read and parse a graph file, format from the name unless given
/// explicitly. Unreadable files throw GraphFormatError.
Graph load_graph_file(const std::string & path);
Graph load_graph_file(const std::string & path, GraphFormat format);

/// Canonical graph6 encoding (one line, no trailing newline).
std::string encode_graph6(const Graph & g);

} // namespace domh
