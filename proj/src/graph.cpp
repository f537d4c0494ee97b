#include <domh/graph.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace domh {

namespace {

auto is_blank(string_view s) -> bool
{
    for (char c : s)
        if (! std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

auto split_lines(string_view text) -> vector<string_view>
{
    vector<string_view> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

struct ParsedHeader {
    bool present = false;
    int n = 0;
    long long m = 0;
};

auto parse_p_header(string_view line, ParsedHeader & out) -> void
{
    std::istringstream in{string(line)};
    string p, kind;
    long long n = -1, m = -1;
    in >> p >> kind >> n >> m;
    if (in.fail() || kind != "edge")
        throw GraphFormatError("bad problem line: '" + string(line) + "'");
    if (n < 0 || m < 0)
        throw GraphFormatError("negative counts in problem line");
    out.present = true;
    out.n = int(n);
    out.m = m;
}

auto parse_edge_list(string_view text) -> Graph
{
    ParsedHeader header;
    vector<std::pair<int, int>> edges;
    long long max_id = -1;

    for (auto line : split_lines(text)) {
        if (is_blank(line) || line.front() == '#' || line.front() == 'c')
            continue;
        if (line.front() == 'p') {
            if (header.present || ! edges.empty())
                throw GraphFormatError("problem line must come first");
            parse_p_header(line, header);
            continue;
        }
        std::istringstream in{string(line)};
        long long u = -1, v = -1;
        in >> u >> v;
        string rest;
        if (in.fail() || (in >> rest))
            throw GraphFormatError("bad edge line: '" + string(line) + "'");
        if (u < 0 || v < 0)
            throw GraphFormatError("negative vertex id");
        if (u == v)
            throw GraphFormatError("self-loop at vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(int(u), int(v));
    }

    if (! header.present && edges.empty())
        throw GraphFormatError("empty graph input");

    int n = header.present ? header.n : int(max_id + 1);
    if (header.present && max_id >= n)
        throw GraphFormatError("vertex id " + std::to_string(max_id) + " out of range (n = " + std::to_string(n) + ")");
    return Graph::from_edges(n, edges);
}

auto parse_dimacs(string_view text) -> Graph
{
    ParsedHeader header;
    vector<std::pair<int, int>> edges;
    long long max_id = 0;

    for (auto line : split_lines(text)) {
        if (is_blank(line) || line.front() == 'c')
            continue;
        if (line.front() == 'p') {
            if (header.present)
                throw GraphFormatError("duplicate problem line");
            parse_p_header(line, header);
            continue;
        }
        if (line.front() == 'e') {
            std::istringstream in{string(line)};
            string e;
            long long u = 0, v = 0;
            in >> e >> u >> v;
            if (in.fail() || e != "e")
                throw GraphFormatError("bad edge line: '" + string(line) + "'");
            if (u < 1 || v < 1)
                throw GraphFormatError("dimacs vertex ids are 1-based");
            if (u == v)
                throw GraphFormatError("self-loop at vertex " + std::to_string(u));
            max_id = std::max({max_id, u, v});
            edges.emplace_back(int(u - 1), int(v - 1));
            continue;
        }
        throw GraphFormatError("unrecognized line: '" + string(line) + "'");
    }

    if (! header.present && edges.empty())
        throw GraphFormatError("empty graph input");

    int n = header.present ? header.n : int(max_id);
    if (max_id > n)
        throw GraphFormatError("vertex id " + std::to_string(max_id) + " out of range (n = " + std::to_string(n) + ")");
    return Graph::from_edges(n, edges);
}

// graph6: 6 bits per printable byte (offset 63), upper triangle in column
// order. Small sizes use one length byte, 63 <= n <= 258047 the 4-byte form.
auto parse_graph6(string_view text) -> Graph
{
    string_view line;
    for (auto l : split_lines(text)) {
        if (! is_blank(l)) {
            line = l;
            break;
        }
    }
    if (line.empty())
        throw GraphFormatError("empty graph input");
    if (line.rfind(">>graph6<<", 0) == 0)
        line.remove_prefix(10);
    while (! line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
        line.remove_suffix(1);
    if (line.empty())
        throw GraphFormatError("empty graph6 line");

    size_t pos = 0;
    auto need = [&](size_t count) {
        if (line.size() - pos < count)
            throw GraphFormatError("truncated graph6 input");
    };
    auto sixbits = [&]() -> int {
        unsigned char c = line[pos++];
        if (c < 63 || c > 126)
            throw GraphFormatError("graph6 byte out of range");
        return c - 63;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(line[pos]) == 126) {
        ++pos;
        need(3);
        int a = sixbits(), b = sixbits(), c = sixbits();
        n = (long long(a) << 12) | (b << 6) | c;
        if (n < 63)
            throw GraphFormatError("non-canonical graph6 length");
        if (n > 258047)
            throw GraphFormatError("graph6 input too large");
    }
    else {
        n = sixbits();
    }
    if (n == 0)
        throw GraphFormatError("graph6 graph has no vertices");

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    need(size_t(nbytes));

    vector<std::pair<int, int>> edges;
    long long bit = 0;
    int group = 0, group_left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (group_left == 0) {
                group = sixbits();
                group_left = 6;
            }
            --group_left;
            if ((group >> group_left) & 1)
                edges.emplace_back(i, j);
            ++bit;
        }
    }
    // padding bits must be zero, and nothing may follow
    if (group_left > 0 && (group & ((1 << group_left) - 1)) != 0)
        throw GraphFormatError("nonzero graph6 padding");
    if (pos != line.size())
        throw GraphFormatError("trailing bytes after graph6 data");
    (void)bit;

    return Graph::from_edges(int(n), edges);
}

} // namespace

auto Graph::from_edges(int n, const vector<std::pair<int, int>> & edges) -> Graph
{
    if (n <= 0)
        throw GraphFormatError("graph must have at least one vertex");

    Graph g;
    g.n = n;
    g.adj.assign(n, {});

    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphFormatError("vertex id out of range");
        if (u == v)
            throw GraphFormatError("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }

    g.m = 0;
    for (int v = 0; v < n; ++v) {
        auto & a = g.adj[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += long long(a.size());
    }
    g.m /= 2;

    g.nbr_member.resize(n);
    g.dom_matrix.assign(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        g.nbr_member[v].insert(g.adj[v].begin(), g.adj[v].end());
        g.dom_matrix[v].set(v);
        for (int u : g.adj[v])
            g.dom_matrix[v].set(u);
    }

    g.degree_order.resize(n);
    for (int v = 0; v < n; ++v)
        g.degree_order[v] = v;
    std::stable_sort(g.degree_order.begin(), g.degree_order.end(), [&](int a, int b) {
        if (g.adj[a].size() != g.adj[b].size())
            return g.adj[a].size() < g.adj[b].size();
        return a < b;
    });

    return g;
}

auto load_graph(string_view text, GraphFormat format) -> Graph
{
    switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::Graph6: return parse_graph6(text);
    }
    throw GraphFormatError("unknown graph format");
}

auto guess_graph_format(const string & path) -> GraphFormat
{
    auto ends_with = [&](string_view suffix) {
        return path.size() >= suffix.size() &&
            path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".g6") || ends_with(".graph6"))
        return GraphFormat::Graph6;
    if (ends_with(".col") || ends_with(".dimacs"))
        return GraphFormat::Dimacs;
    return GraphFormat::EdgeList;
}

auto load_graph_file(const string & path, GraphFormat format) -> Graph
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw GraphFormatError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str(), format);
}

auto load_graph_file(const string & path) -> Graph
{
    return load_graph_file(path, guess_graph_format(path));
}

auto encode_graph6(const Graph & g) -> string
{
    string out;
    if (g.n <= 62) {
        out.push_back(char(g.n + 63));
    }
    else if (g.n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((g.n >> 12) & 63) + 63));
        out.push_back(char(((g.n >> 6) & 63) + 63));
        out.push_back(char((g.n & 63) + 63));
    }
    else {
        throw GraphFormatError("graph too large for graph6 encoder");
    }

    int group = 0, bits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(char(group + 63));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(char((group << (6 - bits)) + 63));
    return out;
}

} // namespace domh
