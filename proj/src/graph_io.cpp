#include "poenum/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace poe {

namespace {
[[noreturn]] void fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}
}

MultiGraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    long seen = 0;
    MultiGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;  // blank
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a) || !(ls >> b)) fail(lineno, "expected two integers");
        std::string extra;
        if (ls >> extra) fail(lineno, "trailing token '" + extra + "'");
        if (n < 0) {
            if (a < 0 || b < 0) fail(lineno, "n and m must be non-negative");
            n = a;
            m = b;
            for (long i = 0; i < n; ++i) g.add_vertex();
            continue;
        }
        if (seen == m) fail(lineno, "more than the declared " + std::to_string(m) + " edges");
        if (a < 0 || a >= n || b < 0 || b >= n) fail(lineno, "vertex index out of range");
        if (a == b) fail(lineno, "self-loops are not allowed");
        g.add_edge((VertexId)a, (VertexId)b);
        ++seen;
    }
    if (n < 0) throw input_error("empty input: missing header line `n m`");
    if (seen != m)
        throw input_error("declared " + std::to_string(m) + " edges but found " +
                          std::to_string(seen));
    return g;
}

MultiGraph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeId e = g.first_live_edge(); e != MultiGraph::kNil; e = g.next_live_edge(e))
        out << g.edge_u(e) << " " << g.edge_v(e) << "\n";
}

bool is_simple(const MultiGraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = g.first_live_edge(); e != MultiGraph::kNil; e = g.next_live_edge(e)) {
        VertexId u = g.edge_u(e), v = g.edge_v(e);
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) return false;
    }
    return true;
}

}  // namespace poe
