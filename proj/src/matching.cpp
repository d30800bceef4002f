#include "poenum/matching.hpp"

#include <algorithm>

#include "poenum/graph_io.hpp"

namespace poe {

void incremental_gplus_walk(MultiGraph& g, VertexId v,
                            const std::function<void(EdgeId, VertexId)>& visit) {
    // Snapshot v's incidence first; the edges stay identifiable after removal.
    std::vector<EdgeId> edges;
    std::vector<VertexId> mates;
    for (int arc = g.adj_first(v); arc != MultiGraph::kNil; arc = g.adj_next(arc)) {
        edges.push_back(MultiGraph::arc_edge(arc));
        mates.push_back(g.arc_other(arc));
    }
    std::size_t outer = g.mark();
    // Shared across all branch states: no edge at v survives in any G+(e_i).
    while (g.adj_first(v) != MultiGraph::kNil)
        g.remove_edge(MultiGraph::arc_edge(g.adj_first(v)));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::size_t inner = g.mark();
        while (g.adj_first(mates[i]) != MultiGraph::kNil)
            g.remove_edge(MultiGraph::arc_edge(g.adj_first(mates[i])));
        visit(edges[i], mates[i]);
        g.rewind(inner);
    }
    g.rewind(outer);
}

namespace {

std::uint64_t match_recurse(MultiGraph& g, std::vector<EdgeId>& m, SolutionSink& sink,
                            TraceRecorder* trace) {
    if (trace) trace->enter(g.op_count());
    if (g.edge_count() == 0) {
        std::vector<int> sol(m.begin(), m.end());
        std::sort(sol.begin(), sol.end());
        if (trace) trace->mark_solution();
        sink.emit_set(sol);
        if (trace) trace->exit(g.op_count(), false);
        return 1;
    }
    // Maximum-degree vertex, smallest id on ties; only non-isolated vertices
    // are on the active list so the scan costs O(|E|).
    VertexId v = MultiGraph::kNil;
    int best = 0;
    for (VertexId x = g.first_active_vertex(); x != MultiGraph::kNil;
         x = g.next_active_vertex(x)) {
        int d = g.degree(x);
        if (d > best || (d == best && x < v)) {
            best = d;
            v = x;
        }
    }
    std::uint64_t count = 0;
    // Branch 1: no edge at v.
    std::size_t mark = g.mark();
    g.remove_vertex(v);
    count += match_recurse(g, m, sink, trace);
    g.rewind(mark);
    // Branches 2..d(v)+1: e_i in the matching.
    incremental_gplus_walk(g, v, [&](EdgeId e, VertexId) {
        m.push_back(e);
        count += match_recurse(g, m, sink, trace);
        m.pop_back();
    });
    if (trace) trace->exit(g.op_count(), false);
    return count;
}

}  // namespace

std::uint64_t enum_matchings(MultiGraph& g, SolutionSink& sink, TraceRecorder* trace) {
    if (!is_simple(g)) throw graph_error("matching enumeration needs a simple graph");
    // Isolated vertices play no role; drop them for the duration of the run.
    std::size_t mark = g.mark();
    std::vector<VertexId> isolated;
    for (VertexId v = g.first_live_vertex(); v != MultiGraph::kNil; v = g.next_live_vertex(v))
        if (g.degree(v) == 0) isolated.push_back(v);
    for (VertexId v : isolated) g.remove_vertex(v);
    std::vector<EdgeId> m;
    std::uint64_t count = match_recurse(g, m, sink, trace);
    g.rewind(mark);
    return count;
}

}  // namespace poe
