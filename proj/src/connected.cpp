#include "poenum/connected.hpp"

#include <algorithm>
#include <vector>

#include "poenum/graph_io.hpp"

namespace poe {

namespace {

std::uint64_t connect_recurse(MultiGraph& g, VertexId r, std::vector<int>& chosen,
                              SolutionSink& sink, TraceRecorder* trace) {
    if (trace) trace->enter(g.op_count());
    if (g.degree(r) == 0) {
        std::vector<int> sol = chosen;
        std::sort(sol.begin(), sol.end());
        if (trace) trace->mark_solution();
        sink.emit_set(sol);
        if (trace) trace->exit(g.op_count(), false);
        return 1;
    }
    int arc = g.adj_first(r);
    EdgeId e = MultiGraph::arc_edge(arc);
    VertexId v = g.arc_other(arc);
    std::uint64_t count = 0;
    // Include v: merge it into the root cluster. Parallel r-v copies become
    // loops and vanish inside the contraction.
    std::size_t mark = g.mark();
    VertexId merged = g.contract_edge(e);
    chosen.push_back(v);
    count += connect_recurse(g, merged, chosen, sink, trace);
    chosen.pop_back();
    g.rewind(mark);
    // Exclude v entirely.
    mark = g.mark();
    g.remove_vertex(v);
    count += connect_recurse(g, r, chosen, sink, trace);
    g.rewind(mark);
    if (trace) trace->exit(g.op_count(), false);
    return count;
}

}  // namespace

std::uint64_t enum_connected_from_root(MultiGraph& g, VertexId r, SolutionSink& sink,
                                       TraceRecorder* trace) {
    if (!g.vertex_alive(r)) throw graph_error("root vertex not in graph");
    std::vector<int> chosen{r};
    return connect_recurse(g, r, chosen, sink, trace);
}

std::uint64_t enum_all_connected(MultiGraph& g, SolutionSink& sink) {
    std::vector<VertexId> order;
    for (VertexId v = g.first_live_vertex(); v != MultiGraph::kNil; v = g.next_live_vertex(v))
        order.push_back(v);
    std::sort(order.begin(), order.end());
    std::size_t mark = g.mark();
    std::uint64_t count = 0;
    for (VertexId v : order) {
        count += enum_connected_from_root(g, v, sink);
        g.remove_vertex(v);
    }
    g.rewind(mark);
    return count;
}

}  // namespace poe
