#include "poenum/sptree.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace poe {

namespace {

struct SpRun {
    MultiGraph& g;
    SolutionSink& sink;
    TraceRecorder* trace;
    std::vector<int> tree;
};

void sp_iterate(SpRun& st);

// Visits, for each i in [lo, hi), the state where every class edge outside
// [lo, hi) plus every class edge inside except the i-th is contracted, then
// runs one child iteration with the i-th edge deleted. Divide and conquer
// keeps the total contraction work at O(k log k) despite the LIFO journal.
void all_but_one(SpRun& st, const std::vector<EdgeId>& cls, std::size_t lo, std::size_t hi) {
    MultiGraph& g = st.g;
    if (hi - lo == 1) {
        EdgeId skip = cls[lo];
        std::size_t mark = g.mark();
        // When the class is a full cycle, contracting the other k-1 edges
        // already turned this one into a loop and deleted it.
        if (g.edge_alive(skip)) g.remove_edge(skip);
        sp_iterate(st);
        g.rewind(mark);
        return;
    }
    std::size_t mid = (lo + hi) / 2;
    std::size_t mark = g.mark(), tmark = st.tree.size();
    for (std::size_t i = mid; i < hi; ++i) {
        st.tree.push_back(cls[i]);
        g.contract_edge(cls[i]);
    }
    all_but_one(st, cls, lo, mid);
    g.rewind(mark);
    st.tree.resize(tmark);
    mark = g.mark();
    for (std::size_t i = lo; i < mid; ++i) {
        st.tree.push_back(cls[i]);
        g.contract_edge(cls[i]);
    }
    all_but_one(st, cls, mid, hi);
    g.rewind(mark);
    st.tree.resize(tmark);
}

bool forms_cycle(const MultiGraph& g, const std::vector<EdgeId>& cls) {
    // The class can contain at most one cycle and only as its whole edge
    // set, so "every touched vertex has class-degree two" decides it.
    std::map<VertexId, int> deg;
    for (EdgeId e : cls) {
        ++deg[g.edge_u(e)];
        ++deg[g.edge_v(e)];
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    return true;
}

void sp_iterate(SpRun& st) {
    MultiGraph& g = st.g;
    if (st.trace) st.trace->enter(g.op_count());
    std::size_t mark = g.mark(), tmark = st.tree.size();

    // Every bridge is in every spanning tree; commit and contract them so
    // the branching below always sees a bridgeless graph.
    for (EdgeId b : g.bridges()) {
        st.tree.push_back(b);
        g.contract_edge(b);
    }

    if (g.edge_count() == 0) {
        std::vector<int> sol = st.tree;
        std::sort(sol.begin(), sol.end());
        if (st.trace) st.trace->mark_solution();
        st.sink.emit_set(sol);
        g.rewind(mark);
        st.tree.resize(tmark);
        if (st.trace) st.trace->exit(g.op_count(), false);
        return;
    }

    EdgeId e1 = g.first_live_edge();  // lowest live id: contraction never reorders the list
    std::vector<EdgeId> par = g.parallel_class(e1);
    if (par.size() >= 2) {
        // All k "keep e_i" branches share one graph: contract the endpoints
        // once, the other parallels vanish as loops.
        std::size_t m2 = g.mark();
        g.contract_edge(e1);
        for (EdgeId ei : par) {
            st.tree.push_back(ei);
            sp_iterate(st);
            st.tree.pop_back();
        }
        g.rewind(m2);
        // Trees avoiding the whole class, when any remain.
        m2 = g.mark();
        for (EdgeId ei : par) g.remove_edge(ei);
        if (g.is_connected()) sp_iterate(st);
        g.rewind(m2);
    } else {
        std::vector<EdgeId> ser = g.series_class(e1);
        if (ser.size() >= 2) {
            bool cycle = forms_cycle(g, ser);
            all_but_one(st, ser, 0, ser.size());
            if (!cycle) {
                // Trees containing the whole class.
                std::size_t m2 = g.mark(), t2 = st.tree.size();
                for (EdgeId ei : ser) {
                    st.tree.push_back(ei);
                    g.contract_edge(ei);
                }
                sp_iterate(st);
                g.rewind(m2);
                st.tree.resize(t2);
            }
        } else {
            // Trivial classes: keep-or-drop e1. Dropping is safe because the
            // graph is bridgeless here.
            std::size_t m2 = g.mark();
            st.tree.push_back(e1);
            g.contract_edge(e1);
            sp_iterate(st);
            st.tree.pop_back();
            g.rewind(m2);
            m2 = g.mark();
            g.remove_edge(e1);
            sp_iterate(st);
            g.rewind(m2);
        }
    }

    g.rewind(mark);
    st.tree.resize(tmark);
    if (st.trace) st.trace->exit(g.op_count(), false);
}

}  // namespace

std::uint64_t enum_spanning_trees(MultiGraph& g, SolutionSink& sink, TraceRecorder* trace) {
    if (g.vertex_count() == 0) throw graph_error("spanning trees need at least one vertex");
    if (!g.is_connected()) throw graph_error("input graph is disconnected");
    SpRun st{g, sink, trace, {}};
    std::uint64_t before = sink.emitted();
    sp_iterate(st);
    return sink.emitted() - before;
}

}  // namespace poe
