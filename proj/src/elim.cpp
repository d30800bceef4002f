#include "poenum/elim.hpp"

#include <algorithm>

#include "poenum/graph_io.hpp"

namespace poe {

namespace {

class GraphElimBase : public ElimStructure {
public:
    explicit GraphElimBase(MultiGraph& g) : g_(g) {}
    std::size_t size() const override { return (std::size_t)g_.vertex_count(); }
    std::vector<int> ground_elements() const override {
        std::vector<int> out;
        for (VertexId v = g_.first_live_vertex(); v != MultiGraph::kNil; v = g_.next_live_vertex(v))
            out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::size_t remove_element(int e) override {
        std::size_t token = g_.mark();
        g_.remove_vertex(e);
        return token;
    }
    void restore(std::size_t token) override { g_.rewind(token); }
    std::uint64_t op_count() const override { return g_.op_count(); }

protected:
    MultiGraph& g_;
};

class SimplicialStructure : public GraphElimBase {
public:
    explicit SimplicialStructure(MultiGraph& g) : GraphElimBase(g) {
        if (!is_simple(g)) throw elim_error("simplicial structure needs a simple graph");
    }
    std::vector<int> removable_elements() const override {
        std::vector<int> out;
        for (VertexId v = g_.first_live_vertex(); v != MultiGraph::kNil; v = g_.next_live_vertex(v))
            if (simplicial(v)) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }
    void on_stuck() const override {
        throw non_chordal_error("no simplicial vertex: input graph is not chordal");
    }

private:
    bool simplicial(VertexId v) const {
        std::vector<VertexId> nb = g_.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g_.adjacent(nb[i], nb[j])) return false;
        return true;
    }
};

class NonCutStructure : public GraphElimBase {
public:
    explicit NonCutStructure(MultiGraph& g) : GraphElimBase(g) {
        if (!g.is_connected()) throw elim_error("non-cut structure needs a connected graph");
    }
    std::vector<int> removable_elements() const override {
        // v is removable iff the graph stays connected without it.
        std::vector<char> cut(g_.max_vertex_id(), 0);
        articulation_points(cut);
        std::vector<int> out;
        for (VertexId v = g_.first_live_vertex(); v != MultiGraph::kNil; v = g_.next_live_vertex(v))
            if (!cut[v]) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void articulation_points(std::vector<char>& cut) const {
        int n = g_.max_vertex_id();
        std::vector<int> tin(n, -1), low(n, 0);
        int timer = 0;
        struct Frame {
            VertexId v;
            int arc;
            VertexId parent;
            EdgeId inEdge;         // edge used to enter v
            bool skipped = false;  // one instance of inEdge ignored already
            int treeKids = 0;
        };
        std::vector<Frame> stack;
        for (VertexId r = g_.first_live_vertex(); r != MultiGraph::kNil;
             r = g_.next_live_vertex(r)) {
            if (tin[r] != -1) continue;
            tin[r] = low[r] = timer++;
            stack.push_back({r, g_.adj_first(r), MultiGraph::kNil, MultiGraph::kNil});
            int rootKids = 0;
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.arc == MultiGraph::kNil) {
                    Frame done = f;
                    stack.pop_back();
                    if (!stack.empty()) {
                        Frame& p = stack.back();
                        low[p.v] = std::min(low[p.v], low[done.v]);
                        if (low[done.v] >= tin[p.v] && p.parent != MultiGraph::kNil)
                            cut[p.v] = 1;
                    } else {
                        rootKids = done.treeKids;
                    }
                    continue;
                }
                VertexId y = g_.arc_other(f.arc);
                EdgeId via = MultiGraph::arc_edge(f.arc);
                f.arc = g_.adj_next(f.arc);
                if (via == f.inEdge && !f.skipped) {
                    f.skipped = true;
                    continue;
                }
                if (tin[y] == -1) {
                    ++f.treeKids;
                    tin[y] = low[y] = timer++;
                    stack.push_back({y, g_.adj_first(y), f.v, via});
                } else {
                    low[f.v] = std::min(low[f.v], tin[y]);
                }
            }
            if (rootKids > 1) cut[r] = 1;
        }
    }
};

class LeafStructure : public GraphElimBase {
public:
    explicit LeafStructure(MultiGraph& g) : GraphElimBase(g) {
        if (g.edge_count() != g.vertex_count() - 1 || !g.is_connected())
            throw elim_error("leaf structure needs a tree");
    }
    std::vector<int> removable_elements() const override {
        std::vector<int> out;
        for (VertexId v = g_.first_live_vertex(); v != MultiGraph::kNil; v = g_.next_live_vertex(v))
            if (g_.degree(v) <= 1) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

namespace detail {

std::uint64_t elim_recurse(ElimStructure& z, std::vector<int>& prefix, SolutionSink& sink,
                           TraceRecorder* trace) {
    if (trace) trace->enter(z.op_count());
    std::uint64_t count = 0;
    std::vector<int> ground = z.ground_elements();
    if (ground.size() == 1) {
        prefix.push_back(ground[0]);
        if (trace) trace->mark_solution();
        sink.emit_sequence(prefix);
        prefix.pop_back();
        if (trace) trace->exit(z.op_count(), false);
        return 1;
    }
    std::vector<int> removable = z.removable_elements();
    if (removable.empty()) {
        if (trace) trace->exit(z.op_count(), false);
        z.on_stuck();
        return 0;
    }
    for (int e : removable) {
        std::size_t token = z.remove_element(e);
        prefix.push_back(e);
        count += elim_recurse(z, prefix, sink, trace);
        prefix.pop_back();
        z.restore(token);
    }
    if (trace) trace->exit(z.op_count(), false);
    return count;
}

}  // namespace detail

std::uint64_t enum_elim_orderings(ElimStructure& z, SolutionSink& sink, TraceRecorder* trace) {
    if (z.size() == 0) throw elim_error("empty structure");
    std::vector<int> prefix;
    return detail::elim_recurse(z, prefix, sink, trace);
}

std::unique_ptr<ElimStructure> simplicial_structure(MultiGraph& g) {
    return std::make_unique<SimplicialStructure>(g);
}

std::unique_ptr<ElimStructure> noncut_structure(MultiGraph& g) {
    return std::make_unique<NonCutStructure>(g);
}

std::unique_ptr<ElimStructure> leaf_structure(MultiGraph& g) {
    return std::make_unique<LeafStructure>(g);
}

}  // namespace poe
