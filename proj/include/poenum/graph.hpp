#ifndef POENUM_GRAPH_HPP
#define POENUM_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace poe {

using VertexId = int;
using EdgeId = int;

class graph_error : public std::runtime_error {
public:
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

// Mutable labeled multigraph with an undo journal.
//
// All mutations are reversible: rewind(mark) restores the graph to the
// bit-identical state it had when mark() was taken, including adjacency
// list order and the order of the live-vertex/live-edge lists. Ids are
// never reused. Self-loops never survive: an edge that becomes a loop
// during contraction is deleted on the spot.
//
// Every elementary mutation and traversal step bumps op_count(); the
// enumerators never touch the counter directly.
class MultiGraph {
public:
    static constexpr int kNil = -1;

    MultiGraph() = default;
    explicit MultiGraph(int n) { for (int i = 0; i < n; ++i) add_vertex(); }

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);  // parallel edges fine, loops rejected

    bool vertex_alive(VertexId v) const { return v >= 0 && v < (int)verts_.size() && verts_[v].alive; }
    bool edge_alive(EdgeId e) const { return e >= 0 && e < (int)edges_.size() && edges_[e].alive; }

    int vertex_count() const { bump(); return live_vertices_; }
    int edge_count() const { bump(); return live_edges_; }
    int max_vertex_id() const { return (int)verts_.size(); }
    int max_edge_id() const { return (int)edges_.size(); }

    int degree(VertexId v) const { check_vertex(v); bump(); return verts_[v].degree; }
    VertexId edge_u(EdgeId e) const { check_edge(e); return edges_[e].v[0]; }
    VertexId edge_v(EdgeId e) const { check_edge(e); return edges_[e].v[1]; }
    VertexId edge_other(EdgeId e, VertexId v) const {
        check_edge(e);
        return edges_[e].v[0] == v ? edges_[e].v[1] : edges_[e].v[0];
    }

    // Live lists, in journal-stable order. Every step is an elementary read
    // and counts toward op_count().
    VertexId first_live_vertex() const { bump(); return live_head_; }
    VertexId next_live_vertex(VertexId v) const { bump(); return verts_[v].lnext; }
    VertexId first_active_vertex() const { bump(); return active_head_; }  // degree >= 1
    VertexId next_active_vertex(VertexId v) const { bump(); return verts_[v].anext; }
    EdgeId first_live_edge() const { bump(); return elist_head_; }
    EdgeId next_live_edge(EdgeId e) const { bump(); return edges_[e].lnext; }

    // Adjacency walk: arcs are (edge, side) pairs encoded as e*2+side.
    int adj_first(VertexId v) const { check_vertex(v); bump(); return verts_[v].head; }
    int adj_next(int arc) const { bump(); return edges_[arc >> 1].next[arc & 1]; }
    static EdgeId arc_edge(int arc) { return arc >> 1; }
    VertexId arc_other(int arc) const { return edges_[arc >> 1].v[1 - (arc & 1)]; }

    std::vector<VertexId> neighbors(VertexId v) const;       // with multiplicity
    std::vector<EdgeId> incident_edges(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;             // scans shorter list

    // --- mutations (all journaled) ---
    void remove_edge(EdgeId e);
    void remove_vertex(VertexId v);
    void remove_closed_neighborhood_edges(EdgeId e);  // G+(e): drop every edge at either endpoint
    VertexId contract_edge(EdgeId e);                 // returns surviving vertex

    // --- journal ---
    std::size_t mark() const { return journal_.size(); }
    void rewind(std::size_t mark);

    // --- global queries (journal-free) ---
    bool is_connected() const;
    std::vector<std::vector<VertexId>> connected_components() const;
    std::vector<EdgeId> bridges() const;
    std::vector<EdgeId> parallel_class(EdgeId e) const;
    std::vector<EdgeId> series_class(EdgeId e);  // caller guarantees connected & bridgeless

    std::uint64_t op_count() const { return ops_; }

    bool structurally_equal(const MultiGraph& other) const;
    std::uint64_t degree_sum() const;

private:
    struct Edge {
        VertexId v[2] = {kNil, kNil};
        int prev[2] = {kNil, kNil}, next[2] = {kNil, kNil};  // adjacency arcs
        EdgeId lprev = kNil, lnext = kNil;                   // live-edge list
        bool alive = false;
    };
    struct Vertex {
        int head = kNil, tail = kNil;  // adjacency arc list
        int degree = 0;
        VertexId lprev = kNil, lnext = kNil;  // live-vertex list
        VertexId aprev = kNil, anext = kNil;  // active (degree>=1) list
        bool alive = false, active = false;
    };

    enum class Op : std::uint8_t {
        EdgeRemoved, ArcRetargeted, VertexRemoved, VertexDeactivated, VertexActivated
    };
    struct Rec {
        Op op;
        int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0;
    };

    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
    std::vector<Rec> journal_;
    VertexId live_head_ = kNil, live_tail_ = kNil;
    VertexId active_head_ = kNil, active_tail_ = kNil;
    EdgeId elist_head_ = kNil, elist_tail_ = kNil;
    int live_vertices_ = 0, live_edges_ = 0;
    mutable std::uint64_t ops_ = 0;

    void bump(std::uint64_t k = 1) const { ops_ += k; }
    void check_vertex(VertexId v) const {
        if (!vertex_alive(v)) throw graph_error("dead vertex id " + std::to_string(v));
    }
    void check_edge(EdgeId e) const {
        if (!edge_alive(e)) throw graph_error("dead edge id " + std::to_string(e));
    }

    void arc_unlink(EdgeId e, int side);
    void arc_link_between(EdgeId e, int side, VertexId v, int prevArc, int nextArc);
    void arc_append(EdgeId e, int side, VertexId v);
    void activate(VertexId v);
    void activate_unjournaled(VertexId v);
    void deactivate(VertexId v);
    void active_link_between(VertexId v, VertexId prev, VertexId next);
    void remove_edge_raw(EdgeId e);    // journaled primitive
    void remove_vertex_raw(VertexId v);  // degree must already be zero
    void undo_one(const Rec& r);
};

}  // namespace poe

#endif
