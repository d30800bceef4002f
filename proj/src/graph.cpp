#include "poenum/graph.hpp"

#include <algorithm>

namespace poe {

namespace {
inline int arc_code(EdgeId e, int side) { return e * 2 + side; }
}

VertexId MultiGraph::add_vertex() {
    VertexId v = (int)verts_.size();
    verts_.emplace_back();
    Vertex& rec = verts_.back();
    rec.alive = true;
    rec.lprev = live_tail_;
    if (live_tail_ != kNil) verts_[live_tail_].lnext = v; else live_head_ = v;
    live_tail_ = v;
    ++live_vertices_;
    bump();
    return v;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw graph_error("self-loop rejected: vertex " + std::to_string(u));
    EdgeId e = (int)edges_.size();
    edges_.emplace_back();
    Edge& rec = edges_.back();
    rec.alive = true;
    rec.v[0] = u;
    rec.v[1] = v;
    arc_append(e, 0, u);
    arc_append(e, 1, v);
    ++verts_[u].degree;
    ++verts_[v].degree;
    if (!verts_[u].active) activate_unjournaled(u);
    if (!verts_[v].active) activate_unjournaled(v);
    rec.lprev = elist_tail_;
    if (elist_tail_ != kNil) edges_[elist_tail_].lnext = e; else elist_head_ = e;
    elist_tail_ = e;
    ++live_edges_;
    bump();
    return e;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out;
    for (int arc = adj_first(v); arc != kNil; arc = adj_next(arc)) {
        out.push_back(arc_other(arc));
        bump();
    }
    return out;
}

std::vector<EdgeId> MultiGraph::incident_edges(VertexId v) const {
    check_vertex(v);
    std::vector<EdgeId> out;
    for (int arc = adj_first(v); arc != kNil; arc = adj_next(arc)) {
        out.push_back(arc_edge(arc));
        bump();
    }
    return out;
}

bool MultiGraph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    VertexId a = verts_[u].degree <= verts_[v].degree ? u : v;
    VertexId b = a == u ? v : u;
    for (int arc = adj_first(a); arc != kNil; arc = adj_next(arc)) {
        bump();
        if (arc_other(arc) == b) return true;
    }
    return false;
}

void MultiGraph::arc_unlink(EdgeId e, int side) {
    VertexId v = edges_[e].v[side];
    int p = edges_[e].prev[side], n = edges_[e].next[side];
    if (p != kNil) edges_[p >> 1].next[p & 1] = n; else verts_[v].head = n;
    if (n != kNil) edges_[n >> 1].prev[n & 1] = p; else verts_[v].tail = p;
    bump();
}

void MultiGraph::arc_link_between(EdgeId e, int side, VertexId v, int prevArc, int nextArc) {
    edges_[e].prev[side] = prevArc;
    edges_[e].next[side] = nextArc;
    int code = arc_code(e, side);
    if (prevArc != kNil) edges_[prevArc >> 1].next[prevArc & 1] = code; else verts_[v].head = code;
    if (nextArc != kNil) edges_[nextArc >> 1].prev[nextArc & 1] = code; else verts_[v].tail = code;
    bump();
}

void MultiGraph::arc_append(EdgeId e, int side, VertexId v) {
    arc_link_between(e, side, v, verts_[v].tail, kNil);
}

void MultiGraph::activate_unjournaled(VertexId v) {
    Vertex& rec = verts_[v];
    rec.active = true;
    rec.aprev = active_tail_;
    rec.anext = kNil;
    if (active_tail_ != kNil) verts_[active_tail_].anext = v; else active_head_ = v;
    active_tail_ = v;
    bump();
}

void MultiGraph::activate(VertexId v) {
    activate_unjournaled(v);
    journal_.push_back({Op::VertexActivated, v});
}

void MultiGraph::deactivate(VertexId v) {
    Vertex& rec = verts_[v];
    journal_.push_back({Op::VertexDeactivated, v, rec.aprev, rec.anext});
    if (rec.aprev != kNil) verts_[rec.aprev].anext = rec.anext; else active_head_ = rec.anext;
    if (rec.anext != kNil) verts_[rec.anext].aprev = rec.aprev; else active_tail_ = rec.aprev;
    rec.active = false;
    bump();
}

void MultiGraph::active_link_between(VertexId v, VertexId prev, VertexId next) {
    Vertex& rec = verts_[v];
    rec.aprev = prev;
    rec.anext = next;
    rec.active = true;
    if (prev != kNil) verts_[prev].anext = v; else active_head_ = v;
    if (next != kNil) verts_[next].aprev = v; else active_tail_ = v;
    bump();
}

void MultiGraph::remove_edge_raw(EdgeId e) {
    Edge& rec = edges_[e];
    journal_.push_back({Op::EdgeRemoved, e,
                        rec.prev[0], rec.next[0], rec.prev[1], rec.next[1],
                        rec.lprev, rec.lnext});
    arc_unlink(e, 0);
    arc_unlink(e, 1);
    if (rec.lprev != kNil) edges_[rec.lprev].lnext = rec.lnext; else elist_head_ = rec.lnext;
    if (rec.lnext != kNil) edges_[rec.lnext].lprev = rec.lprev; else elist_tail_ = rec.lprev;
    rec.alive = false;
    --live_edges_;
    for (int side = 0; side < 2; ++side) {
        VertexId x = rec.v[side];
        if (--verts_[x].degree == 0) deactivate(x);
    }
    bump();
}

void MultiGraph::remove_edge(EdgeId e) {
    check_edge(e);
    remove_edge_raw(e);
}

void MultiGraph::remove_vertex_raw(VertexId v) {
    Vertex& rec = verts_[v];
    journal_.push_back({Op::VertexRemoved, v, rec.lprev, rec.lnext});
    if (rec.lprev != kNil) verts_[rec.lprev].lnext = rec.lnext; else live_head_ = rec.lnext;
    if (rec.lnext != kNil) verts_[rec.lnext].lprev = rec.lprev; else live_tail_ = rec.lprev;
    rec.alive = false;
    --live_vertices_;
    bump();
}

void MultiGraph::remove_vertex(VertexId v) {
    check_vertex(v);
    while (verts_[v].head != kNil) remove_edge_raw(verts_[v].head >> 1);
    remove_vertex_raw(v);
}

void MultiGraph::remove_closed_neighborhood_edges(EdgeId e) {
    check_edge(e);
    VertexId u = edges_[e].v[0], v = edges_[e].v[1];
    while (verts_[u].head != kNil) remove_edge_raw(verts_[u].head >> 1);
    while (verts_[v].head != kNil) remove_edge_raw(verts_[v].head >> 1);
}

VertexId MultiGraph::contract_edge(EdgeId e) {
    check_edge(e);
    VertexId u = edges_[e].v[0], v = edges_[e].v[1];
    if (u == v) throw graph_error("cannot contract a self-loop");
    VertexId s, w;
    if (verts_[u].degree != verts_[v].degree) {
        s = verts_[u].degree > verts_[v].degree ? u : v;
    } else {
        s = std::min(u, v);
    }
    w = (s == u) ? v : u;
    remove_edge_raw(e);
    // Re-attach w's remaining edges to s; copies parallel to e become loops
    // and are deleted instead.
    int arc = verts_[w].head;
    while (arc != kNil) {
        EdgeId f = arc >> 1;
        int side = arc & 1;
        int next = edges_[f].next[side];
        if (edges_[f].v[1 - side] == s) {
            remove_edge_raw(f);
        } else {
            journal_.push_back({Op::ArcRetargeted, f, side, w,
                                edges_[f].prev[side], edges_[f].next[side]});
            arc_unlink(f, side);
            edges_[f].v[side] = s;
            arc_append(f, side, s);
            if (--verts_[w].degree == 0) deactivate(w);
            if (++verts_[s].degree == 1) activate(s);
        }
        arc = next;
        bump();
    }
    remove_vertex_raw(w);
    return s;
}

void MultiGraph::rewind(std::size_t mark) {
    if (mark > journal_.size()) throw graph_error("rewind past journal end");
    while (journal_.size() > mark) {
        Rec r = journal_.back();
        journal_.pop_back();
        undo_one(r);
    }
}

void MultiGraph::undo_one(const Rec& r) {
    switch (r.op) {
        case Op::EdgeRemoved: {
            EdgeId e = r.a;
            Edge& rec = edges_[e];
            rec.alive = true;
            ++live_edges_;
            arc_link_between(e, 0, rec.v[0], r.b, r.c);
            arc_link_between(e, 1, rec.v[1], r.d, r.e);
            rec.lprev = r.f;
            rec.lnext = r.g;
            if (r.f != kNil) edges_[r.f].lnext = e; else elist_head_ = e;
            if (r.g != kNil) edges_[r.g].lprev = e; else elist_tail_ = e;
            ++verts_[rec.v[0]].degree;
            ++verts_[rec.v[1]].degree;
            bump();
            break;
        }
        case Op::ArcRetargeted: {
            EdgeId f = r.a;
            int side = r.b;
            VertexId oldV = r.c;
            VertexId cur = edges_[f].v[side];
            arc_unlink(f, side);
            --verts_[cur].degree;
            edges_[f].v[side] = oldV;
            arc_link_between(f, side, oldV, r.d, r.e);
            ++verts_[oldV].degree;
            bump();
            break;
        }
        case Op::VertexRemoved: {
            VertexId v = r.a;
            Vertex& rec = verts_[v];
            rec.alive = true;
            ++live_vertices_;
            rec.lprev = r.b;
            rec.lnext = r.c;
            if (r.b != kNil) verts_[r.b].lnext = v; else live_head_ = v;
            if (r.c != kNil) verts_[r.c].lprev = v; else live_tail_ = v;
            bump();
            break;
        }
        case Op::VertexDeactivated:
            active_link_between(r.a, r.b, r.c);
            break;
        case Op::VertexActivated: {
            Vertex& rec = verts_[r.a];
            if (rec.aprev != kNil) verts_[rec.aprev].anext = rec.anext; else active_head_ = rec.anext;
            if (rec.anext != kNil) verts_[rec.anext].aprev = rec.aprev; else active_tail_ = rec.aprev;
            rec.active = false;
            bump();
            break;
        }
    }
}

bool MultiGraph::is_connected() const {
    if (live_vertices_ <= 1) return true;
    std::vector<char> seen(verts_.size(), 0);
    std::vector<VertexId> stack{live_head_};
    seen[live_head_] = 1;
    int count = 0;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        ++count;
        bump();
        for (int arc = verts_[x].head; arc != kNil; arc = edges_[arc >> 1].next[arc & 1]) {
            VertexId y = edges_[arc >> 1].v[1 - (arc & 1)];
            bump();
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return count == live_vertices_;
}

std::vector<std::vector<VertexId>> MultiGraph::connected_components() const {
    std::vector<std::vector<VertexId>> comps;
    std::vector<char> seen(verts_.size(), 0);
    for (VertexId r = live_head_; r != kNil; r = verts_[r].lnext) {
        bump();
        if (seen[r]) continue;
        comps.emplace_back();
        std::vector<VertexId> stack{r};
        seen[r] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            comps.back().push_back(x);
            bump();
            for (int arc = verts_[x].head; arc != kNil; arc = edges_[arc >> 1].next[arc & 1]) {
                VertexId y = edges_[arc >> 1].v[1 - (arc & 1)];
                bump();
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

std::vector<EdgeId> MultiGraph::bridges() const {
    std::vector<EdgeId> out;
    std::vector<int> tin(verts_.size(), -1), low(verts_.size(), 0);
    int timer = 0;
    struct Frame {
        VertexId v;
        int arc;        // next arc to scan
        EdgeId inEdge;  // edge used to enter v (kNil at roots)
        bool skipped = false;  // one instance of inEdge ignored already
    };
    std::vector<Frame> stack;
    for (VertexId r = live_head_; r != kNil; r = verts_[r].lnext) {
        bump();
        if (tin[r] != -1) continue;
        tin[r] = low[r] = timer++;
        stack.push_back({r, verts_[r].head, kNil});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.arc == kNil) {
                EdgeId in = f.inEdge;
                VertexId child = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[child]);
                    if (low[child] > tin[parent]) out.push_back(in);
                }
                continue;
            }
            EdgeId e = f.arc >> 1;
            VertexId y = edges_[e].v[1 - (f.arc & 1)];
            f.arc = edges_[e].next[f.arc & 1];
            bump();
            if (e == f.inEdge && !f.skipped) {
                f.skipped = true;  // skip the entering edge instance exactly once
                continue;
            }
            if (tin[y] == -1) {
                tin[y] = low[y] = timer++;
                stack.push_back({y, verts_[y].head, e});
            } else {
                low[f.v] = std::min(low[f.v], tin[y]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> MultiGraph::parallel_class(EdgeId e) const {
    check_edge(e);
    VertexId u = edges_[e].v[0], v = edges_[e].v[1];
    VertexId a = verts_[u].degree <= verts_[v].degree ? u : v;
    VertexId b = a == u ? v : u;
    std::vector<EdgeId> out;
    for (int arc = verts_[a].head; arc != kNil; arc = edges_[arc >> 1].next[arc & 1]) {
        bump();
        if (edges_[arc >> 1].v[1 - (arc & 1)] == b) out.push_back(arc >> 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> MultiGraph::series_class(EdgeId e) {
    check_edge(e);
    VertexId u = edges_[e].v[0], v = edges_[e].v[1];
    std::size_t m = mark();
    remove_edge_raw(e);
    std::vector<EdgeId> cut = bridges();
    rewind(m);
    std::vector<EdgeId> out{e};
    for (EdgeId f : cut) {
        VertexId a = edges_[f].v[0], b = edges_[f].v[1];
        bool par = (a == u && b == v) || (a == v && b == u);
        if (!par) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t MultiGraph::degree_sum() const {
    std::uint64_t s = 0;
    for (VertexId v = live_head_; v != kNil; v = verts_[v].lnext) s += verts_[v].degree;
    return s;
}

bool MultiGraph::structurally_equal(const MultiGraph& other) const {
    if (verts_.size() != other.verts_.size() || edges_.size() != other.edges_.size()) return false;
    if (live_vertices_ != other.live_vertices_ || live_edges_ != other.live_edges_) return false;
    if (live_head_ != other.live_head_ || live_tail_ != other.live_tail_) return false;
    if (active_head_ != other.active_head_ || active_tail_ != other.active_tail_) return false;
    if (elist_head_ != other.elist_head_ || elist_tail_ != other.elist_tail_) return false;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vertex& a = verts_[i];
        const Vertex& b = other.verts_[i];
        if (a.alive != b.alive || a.active != b.active || a.degree != b.degree) return false;
        if (a.head != b.head || a.tail != b.tail) return false;
        if (a.lprev != b.lprev || a.lnext != b.lnext) return false;
        if (a.aprev != b.aprev || a.anext != b.anext) return false;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.alive != b.alive || a.v[0] != b.v[0] || a.v[1] != b.v[1]) return false;
        if (a.alive) {
            if (a.prev[0] != b.prev[0] || a.next[0] != b.next[0]) return false;
            if (a.prev[1] != b.prev[1] || a.next[1] != b.next[1]) return false;
            if (a.lprev != b.lprev || a.lnext != b.lnext) return false;
        }
    }
    return true;
}

}  // namespace poe
