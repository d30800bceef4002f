#include "poenum/oracle.hpp"

#include <algorithm>
#include <map>

namespace poe {

namespace {

constexpr int kMaxVertices = 16;
constexpr int kMaxEdges = 24;

void guard(const MultiGraph& g) {
    if (g.vertex_count() > kMaxVertices || g.edge_count() > kMaxEdges)
        throw graph_error("oracle size guard exceeded");
}

std::vector<VertexId> live_vertices(const MultiGraph& g) {
    std::vector<VertexId> out;
    for (VertexId v = g.first_live_vertex(); v != MultiGraph::kNil; v = g.next_live_vertex(v))
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> live_edges(const MultiGraph& g) {
    std::vector<EdgeId> out;
    for (EdgeId e = g.first_live_edge(); e != MultiGraph::kNil; e = g.next_live_edge(e))
        out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void finish(OracleResult& r) {
    std::sort(r.solutions.begin(), r.solutions.end());
    r.solutions.erase(std::unique(r.solutions.begin(), r.solutions.end()), r.solutions.end());
    r.count = r.solutions.size();
}

}  // namespace

OracleResult brute_matchings(const MultiGraph& g) {
    guard(g);
    std::vector<EdgeId> edges = live_edges(g);
    int m = (int)edges.size();
    OracleResult r;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> sol;
        bool ok = true;
        std::vector<char> used(g.max_vertex_id(), 0);
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            VertexId u = g.edge_u(edges[i]), v = g.edge_v(edges[i]);
            if (used[u] || used[v]) ok = false;
            used[u] = used[v] = 1;
            sol.push_back(edges[i]);
        }
        if (ok) r.solutions.push_back(std::move(sol));
    }
    finish(r);
    return r;
}

OracleResult brute_connected(const MultiGraph& g, std::optional<VertexId> root) {
    guard(g);
    std::vector<VertexId> verts = live_vertices(g);
    std::vector<EdgeId> edges = live_edges(g);
    int n = (int)verts.size();
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    OracleResult r;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (root && !(mask & (1u << index.at(*root)))) continue;
        UnionFind uf(n);
        int parts = __builtin_popcount(mask);
        for (EdgeId e : edges) {
            int a = index.at(g.edge_u(e)), b = index.at(g.edge_v(e));
            if ((mask & (1u << a)) && (mask & (1u << b)) && uf.unite(a, b)) --parts;
        }
        if (parts != 1) continue;
        std::vector<int> sol;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sol.push_back(verts[i]);
        r.solutions.push_back(std::move(sol));
    }
    finish(r);
    return r;
}

OracleResult brute_spanning_trees(const MultiGraph& g) {
    guard(g);
    std::vector<VertexId> verts = live_vertices(g);
    std::vector<EdgeId> edges = live_edges(g);
    int n = (int)verts.size(), m = (int)edges.size();
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    OracleResult r;
    if (n == 0) return r;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != n - 1) continue;
        UnionFind uf(n);
        bool acyclic = true;
        for (int i = 0; i < m && acyclic; ++i) {
            if (!(mask & (1u << i))) continue;
            if (!uf.unite(index.at(g.edge_u(edges[i])), index.at(g.edge_v(edges[i]))))
                acyclic = false;
        }
        if (!acyclic) continue;
        std::vector<int> sol;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sol.push_back(edges[i]);
        r.solutions.push_back(std::move(sol));
    }
    finish(r);
    return r;
}

OracleResult brute_elim_orderings(
    const std::function<std::unique_ptr<ElimStructure>()>& makeStructure, int groundSize) {
    if (groundSize > 10) throw graph_error("oracle size guard exceeded");
    OracleResult r;
    std::unique_ptr<ElimStructure> probe = makeStructure();
    std::vector<int> ground = probe->ground_elements();
    probe.reset();
    std::sort(ground.begin(), ground.end());
    std::vector<int> perm = ground;
    do {
        std::unique_ptr<ElimStructure> z = makeStructure();
        bool ok = true;
        std::optional<std::size_t> firstToken;
        for (std::size_t i = 0; ok && i < perm.size(); ++i) {
            if (z->size() == 1) {
                ok = z->ground_elements()[0] == perm[i];
                break;
            }
            std::vector<int> rem = z->removable_elements();
            if (!std::binary_search(rem.begin(), rem.end(), perm[i])) {
                ok = false;
                break;
            }
            std::size_t token = z->remove_element(perm[i]);
            if (!firstToken) firstToken = token;
        }
        if (firstToken) z->restore(*firstToken);
        if (ok) r.solutions.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.count = r.solutions.size();
    std::sort(r.solutions.begin(), r.solutions.end());
    return r;
}

std::uint64_t matrix_tree_count(const MultiGraph& g) {
    std::vector<VertexId> verts = live_vertices(g);
    int n = (int)verts.size();
    if (n <= 1) return 1;
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[verts[i]] = i;
    int d = n - 1;
    std::vector<std::vector<__int128>> a(d, std::vector<__int128>(d, 0));
    for (EdgeId e = g.first_live_edge(); e != MultiGraph::kNil; e = g.next_live_edge(e)) {
        int u = index.at(g.edge_u(e)), v = index.at(g.edge_v(e));
        if (u < d) ++a[u][u];
        if (v < d) ++a[v][v];
        if (u < d && v < d) {
            --a[u][v];
            --a[v][u];
        }
    }
    // Bareiss fraction-free elimination: exact integer determinant.
    __int128 prev = 1;
    for (int k = 0; k < d; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap == -1) return 0;
            std::swap(a[k], a[swap]);
            for (auto& row : a) row[k] = -row[k];  // keep the sign after the row swap
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    __int128 det = a[d - 1][d - 1];
    if (det < 0) det = -det;  // Laplacian minors are non-negative
    return (std::uint64_t)det;
}

}  // namespace poe
