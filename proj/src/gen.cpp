#include "poenum/gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace poe {

MultiGraph gen_cycle(int n) {
    if (n < 3) throw graph_error("cycle needs n >= 3");
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

MultiGraph gen_star(int n) {
    if (n < 1) throw graph_error("star needs n >= 1");
    MultiGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

MultiGraph gen_path(int n) {
    if (n < 1) throw graph_error("path needs n >= 1");
    MultiGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

MultiGraph gen_complete(int n) {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

MultiGraph gen_tree(int n, Rng& rng) {
    if (n < 1) throw graph_error("tree needs n >= 1");
    MultiGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge((VertexId)rand_below(rng, i), i);
    return g;
}

MultiGraph gen_gnp(int n, double p, Rng& rng) {
    if (n < 0 || p < 0.0 || p > 1.0) throw graph_error("bad gnp parameters");
    MultiGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rand_unit(rng) < p) g.add_edge(i, j);
    return g;
}

MultiGraph gen_chordal(int n, int k, Rng& rng) {
    if (n < 1 || k < 1) throw graph_error("chordal needs n >= 1, k >= 1");
    MultiGraph g(n);
    // Grow vertex by vertex; each newcomer is attached to a clique, so it is
    // simplicial at insertion time and the reverse order is an elimination
    // ordering by construction.
    std::vector<std::vector<int>> cliques;  // cliques of size <= k
    cliques.push_back({0});
    for (int v = 1; v < n; ++v) {
        const std::vector<int>& base = cliques[rand_below(rng, cliques.size())];
        // random nonempty subset of the chosen clique
        std::vector<int> attach;
        while (attach.empty())
            for (int x : base)
                if (rand_below(rng, 2)) attach.push_back(x);
        for (int x : attach) g.add_edge(x, v);
        std::vector<int> grown = attach;
        grown.push_back(v);
        if ((int)grown.size() > k) grown.erase(grown.begin());
        cliques.push_back(std::move(grown));
    }
    return g;
}

MultiGraph gen_multi(int n, int m, Rng& rng) {
    if (n < 1 || m < n - 1) throw graph_error("multi needs n >= 1 and m >= n-1");
    MultiGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge((VertexId)rand_below(rng, i), i);
    for (int i = n - 1; i < m; ++i) {
        if (n < 2) throw graph_error("cannot add extra edges to a single vertex");
        VertexId u = (VertexId)rand_below(rng, n);
        VertexId v = (VertexId)rand_below(rng, n - 1);
        if (v >= u) ++v;
        g.add_edge(u, v);
    }
    return g;
}

MultiGraph gen_connected(int n, int extra, Rng& rng) {
    MultiGraph g(n);
    std::set<std::pair<int, int>> used;
    for (int i = 1; i < n; ++i) {
        int u = (int)rand_below(rng, i);
        g.add_edge(u, i);
        used.insert({u, i});
    }
    long possible = (long)n * (n - 1) / 2 - (n - 1);
    extra = (int)std::min((long)extra, possible);
    int added = 0;
    while (added < extra) {
        int u = (int)rand_below(rng, n);
        int v = (int)rand_below(rng, n - 1);
        if (v >= u) ++v;
        if (u > v) std::swap(u, v);
        if (used.insert({u, v}).second) {
            g.add_edge(u, v);
            ++added;
        }
    }
    return g;
}

MultiGraph gen_hub(int n, int hubs, Rng& rng) {
    if (hubs < 1 || n < hubs) throw graph_error("bad hub parameters");
    MultiGraph g(n);
    for (int i = 0; i < hubs; ++i)
        for (int j = i + 1; j < hubs; ++j) g.add_edge(i, j);
    for (int v = hubs; v < n; ++v) g.add_edge((VertexId)rand_below(rng, hubs), v);
    return g;
}

MultiGraph gen_caterpillar(int n, int hairs, Rng& rng) {
    if (n < 2 || hairs < 0 || hairs > n - 2) throw graph_error("bad caterpillar parameters");
    int spine = n - hairs;
    MultiGraph g(n);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    for (int v = spine; v < n; ++v) g.add_edge((VertexId)rand_below(rng, spine), v);
    return g;
}

MultiGraph gen_theta(int n, Rng& rng) {
    if (n < 4) throw graph_error("theta needs n >= 4");
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rand_below(rng, (std::uint64_t)i + 1)]);
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
    g.add_edge(order[0], order[n / 2]);
    return g;
}

}  // namespace poe
