#include <algorithm>

#include "doctest.h"
#include "poenum/connected.hpp"
#include "poenum/gen.hpp"
#include "poenum/oracle.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"
#include "test_util.hpp"

using namespace poe;
using testutil::make_graph;
using testutil::sorted;

TEST_CASE("connected sets of K3 containing a root") {
    MultiGraph k3 = gen_complete(3);
    CollectingSink sink;
    CHECK(enum_connected_from_root(k3, 0, sink) == 4);
    CHECK(sorted(sink.solutions) ==
          std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}, {0, 2}});
}

TEST_CASE("connected sets of the star through its center") {
    MultiGraph star = gen_star(4);
    CountingSink sink;
    CHECK(enum_connected_from_root(star, 0, sink) == 8);  // any subset of leaves
}

TEST_CASE("connected sets of P3 from an end") {
    MultiGraph p3 = gen_path(3);
    CollectingSink sink;
    CHECK(enum_connected_from_root(p3, 0, sink) == 3);  // {0},{0,1},{0,1,2}
    CHECK(sorted(sink.solutions) == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}});
}

TEST_CASE("all connected induced subgraphs of P3") {
    MultiGraph p3 = gen_path(3);
    CollectingSink sink;
    CHECK(enum_all_connected(p3, sink) == 6);
    CHECK(sorted(sink.solutions) ==
          std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}, {1}, {1, 2}, {2}});
}

TEST_CASE("isolated root yields only itself") {
    MultiGraph g(2);
    CollectingSink sink;
    CHECK(enum_connected_from_root(g, 1, sink) == 1);
    CHECK(sink.solutions == std::vector<std::vector<int>>{{1}});
    CHECK_THROWS_AS(enum_connected_from_root(g, 7, sink), graph_error);
}

TEST_CASE("graph restored after enumeration") {
    Rng rng(5);
    MultiGraph g = gen_connected(7, 4, rng);
    MultiGraph pristine = g;
    CountingSink sink;
    enum_all_connected(g, sink);
    CHECK(g.structurally_equal(pristine));
}

TEST_CASE("multigraph input: parallel edges do not duplicate solutions") {
    MultiGraph par = make_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CollectingSink sink;
    CHECK(enum_connected_from_root(par, 0, sink) == 3);
    CHECK(sorted(sink.solutions) == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}});
}

TEST_CASE("matches the brute-force oracle on random graphs") {
    Rng rng(161803);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + (int)rand_below(rng, 6);
        MultiGraph g = gen_gnp(n, 0.25 + 0.4 * rand_unit(rng), rng);
        VertexId r = (VertexId)rand_below(rng, (std::uint64_t)n);
        CollectingSink fromRoot;
        enum_connected_from_root(g, r, fromRoot);
        CHECK(sorted(fromRoot.solutions) == brute_connected(g, r).solutions);
        CollectingSink all;
        enum_all_connected(g, all);
        CHECK(sorted(all.solutions) == brute_connected(g, std::nullopt).solutions);
    }
}

TEST_CASE("binary partition: every inner iteration has exactly 2 children") {
    Rng rng(77);
    MultiGraph g = gen_connected(8, 4, rng);
    CountingSink sink;
    TraceRecorder rec;
    enum_connected_from_root(g, 2, sink, &rec);
    const RecursionTrace& t = rec.trace();
    t.validate();
    std::uint64_t inner = 0;
    for (const auto& n : t.nodes)
        if (!n.leaf) {
            ++inner;
            CHECK(n.children.size() == 2);
        }
    // #iterations = 2*#solutions - 1 in a full binary tree with one solution
    // per leaf.
    CHECK(t.nodes.size() == 2 * t.solution_count() - 1);
    CHECK(t.nodes.size() <= 2 * sink.emitted());
}
