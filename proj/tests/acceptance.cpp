// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// pass. Frozen constants (beta per algorithm, output-amortization C) come
// from tools/calibrate.cpp; rerun it after any cost-model change.
#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "poenum/connected.hpp"
#include "poenum/elim.hpp"
#include "poenum/gen.hpp"
#include "poenum/matching.hpp"
#include "poenum/oracle.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"
#include "poenum/sptree.hpp"

using namespace poe;

namespace {

// Frozen from tools/calibrate.cpp (minimal feasible values with ~20%
// headroom): calibration maxima were 20.0 / 31.84 / 36.38 / 11.67 and the
// output-amortization ratio peaked at 0.123.
const double kFrozenBeta[4] = {24.0, 36.0, 44.0, 14.0};
const double kFrozenOutputC = 0.2;

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++failures;
}

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// All connected simple graphs on n vertices, one per isomorphism class,
// found by keeping the edge-bitmask representatives that are minimal over
// every vertex permutation.
std::vector<MultiGraph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    int m = (int)pairs.size();
    std::vector<std::vector<int>> pairIndex(n, std::vector<int>(n, -1));
    for (int k = 0; k < m; ++k)
        pairIndex[pairs[k].first][pairs[k].second] =
            pairIndex[pairs[k].second][pairs[k].first] = k;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<MultiGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool minimal = true;
        for (const auto& p : perms) {
            std::uint32_t img = 0;
            for (int k = 0; k < m; ++k)
                if (mask & (1u << k))
                    img |= 1u << pairIndex[p[pairs[k].first]][p[pairs[k].second]];
            if (img < mask) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        MultiGraph g(n);
        for (int k = 0; k < m; ++k)
            if (mask & (1u << k)) g.add_edge(pairs[k].first, pairs[k].second);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

bool oracle_match_all(MultiGraph& g) {
    {
        CollectingSink sink;
        enum_matchings(g, sink);
        if (sorted(sink.solutions) != brute_matchings(g).solutions) return false;
    }
    for (VertexId r = g.first_live_vertex(); r != MultiGraph::kNil; r = g.next_live_vertex(r)) {
        CollectingSink sink;
        enum_connected_from_root(g, r, sink);
        if (sorted(sink.solutions) != brute_connected(g, r).solutions) return false;
    }
    {
        CollectingSink sink;
        enum_all_connected(g, sink);
        if (sorted(sink.solutions) != brute_connected(g, std::nullopt).solutions) return false;
    }
    {
        CollectingSink sink;
        enum_spanning_trees(g, sink);
        if (sorted(sink.solutions) != brute_spanning_trees(g).solutions) return false;
    }
    return true;
}

void criterion1_and_2() {
    bool ok1 = true, ok2 = true;
    int exhaustive = 0;
    for (int n = 1; n <= 6; ++n) {
        for (MultiGraph& g : connected_graphs_up_to_iso(n)) {
            ++exhaustive;
            if (!oracle_match_all(g)) ok1 = false;
            if (brute_spanning_trees(g).count != matrix_tree_count(g)) ok2 = false;
        }
    }
    Rng rng(20240817);
    for (int i = 0; i < 200; ++i) {
        int n = 7 + (int)rand_below(rng, 2);
        MultiGraph g = gen_connected(n, (int)rand_below(rng, (std::uint64_t)n), rng);
        if (!oracle_match_all(g)) ok1 = false;
    }
    report(1, ok1,
           "enumerators equal brute-force sets on all " + std::to_string(exhaustive) +
               " connected graphs up to isomorphism (n <= 6) and 200 random graphs (n = 7, 8)");

    Rng mrng(5150);
    for (int i = 0; i < 150; ++i) {
        int n = 2 + (int)rand_below(mrng, 8);
        MultiGraph g = gen_multi(n, n - 1 + (int)rand_below(mrng, 8), mrng);
        CountingSink sink;
        if (enum_spanning_trees(g, sink) != matrix_tree_count(g)) ok2 = false;
    }
    report(2, ok2,
           "matrix-tree count equals brute count (n <= 6) and enumerator count "
           "(random multigraphs, n <= 9)");
}

void criterion3() {
    bool ok = true;
    Rng rng(31415);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + (int)rand_below(rng, 6);
        MultiGraph g = gen_chordal(n, 3, rng);
        CollectingSink sink;
        auto z = simplicial_structure(g);
        enum_elim_orderings(*z, sink);
        auto expect = brute_elim_orderings([&] { return simplicial_structure(g); }, n);
        if (sorted(sink.solutions) != expect.solutions) ok = false;
    }
    // C4 has no simplicial vertex: the enumerator must say "not chordal".
    {
        MultiGraph c4 = gen_cycle(4);
        auto z = simplicial_structure(c4);
        CountingSink sink;
        bool threw = false;
        try {
            enum_elim_orderings(*z, sink);
        } catch (const non_chordal_error&) {
            threw = true;
        }
        if (!threw) ok = false;
    }
    // Paw graph (triangle plus a pendant): count pinned to the oracle.
    {
        MultiGraph paw(4);
        paw.add_edge(0, 1);
        paw.add_edge(1, 2);
        paw.add_edge(2, 0);
        paw.add_edge(2, 3);
        auto z = simplicial_structure(paw);
        CountingSink sink;
        std::uint64_t got = enum_elim_orderings(*z, sink);
        auto expect = brute_elim_orderings([&] { return simplicial_structure(paw); }, 4);
        if (got != expect.count || got != 14) ok = false;
    }
    report(3, ok,
           "perfect elimination orderings match the permutation oracle on 100 chordal "
           "graphs; C4 raises non-chordal; paw count equals the oracle's 14");
}

void criterion4_5_7_8() {
    bool po = true, claim = true, structure = true, output = true;
    int checked = 0;
    for (int algo = 0; algo < 4; ++algo) {
        auto runRange = [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t s = lo; s <= hi; ++s) {
                corpus::RunResult r = corpus::run_case(algo, s);
                ++checked;
                POParams params{corpus::kAlphas[algo], kFrozenBeta[algo]};
                POReport rep = simulate_push_out(r.trace, params);
                if (!rep.all_pass) po = false;
                if (rep.all_pass &&
                    (!rep.claim_holds || rep.conservation_error > 1e-9))
                    claim = false;
                if (algo == corpus::kConnected || algo == corpus::kSpTree) {
                    for (const auto& n : r.trace.nodes)
                        if (!n.leaf && n.children.size() < 2) structure = false;
                    if (r.trace.nodes.size() > 2 * r.trace.solution_count())
                        structure = false;
                }
                if ((double)r.deltaSize >
                    kFrozenOutputC * (double)r.ops + (double)r.firstSize)
                    output = false;
            }
        };
        runRange(corpus::kCalibrationSeedFirst, corpus::kCalibrationSeedLast);
        runRange(corpus::kValidationSeedFirst, corpus::kValidationSeedLast);
    }
    report(4, po,
           "push-out condition holds at alpha = 1.25/1.5/1.5/2.0 with frozen beta = "
           "24/36/44/14 on calibration and disjoint validation corpora (" +
               std::to_string(checked) + " traces)");
    report(5, claim,
           "charging simulation: S(X) <= T(X)/(alpha-1) everywhere and conservation "
           "within 1e-9 on every passing trace");
    report(7, structure,
           "connected/sptree traces: every inner iteration has >= 2 children and "
           "iterations <= 2 x solutions");
    report(8, output,
           "delta stream size <= 0.2 x ops + first solution size on every corpus run");
}

void criterion6() {
    struct Family {
        const char* name;
        std::vector<int> sizes;
        double (*ratio)(int);
    };
    // Leaf orderings of any n-vertex tree number at least 2^(n-1), so the
    // elimination family uses reduced sizes (growth factor 1.5 in n, same
    // bound applied); the other three run the sizes as given.
    std::vector<Family> families{
        {"matchings on 3-hub graphs", {50, 100, 200, 400},
         [](int n) {
             Rng rng(42);
             MultiGraph g = gen_hub(n, 3, rng);
             CountingSink sink;
             std::uint64_t before = g.op_count();
             std::uint64_t count = enum_matchings(g, sink);
             return (double)(g.op_count() - before) / (double)count;
         }},
        {"connected sets of caterpillars", {50, 100, 200, 400},
         [](int n) {
             Rng rng(42);
             MultiGraph g = gen_caterpillar(n, 5, rng);
             CountingSink sink;
             std::uint64_t before = g.op_count();
             std::uint64_t count = enum_connected_from_root(g, 0, sink);
             return (double)(g.op_count() - before) / (double)count;
         }},
        {"spanning trees of theta graphs", {50, 100, 200, 400},
         [](int n) {
             Rng rng(42);
             MultiGraph g = gen_theta(n, rng);
             CountingSink sink;
             std::uint64_t before = g.op_count();
             std::uint64_t count = enum_spanning_trees(g, sink);
             return (double)(g.op_count() - before) / (double)count;
         }},
        {"leaf orderings of caterpillar trees (reduced sizes 12..18)", {12, 14, 16, 18},
         [](int n) {
             Rng rng(42);
             MultiGraph g = gen_caterpillar(n, 2, rng);
             auto z = leaf_structure(g);
             CountingSink sink;
             std::uint64_t before = z->op_count();
             std::uint64_t count = enum_elim_orderings(*z, sink);
             return (double)(z->op_count() - before) / (double)count;
         }},
    };
    bool ok = true;
    std::string detail;
    for (const Family& f : families) {
        double first = f.ratio(f.sizes.front());
        double last = first;
        for (std::size_t i = 1; i < f.sizes.size(); ++i) last = f.ratio(f.sizes[i]);
        if (last > 2.0 * first) ok = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, " [%s: %.1f -> %.1f]", f.name, first, last);
        detail += buf;
    }
    report(6, ok, "ops per solution at the largest size is <= 2x the smallest size" + detail);
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(ENUMCTL_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

void criterion9() {
    bool ok = true;
    Rng rng(90210);
    for (int it = 0; it < 1000; ++it) {
        bool sets = rand_below(rng, 2) == 0;
        int len = 1 + (int)rand_below(rng, 16);
        std::vector<std::vector<int>> stream;
        for (int i = 0; i < len; ++i) {
            int sz = (int)rand_below(rng, 9);
            if (sets) {
                std::set<int> s;
                for (int j = 0; j < sz; ++j) s.insert((int)rand_below(rng, 15));
                stream.emplace_back(s.begin(), s.end());
            } else {
                std::vector<int> seq(sz);
                for (int& x : seq) x = (int)rand_below(rng, 15);
                stream.push_back(seq);
            }
        }
        DeltaSink sink;
        for (const auto& sol : stream)
            sets ? sink.emit_set(sol) : sink.emit_sequence(sol);
        if (decode_deltas(sink.records()) != stream) ok = false;
    }

    // Byte-identical CLI output for a fixed seed, including a full pipeline
    // of generation -> enumeration -> delta stream.
    std::string gen1 = run_cli("gen chordal 6 2 --seed 7");
    std::string gen2 = run_cli("gen chordal 6 2 --seed 7");
    if (gen1.empty() || gen1 != gen2) ok = false;
    std::string graphFile = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                            "/acceptance_graph.txt";
    {
        std::string g = run_cli("gen multi 7 9 --seed 11");
        FILE* f = fopen(graphFile.c_str(), "w");
        fwrite(g.data(), 1, g.size(), f);
        fclose(f);
    }
    std::string run1 = run_cli("spanning-trees -i " + graphFile + " --delta");
    std::string run2 = run_cli("spanning-trees -i " + graphFile + " --delta");
    if (run1.empty() || run1 != run2) ok = false;
    std::istringstream deltaStream(run1);
    std::string countOut = run_cli("spanning-trees -i " + graphFile + " --count");
    if (std::to_string(decode_deltas(read_delta_stream(deltaStream)).size()) + "\n" != countOut)
        ok = false;
    std::remove(graphFile.c_str());
    report(9, ok,
           "delta decode(encode) identity on 1000 random streams; CLI output "
           "byte-identical for a fixed seed and --count equals decoded --delta length");
}

}  // namespace

int main() {
    criterion1_and_2();
    criterion3();
    criterion4_5_7_8();
    criterion6();
    criterion9();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
