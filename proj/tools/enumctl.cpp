#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "poenum/connected.hpp"
#include "poenum/elim.hpp"
#include "poenum/gen.hpp"
#include "poenum/graph_io.hpp"
#include "poenum/matching.hpp"
#include "poenum/oracle.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"
#include "poenum/sptree.hpp"

namespace {

using namespace poe;

enum class Mode { Count, Delta, Full };

struct CommonOpts {
    std::string input = "-";
    std::string outPath;
    std::string tracePath;
    Mode mode = Mode::Count;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "graph file, - for stdin");
    cmd->add_option("--out", o.outPath, "write output to a file instead of stdout");
    cmd->add_option("--trace", o.tracePath, "record the recursion trace as JSON lines");
    auto flags = std::make_shared<std::array<bool, 3>>();
    auto* grp = cmd->add_option_group("mode");
    grp->add_flag("--count", (*flags)[0], "print only the solution count (default)");
    grp->add_flag("--delta", (*flags)[1], "print the delta-encoded solution stream");
    grp->add_flag("--full", (*flags)[2], "print every solution in full");
    grp->require_option(0, 1);
    cmd->parse_complete_callback([&o, flags] {
        o.mode = (*flags)[1] ? Mode::Delta : (*flags)[2] ? Mode::Full : Mode::Count;
    });
}

// Runs one enumeration subcommand: resolves sink/trace/output plumbing, then
// defers to `run(graph, sink, trace)` which returns the solution count.
template <class Fn>
int run_enum(const CommonOpts& o, Fn&& run) {
    MultiGraph g = read_graph_file(o.input);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.outPath.empty()) {
        file.open(o.outPath);
        if (!file) throw input_error("cannot open output file " + o.outPath);
        out = &file;
    }
    TraceRecorder recorder;
    TraceRecorder* trace = o.tracePath.empty() ? nullptr : &recorder;

    std::uint64_t count = 0;
    if (o.mode == Mode::Delta) {
        DeltaSink sink(out);
        count = run(g, sink, trace);
    } else if (o.mode == Mode::Full) {
        FullPrintSink sink(*out);
        count = run(g, sink, trace);
    } else {
        CountingSink sink;
        count = run(g, sink, trace);
        *out << count << "\n";
    }
    (void)count;

    if (trace) {
        std::ofstream tf(o.tracePath);
        if (!tf) throw input_error("cannot open trace file " + o.tracePath);
        write_trace_jsonl(tf, recorder.trace());
    }
    return 0;
}

int cmd_profile(const std::string& tracePath, double alpha, std::optional<double> beta,
                bool betaSearch, const std::string& reportPath) {
    std::ifstream in(tracePath);
    if (!in) throw input_error("cannot open trace file " + tracePath);
    RecursionTrace trace = read_trace_jsonl(in);
    trace.validate();
    if (betaSearch) {
        try {
            std::cout << min_feasible_beta(trace, alpha) << "\n";
        } catch (const trace_error&) {
            std::cout << "infeasible\n";
        }
        return 0;
    }
    POParams params{alpha, beta.value_or(0.0)};
    POReport report = simulate_push_out(trace, params);
    std::cout << (report.all_pass ? "pass" : "fail") << " alpha=" << params.alpha
              << " beta=" << params.beta << " claim=" << (report.claim_holds ? "holds" : "violated")
              << " max_claim_ratio=" << report.max_claim_ratio << "\n";
    if (!reportPath.empty()) {
        std::ofstream rf(reportPath);
        if (!rf) throw input_error("cannot open report file " + reportPath);
        write_po_report_csv(rf, trace, report);
    }
    return report.all_pass ? 0 : 1;
}

// Quick self-check: enumerators against the brute-force oracles on random
// small graphs. Exit 1 on any mismatch.
int cmd_oracle_check(std::uint64_t seed, int cases) {
    Rng rng(seed);
    for (int c = 0; c < cases; ++c) {
        int n = 3 + (int)rand_below(rng, 5);
        MultiGraph g = gen_connected(n, (int)rand_below(rng, 3), rng);
        CollectingSink mats, subs, trees;
        enum_matchings(g, mats);
        enum_all_connected(g, subs);
        enum_spanning_trees(g, trees);
        auto sorted = [](std::vector<std::vector<int>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(mats.solutions) != brute_matchings(g).solutions ||
            sorted(subs.solutions) != brute_connected(g, std::nullopt).solutions ||
            sorted(trees.solutions) != brute_spanning_trees(g).solutions ||
            trees.solutions.size() != matrix_tree_count(g)) {
            std::cerr << "oracle mismatch on case " << c << " (seed " << seed << ")\n";
            return 1;
        }
    }
    std::cout << "ok " << cases << " cases\n";
    return 0;
}

int cmd_gen(const std::vector<std::string>& spec, std::uint64_t seed) {
    Rng rng(seed);
    auto arg_int = [&](std::size_t i) {
        if (i >= spec.size()) throw input_error("generator spec too short");
        return std::stoi(spec[i]);
    };
    MultiGraph g;
    const std::string& kind = spec.empty() ? "" : spec[0];
    if (kind == "cycle") g = gen_cycle(arg_int(1));
    else if (kind == "star") g = gen_star(arg_int(1));
    else if (kind == "path") g = gen_path(arg_int(1));
    else if (kind == "complete") g = gen_complete(arg_int(1));
    else if (kind == "tree") g = gen_tree(arg_int(1), rng);
    else if (kind == "gnp") {
        if (spec.size() < 3) throw input_error("gnp needs n and p");
        g = gen_gnp(arg_int(1), std::stod(spec[2]), rng);
    } else if (kind == "chordal") g = gen_chordal(arg_int(1), arg_int(2), rng);
    else if (kind == "multi") g = gen_multi(arg_int(1), arg_int(2), rng);
    else throw input_error("unknown generator spec '" + kind + "'");
    write_graph(std::cout, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumctl: enumeration of matchings, connected induced subgraphs,\n"
                 "spanning trees and elimination orderings with amortized-cost tracing"};
    app.require_subcommand(1);

    CommonOpts mo, co, so, eo;
    add_common(app.add_subcommand("matchings", "enumerate all matchings"), mo);

    auto* conn = app.add_subcommand("connected", "enumerate connected induced subgraphs");
    add_common(conn, co);
    int root = -1;
    bool allRoots = false;
    auto* rootOpt = conn->add_option("--root", root, "enumerate subgraphs containing this vertex");
    conn->add_flag("--all", allRoots, "enumerate every connected induced subgraph")
        ->excludes(rootOpt);

    add_common(app.add_subcommand("spanning-trees", "enumerate all spanning trees"), so);

    auto* elim = app.add_subcommand("elim", "enumerate elimination orderings");
    add_common(elim, eo);
    std::string structureName = "simplicial";
    elim->add_option("--structure", structureName, "simplicial | noncut | leaf")
        ->check(CLI::IsMember({"simplicial", "noncut", "leaf"}));

    auto* prof = app.add_subcommand("profile", "check the push-out condition on a trace");
    std::string profTrace, profReport;
    double alpha = 1.5;
    std::optional<double> beta;
    bool betaSearch = false;
    prof->add_option("--trace", profTrace, "trace file (JSON lines)")->required();
    prof->add_option("--alpha", alpha, "amortization factor, > 1")
        ->check(CLI::Range(std::nextafter(1.0, 2.0), 1e9));
    prof->add_option("--beta", beta, "slack coefficient, >= 0")->check(CLI::NonNegativeNumber);
    prof->add_flag("--beta-search", betaSearch, "print the minimal feasible beta");
    prof->add_option("--report", profReport, "write the per-node report as CSV");

    auto* check = app.add_subcommand("oracle-check", "compare enumerators with brute force");
    std::uint64_t checkSeed = 1;
    int checkCases = 50;
    check->add_option("--seed", checkSeed, "random seed");
    check->add_option("--cases", checkCases, "number of random instances");

    auto* gen = app.add_subcommand("gen", "print a generated graph");
    std::vector<std::string> genSpec;
    std::uint64_t genSeed = 1;
    gen->add_option("spec", genSpec, "cycle|star|path|complete|tree|gnp|chordal|multi + sizes")
        ->expected(-1);
    gen->add_option("--seed", genSeed, "random seed");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand("matchings"))
            return run_enum(mo, [](poe::MultiGraph& g, poe::SolutionSink& s, poe::TraceRecorder* t) {
                return poe::enum_matchings(g, s, t);
            });
        if (app.got_subcommand("connected")) {
            if (!allRoots && root < 0)
                throw poe::input_error("connected needs --root R or --all");
            return run_enum(co, [&](poe::MultiGraph& g, poe::SolutionSink& s, poe::TraceRecorder* t) {
                return allRoots ? poe::enum_all_connected(g, s)
                                : poe::enum_connected_from_root(g, root, s, t);
            });
        }
        if (app.got_subcommand("spanning-trees"))
            return run_enum(so, [](poe::MultiGraph& g, poe::SolutionSink& s, poe::TraceRecorder* t) {
                return poe::enum_spanning_trees(g, s, t);
            });
        if (app.got_subcommand("elim"))
            return run_enum(eo, [&](poe::MultiGraph& g, poe::SolutionSink& s, poe::TraceRecorder* t) {
                std::unique_ptr<poe::ElimStructure> z =
                    structureName == "noncut" ? poe::noncut_structure(g)
                    : structureName == "leaf" ? poe::leaf_structure(g)
                                              : poe::simplicial_structure(g);
                return poe::enum_elim_orderings(*z, s, t);
            });
        if (app.got_subcommand("profile"))
            return cmd_profile(profTrace, alpha, beta, betaSearch, profReport);
        if (app.got_subcommand("oracle-check")) return cmd_oracle_check(checkSeed, checkCases);
        if (app.got_subcommand("gen")) return cmd_gen(genSpec, genSeed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const poe::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
