#include "poenum/profiler.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace poe {

int RecursionTrace::root() const {
    int r = -1;
    for (const auto& n : nodes)
        if (n.parent == -1) {
            if (r != -1) throw trace_error("multiple roots");
            r = n.id;
        }
    if (r == -1) throw trace_error("no root");
    return r;
}

std::uint64_t RecursionTrace::t_star() const {
    std::uint64_t best = 0;
    for (const auto& n : nodes)
        if (n.leaf) best = std::max(best, n.cost);
    return best;
}

std::uint64_t RecursionTrace::t_bar(int id) const {
    std::uint64_t s = 0;
    for (int c : nodes[id].children) s += nodes[c].cost;
    return s;
}

std::uint64_t RecursionTrace::total_cost() const {
    std::uint64_t s = 0;
    for (const auto& n : nodes) s += n.cost;
    return s;
}

std::uint64_t RecursionTrace::solution_count() const {
    std::uint64_t s = 0;
    for (const auto& n : nodes) s += n.emitted_solution ? 1 : 0;
    return s;
}

void RecursionTrace::validate() const {
    (void)root();
    for (const auto& n : nodes) {
        if (n.id < 0 || n.id >= (int)nodes.size() || nodes[n.id].id != n.id)
            throw trace_error("ids must be dense and index-consistent");
        if (n.leaf != n.children.empty()) throw trace_error("leaf flag inconsistent");
        for (int c : n.children) {
            if (c < 0 || c >= (int)nodes.size() || nodes[c].parent != n.id)
                throw trace_error("parent/child link mismatch");
        }
        if (n.parent != -1) {
            const auto& kids = nodes[n.parent].children;
            if (std::find(kids.begin(), kids.end(), n.id) == kids.end())
                throw trace_error("child missing from parent's list");
        }
    }
}

void TraceRecorder::enter(std::uint64_t snap) {
    if (finished_) throw trace_error("recorder already finished one run");
    if (!stack_.empty()) trace_.nodes[stack_.back()].cost += snap - last_snap_;
    IterationRecord rec;
    rec.id = (int)trace_.nodes.size();
    rec.parent = stack_.empty() ? -1 : stack_.back();
    if (rec.parent != -1) {
        trace_.nodes[rec.parent].children.push_back(rec.id);
        trace_.nodes[rec.parent].leaf = false;
    }
    trace_.nodes.push_back(std::move(rec));
    stack_.push_back(trace_.nodes.back().id);
    last_snap_ = snap;
}

void TraceRecorder::exit(std::uint64_t snap, bool emittedSolution) {
    if (stack_.empty()) throw trace_error("exit without matching enter");
    IterationRecord& n = trace_.nodes[stack_.back()];
    n.cost += snap - last_snap_;
    if (emittedSolution) n.emitted_solution = true;
    stack_.pop_back();
    last_snap_ = snap;
    if (stack_.empty()) finished_ = true;
}

void TraceRecorder::mark_solution() {
    if (stack_.empty()) throw trace_error("solution outside any iteration");
    trace_.nodes[stack_.back()].emitted_solution = true;
}

const RecursionTrace& TraceRecorder::trace() const {
    if (!finished_ || !stack_.empty()) throw trace_error("trace still open");
    return trace_;
}

namespace {

POReport evaluate(const RecursionTrace& trace, POParams params, bool charge) {
    if (!(params.alpha > 1.0)) throw trace_error("alpha must exceed 1");
    if (params.beta < 0.0) throw trace_error("beta must be non-negative");
    POReport rep;
    rep.params = params;
    rep.per_node.resize(trace.nodes.size());
    const double tstar = (double)trace.t_star();
    for (const auto& n : trace.nodes) {
        PONodeResult& r = rep.per_node[n.id];
        r.id = n.id;
        r.inner = !n.leaf;
        if (n.leaf) continue;
        double tbar = (double)trace.t_bar(n.id);
        double need = params.alpha * (double)n.cost -
                      params.beta * (double)(n.children.size() + 1) * tstar;
        r.slack = tbar - need;
        r.pass = tbar >= need;
        if (!r.pass) rep.all_pass = false;
        if (tbar == 0.0) {
            r.degenerate = true;
            ++rep.degenerate_nodes;
        }
    }
    if (!charge) return rep;

    rep.charging_done = true;
    std::vector<int> order;
    order.reserve(trace.nodes.size());
    std::vector<int> work{trace.root()};
    while (!work.empty()) {
        int id = work.back();
        work.pop_back();
        order.push_back(id);
        for (int c : trace.nodes[id].children) work.push_back(c);
    }
    for (int id : order) {
        const IterationRecord& n = trace.nodes[id];
        PONodeResult& r = rep.per_node[n.id];
        double have = r.s_received + (double)n.cost;
        if (n.leaf) {
            r.retained = have;
            continue;
        }
        double cap = params.beta / (params.alpha - 1.0) *
                     (double)(n.children.size() + 1) * tstar;
        double tbar = (double)trace.t_bar(n.id);
        if (tbar == 0.0) {
            r.retained = have;  // nothing to push toward zero-cost children
            continue;
        }
        double pushed = std::max(0.0, have - cap);
        r.retained = have - pushed;
        for (int c : n.children)
            rep.per_node[c].s_received = pushed * (double)trace.nodes[c].cost / tbar;
    }
    double retainedSum = 0.0, costSum = 0.0;
    for (const auto& n : trace.nodes) {
        const PONodeResult& r = rep.per_node[n.id];
        retainedSum += r.retained;
        costSum += (double)n.cost;
        bool parentDegenerate =
            n.parent != -1 && rep.per_node[n.parent].degenerate;
        if (parentDegenerate) continue;
        if (r.s_received > 0.0 && n.cost > 0) {
            double ratio = r.s_received * (params.alpha - 1.0) / (double)n.cost;
            rep.max_claim_ratio = std::max(rep.max_claim_ratio, ratio);
            if (ratio > 1.0 + 1e-9) rep.claim_holds = false;
        } else if (r.s_received > 1e-12 && n.cost == 0) {
            rep.claim_holds = false;
        }
    }
    rep.conservation_error =
        costSum == 0.0 ? 0.0 : std::abs(retainedSum - costSum) / costSum;
    return rep;
}

}  // namespace

POReport check_po(const RecursionTrace& trace, POParams params) {
    return evaluate(trace, params, false);
}

POReport simulate_push_out(const RecursionTrace& trace, POParams params) {
    return evaluate(trace, params, true);
}

double min_feasible_beta(const RecursionTrace& trace, double alpha) {
    if (!(alpha > 1.0)) throw trace_error("alpha must exceed 1");
    const double tstar = (double)trace.t_star();
    double beta = 0.0;
    for (const auto& n : trace.nodes) {
        if (n.leaf) continue;
        double deficit = alpha * (double)n.cost - (double)trace.t_bar(n.id);
        if (deficit <= 0.0) continue;
        double denom = (double)(n.children.size() + 1) * tstar;
        if (denom == 0.0) throw trace_error("deficit at a node with t_star = 0");
        beta = std::max(beta, deficit / denom);
    }
    return beta;
}

std::vector<POParams> search_feasible_params(const RecursionTrace& trace,
                                             const std::vector<double>& alphaGrid,
                                             const std::vector<double>& betaGrid) {
    if (alphaGrid.empty() || betaGrid.empty()) throw trace_error("empty parameter grid");
    std::vector<POParams> out;
    for (double a : alphaGrid)
        for (double b : betaGrid) {
            POParams p{a, b};
            if (check_po(trace, p).all_pass) out.push_back(p);
        }
    return out;
}

void write_trace_jsonl(std::ostream& out, const RecursionTrace& trace) {
    for (const auto& n : trace.nodes) {
        nlohmann::json j;
        j["id"] = n.id;
        if (n.parent == -1) j["parent"] = nullptr; else j["parent"] = n.parent;
        j["cost"] = n.cost;
        j["leaf"] = n.leaf;
        j["sol"] = n.emitted_solution;
        out << j.dump() << "\n";
    }
}

RecursionTrace read_trace_jsonl(std::istream& in) {
    RecursionTrace trace;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        IterationRecord rec;
        rec.id = j.at("id").get<int>();
        rec.parent = j.at("parent").is_null() ? -1 : j.at("parent").get<int>();
        rec.cost = j.at("cost").get<std::uint64_t>();
        rec.leaf = j.at("leaf").get<bool>();
        rec.emitted_solution = j.at("sol").get<bool>();
        trace.nodes.push_back(std::move(rec));
    }
    std::sort(trace.nodes.begin(), trace.nodes.end(),
              [](const IterationRecord& a, const IterationRecord& b) { return a.id < b.id; });
    for (const auto& n : trace.nodes)
        if (n.parent != -1) {
            trace.nodes[n.parent].children.push_back(n.id);
            trace.nodes[n.parent].leaf = false;
        }
    trace.validate();
    return trace;
}

void write_po_report_csv(std::ostream& out, const RecursionTrace& trace, const POReport& report) {
    out << "node_id,t,tbar,children,slack,s_received,retained\n";
    for (const auto& n : trace.nodes) {
        const PONodeResult& r = report.per_node[n.id];
        out << n.id << "," << n.cost << "," << trace.t_bar(n.id) << ","
            << n.children.size() << "," << r.slack << "," << r.s_received << ","
            << r.retained << "\n";
    }
}

}  // namespace poe
