#ifndef POENUM_PROFILER_HPP
#define POENUM_PROFILER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

namespace poe {

class trace_error : public std::runtime_error {
public:
    explicit trace_error(const std::string& what) : std::runtime_error(what) {}
};

struct IterationRecord {
    int id = 0;
    int parent = -1;  // -1 for the root
    std::uint64_t cost = 0;
    std::vector<int> children;
    bool leaf = true;
    bool emitted_solution = false;
};

struct RecursionTrace {
    std::vector<IterationRecord> nodes;  // indexed by id

    int root() const;
    std::uint64_t t_star() const;           // max cost over leaves
    std::uint64_t t_bar(int id) const;      // summed child cost
    std::uint64_t total_cost() const;
    std::uint64_t solution_count() const;
    void validate() const;                  // unique root, acyclic, consistent links
};

// Builds a trace from enter/exit callbacks carrying op-counter snapshots.
// Work done between a child's exit and the next event is attributed to the
// parent, so each node's cost covers exactly its own iteration.
class TraceRecorder {
public:
    void enter(std::uint64_t opSnapshot);
    void exit(std::uint64_t opSnapshot, bool emittedSolution);
    void mark_solution();

    bool open() const { return !stack_.empty(); }
    const RecursionTrace& trace() const;

private:
    RecursionTrace trace_;
    std::vector<int> stack_;
    std::uint64_t last_snap_ = 0;
    bool finished_ = false;
};

// RAII iteration scope used by the instrumented enumerators.
class IterationScope {
public:
    IterationScope(TraceRecorder* rec, const std::uint64_t& opCounter)
        : rec_(rec), ops_(opCounter) {
        if (rec_) rec_->enter(ops_);
    }
    ~IterationScope() {
        if (rec_) rec_->exit(ops_, false);
    }
    void solution() {
        if (rec_) rec_->mark_solution();
    }
    IterationScope(const IterationScope&) = delete;
    IterationScope& operator=(const IterationScope&) = delete;

private:
    TraceRecorder* rec_;
    const std::uint64_t& ops_;
};

struct POParams {
    double alpha = 1.5;  // > 1
    double beta = 0.0;   // >= 0
};

struct PONodeResult {
    int id = 0;
    bool inner = false;
    bool pass = true;        // leaves pass vacuously
    double slack = 0.0;      // tbar - (alpha*t - beta*(|C|+1)*tstar)
    bool degenerate = false; // inner node with tbar == 0: the push-out rule divides by tbar
    double s_received = 0.0;
    double retained = 0.0;
};

struct POReport {
    POParams params;
    std::vector<PONodeResult> per_node;
    bool all_pass = true;
    bool charging_done = false;
    bool claim_holds = true;         // S(X) <= T(X)/(alpha-1) at every non-degenerate-child node
    double max_claim_ratio = 0.0;    // max of S(X)*(alpha-1)/T(X)
    double conservation_error = 0.0; // |sum retained - sum T| / sum T
    int degenerate_nodes = 0;
};

POReport check_po(const RecursionTrace& trace, POParams params);
POReport simulate_push_out(const RecursionTrace& trace, POParams params);

// Smallest beta making every inner node pass at the given alpha.
double min_feasible_beta(const RecursionTrace& trace, double alpha);

std::vector<POParams> search_feasible_params(const RecursionTrace& trace,
                                             const std::vector<double>& alphaGrid,
                                             const std::vector<double>& betaGrid);

void write_trace_jsonl(std::ostream& out, const RecursionTrace& trace);
RecursionTrace read_trace_jsonl(std::istream& in);
void write_po_report_csv(std::ostream& out, const RecursionTrace& trace, const POReport& report);

}  // namespace poe

#endif
