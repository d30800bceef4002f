#ifndef POENUM_SOLUTION_IO_HPP
#define POENUM_SOLUTION_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace poe {

class delta_error : public std::runtime_error {
public:
    explicit delta_error(const std::string& what) : std::runtime_error(what) {}
};

// One emitted solution, expressed against the previous one.
//
//   Full      `=` id...        first solution, spelled out
//   SetDelta  `+` a... / `-` r...   symmetric difference for id sets
//   SeqDelta  `~` k id...      keep the first k elements, append the rest
struct DeltaRecord {
    enum class Kind { Full, SetDelta, SeqDelta };
    Kind kind = Kind::Full;
    std::vector<int> ids;        // Full payload, or SeqDelta suffix
    std::vector<int> removals;   // SetDelta only
    int keep = 0;                // SeqDelta only
    std::size_t size() const {
        return kind == Kind::SeqDelta ? ids.size() + 1 : ids.size() + removals.size();
    }
};

class SolutionSink {
public:
    virtual ~SolutionSink() = default;
    // Sets arrive sorted; sequences arrive in removal order.
    virtual void emit_set(const std::vector<int>& ids) { on_emit(ids); }
    virtual void emit_sequence(const std::vector<int>& seq) { on_emit(seq); }
    std::uint64_t emitted() const { return emitted_; }

protected:
    virtual void on_emit(const std::vector<int>&) { ++emitted_; }
    std::uint64_t emitted_ = 0;
};

class CountingSink : public SolutionSink {};

class CollectingSink : public SolutionSink {
public:
    std::vector<std::vector<int>> solutions;

protected:
    void on_emit(const std::vector<int>& s) override {
        solutions.push_back(s);
        ++emitted_;
    }
};

// Delta-encodes the emission stream. Records are optionally forwarded to a
// text stream and always reflected in the size counters, which is what the
// output-amortization check reads.
class DeltaSink : public SolutionSink {
public:
    explicit DeltaSink(std::ostream* out = nullptr) : out_(out) {}

    void emit_set(const std::vector<int>& ids) override;
    void emit_sequence(const std::vector<int>& seq) override;

    const std::vector<DeltaRecord>& records() const { return records_; }
    std::uint64_t total_delta_size() const { return total_size_; }
    std::uint64_t first_solution_size() const { return first_size_; }

private:
    void push(DeltaRecord rec);
    std::ostream* out_;
    std::vector<DeltaRecord> records_;
    std::vector<int> prev_;
    bool have_prev_ = false;
    std::uint64_t total_size_ = 0, first_size_ = 0;
};

// Prints every solution in full, one per line.
class FullPrintSink : public SolutionSink {
public:
    explicit FullPrintSink(std::ostream& out) : out_(out) {}

protected:
    void on_emit(const std::vector<int>& s) override;

private:
    std::ostream& out_;
};

void write_delta_record(std::ostream& out, const DeltaRecord& rec);
std::vector<DeltaRecord> read_delta_stream(std::istream& in);
std::vector<std::vector<int>> decode_deltas(const std::vector<DeltaRecord>& stream);

}  // namespace poe

#endif
