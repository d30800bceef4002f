#ifndef POENUM_ELIM_HPP
#define POENUM_ELIM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "poenum/graph.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"

namespace poe {

class elim_error : public std::runtime_error {
public:
    explicit elim_error(const std::string& what) : std::runtime_error(what) {}
};

class non_chordal_error : public elim_error {
public:
    explicit non_chordal_error(const std::string& what) : elim_error(what) {}
};

// A structure whose elements can be removed one at a time. Removal is
// reversible so the enumerator can backtrack; equal states must always
// yield equal removable sets.
class ElimStructure {
public:
    virtual ~ElimStructure() = default;
    virtual std::size_t size() const = 0;
    virtual std::vector<int> ground_elements() const = 0;     // sorted
    virtual std::vector<int> removable_elements() const = 0;  // sorted subset
    virtual std::size_t remove_element(int e) = 0;            // returns undo token
    virtual void restore(std::size_t token) = 0;
    virtual std::uint64_t op_count() const = 0;
    // Raised when a non-empty state has no removable element.
    virtual void on_stuck() const { throw elim_error("structure has no removable element"); }
};

// Removable = simplicial vertices. A chordal input always has one; hitting a
// stuck state therefore doubles as a chordality test.
std::unique_ptr<ElimStructure> simplicial_structure(MultiGraph& g);
// Removable = non-cut vertices of a connected graph.
std::unique_ptr<ElimStructure> noncut_structure(MultiGraph& g);
// Removable = vertices of degree <= 1 of a tree.
std::unique_ptr<ElimStructure> leaf_structure(MultiGraph& g);

std::uint64_t enum_elim_orderings(ElimStructure& z, SolutionSink& sink,
                                  TraceRecorder* trace = nullptr);

}  // namespace poe

#endif
