#ifndef POENUM_SPTREE_HPP
#define POENUM_SPTREE_HPP

#include <cstdint>

#include "poenum/graph.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"

namespace poe {

// Enumerates every spanning tree of a connected multigraph as a set of
// original edge ids. Each iteration first contracts all bridges into the
// tree (a bridge is in every spanning tree), then branches over the parallel
// or series class of the lowest-id live edge. The graph is restored on
// return.
std::uint64_t enum_spanning_trees(MultiGraph& g, SolutionSink& sink,
                                  TraceRecorder* trace = nullptr);

}  // namespace poe

#endif
