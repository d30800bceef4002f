#ifndef POENUM_CONNECTED_HPP
#define POENUM_CONNECTED_HPP

#include <cstdint>

#include "poenum/graph.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"

namespace poe {

// Emits every vertex set containing r that induces a connected subgraph,
// branching on contract-(r,v) versus delete-v for a neighbor v of r.
// Solutions are reported in original vertex ids; g is restored on return.
std::uint64_t enum_connected_from_root(MultiGraph& g, VertexId r, SolutionSink& sink,
                                       TraceRecorder* trace = nullptr);

// Every nonempty connected induced subgraph, each exactly once (grouped by
// smallest contained vertex).
std::uint64_t enum_all_connected(MultiGraph& g, SolutionSink& sink);

}  // namespace poe

#endif
