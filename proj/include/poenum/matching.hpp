#ifndef POENUM_MATCHING_HPP
#define POENUM_MATCHING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "poenum/graph.hpp"
#include "poenum/profiler.hpp"
#include "poenum/solution_io.hpp"

namespace poe {

// Enumerates every matching (the empty one included) of a simple graph.
// Branches on a maximum-degree vertex v: one call without any edge at v,
// then one call per edge at v. The graph is restored on return.
std::uint64_t enum_matchings(MultiGraph& g, SolutionSink& sink,
                             TraceRecorder* trace = nullptr);

// Visits the branch states G+(e_i) for every edge e_i = (v, u_i) in
// adjacency order. Each state is one cheap mutation away from the previous
// one, and the walk restores g before returning. The visitor runs while the
// graph is in the corresponding G+(e_i) state.
void incremental_gplus_walk(MultiGraph& g, VertexId v,
                            const std::function<void(EdgeId, VertexId)>& visit);

}  // namespace poe

#endif
