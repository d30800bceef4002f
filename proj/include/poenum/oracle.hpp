#ifndef POENUM_ORACLE_HPP
#define POENUM_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "poenum/elim.hpp"
#include "poenum/graph.hpp"

namespace poe {

// Canonical ground truth: sorted, duplicate-free solution lists produced by
// exhaustive filtering. Desk-scale only; guarded at n <= 16.
struct OracleResult {
    std::vector<std::vector<int>> solutions;  // each sorted; whole list sorted
    std::uint64_t count = 0;
};

OracleResult brute_matchings(const MultiGraph& g);
OracleResult brute_connected(const MultiGraph& g, std::optional<VertexId> root);
OracleResult brute_spanning_trees(const MultiGraph& g);
// Permutation filter; a fresh structure instance is built per permutation.
OracleResult brute_elim_orderings(
    const std::function<std::unique_ptr<ElimStructure>()>& makeStructure, int groundSize);

// Spanning-tree count by Laplacian cofactor, exact integer arithmetic.
// Parallel edges accumulate; disconnected graphs count zero.
std::uint64_t matrix_tree_count(const MultiGraph& g);

}  // namespace poe

#endif
