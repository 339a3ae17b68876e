#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uor/digraph.hpp"

namespace uor {

enum class FindStatus { Found, None, BudgetExhausted };

struct FindResult {
  FindStatus status = FindStatus::None;
  std::optional<OutRegularWitness> witness;
  std::uint64_t nodes_expanded = 0;
};

/// Exact branch-and-prune search for an undominated out-regular subgraph.
///
/// Vertices are decided from the highest id down, "out" before "in", so the
/// first witness reached is the least one when subsets are compared as
/// bitmasks (bit v has place value 2^v). Pruning: per-side intervals on the
/// common out-weight, domination bounds for decided-out vertices, and — only
/// on strongly connected graphs — exclusion of vertices whose out-weight into
/// S can no longer become positive.
///
/// `node_budget` bounds explicit branch decisions; exceeding it yields
/// BudgetExhausted, which is distinct from a completed "none exists".
FindResult find_undominated_out_regular(const WeightedBipartiteDigraph& graph,
                                        std::uint64_t node_budget);

/// No-pruning oracle: checks every part-respecting subset in ascending
/// bitmask order. Intended for graphs with at most ~25 vertices.
std::vector<OutRegularWitness> enumerate_witnesses_naive(const WeightedBipartiteDigraph& graph);

}  // namespace uor
