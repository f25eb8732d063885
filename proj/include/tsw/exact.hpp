#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tsw/core.hpp"

namespace tsw {

struct SearchLimits {
    std::size_t node_budget = 50'000'000;  // visited configurations
};

// Injective encodings of a placement for visited-set membership.
std::uint64_t config_key_small(const TokenPlacement& p);  // n <= 16, nibble-packed
std::string config_key_bytes(const TokenPlacement& p);

// Breadth-first search over the configuration graph. Returns a shortest
// sorting sequence; its length is the exact optimum.
SolveResult solve_bfs(const Graph& graph, const TokenPlacement& placement,
                      const SearchLimits& limits = {});

// BFS explored only to depth k. Empty result means no solution of length <= k.
std::optional<SolveResult> solve_depth_bounded(const Graph& graph, const TokenPlacement& placement,
                                               long long k, const SearchLimits& limits = {});

// Depth-first search to depth k that only branches on swaps touching a
// misplaced token, with the displacement lower bound as pruning.
std::optional<SolveResult> solve_misplaced_pruned(const Graph& graph,
                                                  const TokenPlacement& placement, long long k,
                                                  const SearchLimits& limits = {});

// Iterative deepening from the parity-corrected lower bound, stepping by 2.
SolveResult solve_exact_id(const Graph& graph, const TokenPlacement& placement,
                           const SearchLimits& limits = {});
SolveResult solve_exact_pruned_id(const Graph& graph, const TokenPlacement& placement,
                                  const SearchLimits& limits = {});

}  // namespace tsw
