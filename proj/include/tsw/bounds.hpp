#pragma once

#include <cstdint>
#include <vector>

#include "tsw/core.hpp"

namespace tsw {

// All-pairs hop distances, one BFS per vertex. Entries are uint16 so a
// 10,000-vertex table stays under 200 MB.
struct DistanceTable {
    int n = 0;
    std::vector<std::uint16_t> dist;  // row-major n*n

    std::uint16_t operator()(int u, int v) const { return dist[(std::size_t)u * n + v]; }
};

DistanceTable all_pairs_distances(const Graph& graph);

long long total_displacement(const Graph& graph, const TokenPlacement& placement);
long long total_displacement(const DistanceTable& d, const TokenPlacement& placement);

// L/2 rounded up, then bumped by one when its parity disagrees with the
// permutation sign (every swap is a transposition, so any solution length
// has the sign parity of the placement).
long long lower_bound(const Graph& graph, const TokenPlacement& placement);
long long lower_bound_from(const DistanceTable& d, const TokenPlacement& placement);

long long path_optimal(const Graph& graph, const TokenPlacement& placement);
long long complete_optimal(const Graph& graph, const TokenPlacement& placement);

// Permutation helpers shared across modules.
long long inversion_count(const TokenPlacement& p);
int cycle_count(const TokenPlacement& p);  // fixed points count as cycles
bool is_even_permutation(const TokenPlacement& p);

}  // namespace tsw
