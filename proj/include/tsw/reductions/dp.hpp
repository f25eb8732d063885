#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsw/errors.hpp"

namespace tsw {

// Layered directed acyclic graph with a source/sink bijection. Arcs may skip
// layers, but all incoming arcs of a vertex leave from one single layer.
struct LayeredDag {
    int n = 0;
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_of;
    std::vector<std::vector<int>> out;  // sorted
    std::vector<std::vector<int>> in;   // sorted
    std::vector<int> phi;               // phi[v] for sources, -1 otherwise
    std::vector<std::string> label;     // optional, for diagnostics

    std::vector<int> sources() const;  // ascending
    std::vector<int> sinks() const;

    static LayeredDag build(int n, const std::vector<std::vector<int>>& layers,
                            const std::vector<std::pair<int, int>>& arcs,
                            const std::vector<std::pair<int, int>>& phi_pairs);
};

// n(v): vertices on a shortest path v -> phi(v); throws if unreachable.
std::vector<int> source_path_counts(const LayeredDag& dag);

// Empty list iff all four DP input properties hold (layer-consistent arcs,
// single in-layer per vertex, <= 10 per layer, reachability and the packing
// identity |V| = sum n(v)).
std::vector<std::string> validate_dag(const LayeredDag& dag);

using DisjointPaths = std::vector<std::vector<int>>;

// Backtracking oracle: vertex-disjoint shortest paths v -> phi(v) covering
// every vertex, or nothing. Deterministic: sources ascending, extensions by
// ascending vertex id.
std::optional<DisjointPaths> dp_solve(const LayeredDag& dag,
                                      std::size_t node_budget = 50'000'000);

std::string emit_dp(const LayeredDag& dag);
LayeredDag parse_dp(const std::string& text);

}  // namespace tsw
