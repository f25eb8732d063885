#pragma once

#include "tsw/core.hpp"
#include "tsw/reductions/dp.hpp"

namespace tsw {

// Colored token swapping instance carrying the layer structure it was built
// from. Tokens are named by start vertex (placement is the identity).
struct StructuredColoredInstance {
    ColoredInstance inst;
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_of;
    std::vector<int> sources, sinks;  // ascending
    std::vector<int> phi;             // by source vertex, -1 elsewhere
    long long threshold = 0;          // swap budget of the decision question
};

// Underlying undirected graph; one uniquely-colored token per source with its
// sink as target, a filler per remaining vertex colored by its in-layer.
// Threshold |V| - k.
StructuredColoredInstance dp_to_colored(const LayeredDag& dag);

// Empty list iff the five structured-instance properties hold.
std::vector<std::string> check_structured(const StructuredColoredInstance& inst);

// Swap each path's token front to back; |V| - k swaps, every filler moves once.
SwapSequence colored_solution_from_paths(const StructuredColoredInstance& inst,
                                         const DisjointPaths& paths);

}  // namespace tsw
