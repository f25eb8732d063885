#pragma once

#include "tsw/reductions/colored_reduction.hpp"
#include "tsw/reductions/network.hpp"

namespace tsw {

// Plain token swapping instance built from two copies of the structured
// instance plus one permutation network per non-sink layer class. Tokens are
// named by target vertex, so the goal placement is the identity.
struct UncoloredReduction {
    Graph graph;
    TokenPlacement placement;
    long long threshold = 0;  // 2k plus the networks' swap counts

    struct AttachedNetwork {
        int layer;                    // layer index in the structured instance
        PermutationNetwork net;
        std::vector<int> vertex_map;  // network vertex id -> final graph id
        std::vector<int> class_vertices;  // the layer's non-sink vertices, ascending
    };
    int copy_size = 0;  // copy B ids are copy A ids + copy_size
    std::vector<AttachedNetwork> networks;
};

UncoloredReduction structured_to_uncolored(const StructuredColoredInstance& inst);

// End-to-end witness: run the path solution on both copies, then route every
// filler through its network. Length is exactly the threshold.
SwapSequence compose_uncolored_solution(const UncoloredReduction& red, const DisjointPaths& paths);

}  // namespace tsw
