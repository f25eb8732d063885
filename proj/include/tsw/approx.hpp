#pragma once

#include <variant>
#include <vector>

#include "tsw/bounds.hpp"
#include "tsw/core.hpp"

namespace tsw {

// Directed graph of profitable moves: arc (v,w) whenever the token on v gets
// strictly closer to its target by crossing edge {v,w}. A vertex has
// out-degree 0 exactly when its token is home.
struct DesireDigraph {
    std::vector<std::vector<int>> out;  // sorted out-neighbors
};

DesireDigraph build_desire_digraph(const Graph& graph, const TokenPlacement& placement,
                                   const DistanceTable& distances);

// A directed cycle w_1 -> w_2 -> ... -> w_c -> w_1 in the desire digraph,
// stored in walk order.
struct HappyChain {
    std::vector<int> cycle;
};

// Edge (u,s): the token on s is home, the token on u gets closer by moving
// onto s.
struct UnhappySwap {
    int u;
    int s;
};

using Step = std::variant<HappyChain, UnhappySwap>;

// Walks the desire digraph from the lowest-indexed vertex holding a misplaced
// token, following the lowest-indexed out-neighbor at each step.
Step find_step(const Graph& graph, const TokenPlacement& placement, const DesireDigraph& F);

// Repeats find_step until identity. Trace labels every swap happy/unhappy.
SolveResult solve_happy(const Graph& graph, const TokenPlacement& placement);

// Resolves each permutation cycle by walking its lowest token to each
// predecessor position with the 2d-1 pairwise exchange.
SolveResult solve_cycle_decomposition(const Graph& graph, const TokenPlacement& placement,
                                      const DistanceTable& distances);
SolveResult solve_cycle_decomposition(const Graph& graph, const TokenPlacement& placement);

}  // namespace tsw
