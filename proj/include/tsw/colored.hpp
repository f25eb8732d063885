#pragma once

#include <functional>

#include "tsw/bounds.hpp"
#include "tsw/core.hpp"

namespace tsw {

// Color-respecting bijection token -> vertex of minimum total distance.
struct TargetAssignment {
    std::vector<int> target;  // target[token] = vertex
    long long cost = 0;       // L*
};

// Per color class, an exact min-cost perfect matching between same-color
// tokens and vertices using graph distances. Ties resolve to the
// lexicographically smallest target array.
TargetAssignment optimal_assignment(const ColoredInstance& inst, const DistanceTable& distances);

using UncoloredSolver = std::function<SolveResult(const Graph&, const TokenPlacement&)>;

// Renames each token by its assigned target vertex and runs an uncolored
// solver on the relabeled placement.
SolveResult solve_colored(const ColoredInstance& inst, const UncoloredSolver& solver);

// ceil(L*/2), a valid lower bound for the colored optimum.
long long assignment_floor(const ColoredInstance& inst);

// Exposed for the assignment tie-break tests: min-cost perfect matching on an
// explicit square cost matrix, lexicographically smallest row->column map.
std::vector<int> min_cost_matching_lex(const std::vector<std::vector<long long>>& cost);

}  // namespace tsw
