#pragma once

#include <cstdint>

#include "tsw/reductions/cnf.hpp"
#include "tsw/reductions/dp.hpp"

namespace tsw {

// 3SAT -> layered disjoint paths. Every variable contributes twin truth
// tracks framed by two 6-vertex crossing gadgets, every clause a 3-layer
// gadget of up to 10 vertices per layer; supplementary paths fill the unused
// track between consecutive occurrences. |V| = 30m + 12n.
struct SatDpReduction {
    LayeredDag dag;

    // Vertex bookkeeping, addressed by variable (0-based) and occurrence.
    struct VariableIds {
        int x_src, s1_src, aT, aF, headT, headF;
        int enT, enF, b1, b2, x_snk, s_snk;
        std::vector<int> occ_clause;  // clause index of each occurrence, in order
        std::vector<int> occ_slot;    // slot 0..2 within that clause
    };
    struct SlotIds {
        int var;   // 0-based variable
        bool positive;
        int T[3], F[3], S[3];  // per gadget layer
    };
    struct ClauseIds {
        int c1, zmid, c3;
        SlotIds slot[3];
    };
    std::vector<VariableIds> vars;
    std::vector<ClauseIds> clauses;
};

SatDpReduction sat_to_dp(const CnfFormula& f);

// The paths realizing a satisfying assignment, per the construction.
// assignment bit i-1 = value of variable i.
DisjointPaths paths_for_assignment(const SatDpReduction& red, const CnfFormula& f,
                                   std::uint64_t assignment_bits);

}  // namespace tsw
