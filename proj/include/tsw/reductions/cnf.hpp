#pragma once

#include <string>
#include <vector>

#include "tsw/errors.hpp"

namespace tsw {

// Literals are nonzero signed 1-based variable indices.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // each clause has 1..3 distinct variables
};

CnfFormula parse_dimacs(const std::string& text);
std::string emit_dimacs(const CnfFormula& f);

// Expands 1- and 2-literal clauses with fresh variables so every clause has
// exactly 3 distinct variables, preserving satisfiability.
CnfFormula normalize_to_3sat(const CnfFormula& f);

// Truth-table check, usable up to ~25 variables.
bool satisfiable_brute(const CnfFormula& f);
bool evaluates(const CnfFormula& f, std::uint64_t assignment_bits);

}  // namespace tsw
