#include "tsw/reductions/cnf.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace tsw {

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream ss(text);
    std::string raw;
    int lineno = 0;
    CnfFormula f;
    long announced_clauses = -1;
    bool seen_header = false;
    std::vector<int> current;

    auto close_clause = [&](int line) {
        if (current.empty()) throw ParseError(line, "empty clause");
        if (current.size() > 3) throw ParseError(line, "clause has more than 3 literals");
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = a + 1; b < current.size(); ++b)
                if (std::abs(current[a]) == std::abs(current[b]))
                    throw RepeatedVariableInClause(line);
        f.clauses.push_back(current);
        current.clear();
    };

    while (std::getline(ss, raw)) {
        ++lineno;
        std::istringstream in(raw);
        std::string tok;
        if (!(in >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            std::string fmt;
            long nv, nc;
            if (!(in >> fmt >> nv >> nc) || fmt != "cnf")
                throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
            f.num_vars = (int)nv;
            announced_clauses = nc;
            seen_header = true;
            continue;
        }
        if (!seen_header) throw ParseError(lineno, "clause before 'p cnf' header");
        do {
            long lit;
            try {
                lit = std::stol(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected literal, got '" + tok + "'");
            }
            if (lit == 0) {
                close_clause(lineno);
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw ParseError(lineno, "variable out of range");
                current.push_back((int)lit);
            }
        } while (in >> tok);
    }
    if (!seen_header) throw ParseError(lineno, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(lineno, "clause not terminated with 0");
    if (announced_clauses >= 0 && announced_clauses != (long)f.clauses.size())
        throw ParseError(lineno, "clause count disagrees with header");
    return f;
}

std::string emit_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula normalize_to_3sat(const CnfFormula& f) {
    CnfFormula out;
    out.num_vars = f.num_vars;
    for (const auto& clause : f.clauses) {
        if (clause.size() == 3) {
            out.clauses.push_back(clause);
        } else if (clause.size() == 2) {
            int p = ++out.num_vars;
            out.clauses.push_back({clause[0], clause[1], p});
            out.clauses.push_back({clause[0], clause[1], -p});
        } else {  // single literal
            int p = ++out.num_vars;
            int q = ++out.num_vars;
            out.clauses.push_back({clause[0], p, q});
            out.clauses.push_back({clause[0], p, -q});
            out.clauses.push_back({clause[0], -p, q});
            out.clauses.push_back({clause[0], -p, -q});
        }
    }
    return out;
}

bool evaluates(const CnfFormula& f, std::uint64_t bits) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) {
            bool value = (bits >> (std::abs(lit) - 1)) & 1;
            if (lit < 0) value = !value;
            if (value) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool satisfiable_brute(const CnfFormula& f) {
    if (f.num_vars > 25) throw OracleBudgetExceeded();
    for (std::uint64_t bits = 0; bits < (1ull << f.num_vars); ++bits)
        if (evaluates(f, bits)) return true;
    return false;
}

}  // namespace tsw
