#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsw {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

struct DisconnectedGraph : Error {
    DisconnectedGraph() : Error("graph is not connected") {}
};

struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string& what) : Error("invalid permutation: " + what) {}
};

struct ColorMultisetMismatch : Error {
    ColorMultisetMismatch() : Error("token and vertex color multisets differ") {}
};

struct NonEdgeSwap : Error {
    std::size_t index;
    NonEdgeSwap(std::size_t index_, int u, int v)
        : Error("swap " + std::to_string(index_) + " uses non-edge (" + std::to_string(u + 1) +
                "," + std::to_string(v + 1) + ")"),
          index(index_) {}
};

struct BudgetExceeded : Error {
    std::size_t nodes;
    explicit BudgetExceeded(std::size_t nodes_)
        : Error("search node budget exceeded after " + std::to_string(nodes_) + " configurations"),
          nodes(nodes_) {}
};

struct NotAPath : Error {
    NotAPath() : Error("graph is not the canonical path 1-2-...-n") {}
};

struct NotComplete : Error {
    NotComplete() : Error("graph is not the complete graph") {}
};

struct NoStepFound : Error {
    NoStepFound() : Error("no happy chain or unhappy swap found (implementation bug)") {}
};

struct ProgressStall : Error {
    ProgressStall() : Error("swap count reached 2L without finishing (implementation bug)") {}
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& name) : Error("unknown instance family: " + name) {}
};

struct UnsupportedClauseArity : Error {
    explicit UnsupportedClauseArity(std::size_t clause)
        : Error("clause " + std::to_string(clause + 1) +
                " does not have exactly 3 literals (run the normalizer first)") {}
};

struct RepeatedVariableInClause : Error {
    explicit RepeatedVariableInClause(int line)
        : Error("clause at line " + std::to_string(line) + " repeats a variable") {}
};

struct OracleBudgetExceeded : Error {
    OracleBudgetExceeded() : Error("oracle search budget exceeded") {}
};

struct OddPermutation : Error {
    OddPermutation() : Error("target assignment is an odd permutation") {}
};

struct LayerTooLarge : Error {
    explicit LayerTooLarge(std::size_t size)
        : Error("layer needs a permutation network with " + std::to_string(size) +
                " inputs (limit 20)") {}
};

}  // namespace tsw
