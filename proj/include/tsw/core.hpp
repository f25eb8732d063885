#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsw/errors.hpp"

namespace tsw {

// Undirected simple connected graph. Vertices are 0-based internally;
// the 1-based convention of the file formats ends at the parser/emitter.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // u < v, sorted lexicographically
    std::vector<std::vector<int>> adj;        // sorted neighbor lists

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> edges_);

    bool has_edge(int u, int v) const;
    bool is_connected() const;

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int n);      // center 0, leaves 1..n-1
    static Graph complete(int n);
};

// placement[v] = token currently sitting on vertex v. Solved state is
// placement[v] == v everywhere.
using TokenPlacement = std::vector<int>;

using Swap = std::pair<int, int>;
using SwapSequence = std::vector<Swap>;

TokenPlacement identity_placement(int n);
bool is_identity(const TokenPlacement& p);
bool is_permutation(const TokenPlacement& p);

enum class SwapKind : std::uint8_t { Happy, Unhappy };

struct TraceEntry {
    SwapKind kind;
    int chain_id;  // -1 for unhappy swaps
};

struct SolveResult {
    SwapSequence sequence;
    std::size_t length = 0;
    std::optional<std::vector<TraceEntry>> trace;
};

struct ColoredInstance {
    Graph graph;
    TokenPlacement placement;
    std::vector<int> token_colors;   // indexed by token id
    std::vector<int> vertex_colors;  // indexed by vertex

    void validate_colors() const;  // throws ColorMultisetMismatch
};

TokenPlacement apply_swaps(const Graph& graph, const TokenPlacement& start,
                           const SwapSequence& seq);
bool verify_solution(const Graph& graph, const TokenPlacement& start, const SwapSequence& seq);
bool verify_colored_solution(const ColoredInstance& inst, const SwapSequence& seq);

}  // namespace tsw
