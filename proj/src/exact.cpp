#include "tsw/exact.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "tsw/bounds.hpp"

namespace tsw {

std::uint64_t config_key_small(const TokenPlacement& p) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < p.size(); ++i) key |= (std::uint64_t)p[i] << (4 * i);
    return key;
}

std::string config_key_bytes(const TokenPlacement& p) {
    std::string key(p.size() * 2, '\0');
    for (std::size_t i = 0; i < p.size(); ++i) {
        key[2 * i] = (char)(p[i] & 0xff);
        key[2 * i + 1] = (char)((p[i] >> 8) & 0xff);
    }
    return key;
}

namespace {

struct NibbleCodec {
    using Key = std::uint64_t;
    int n;
    Key encode(const TokenPlacement& p) const { return config_key_small(p); }
    TokenPlacement decode(Key key) const {
        TokenPlacement p(n);
        for (int i = 0; i < n; ++i) p[i] = (int)((key >> (4 * i)) & 0xf);
        return p;
    }
};

struct BytesCodec {
    using Key = std::string;
    int n;
    Key encode(const TokenPlacement& p) const { return config_key_bytes(p); }
    TokenPlacement decode(const Key& key) const {
        TokenPlacement p(n);
        for (int i = 0; i < n; ++i)
            p[i] = (unsigned char)key[2 * i] | ((unsigned char)key[2 * i + 1] << 8);
        return p;
    }
};

struct ParentLink {
    std::uint32_t swap_index;  // into graph.edges; ~0u marks the root
};

template <class Codec>
std::optional<SolveResult> bfs_search(const Codec& codec, const Graph& graph,
                                      const TokenPlacement& start, long long max_depth,
                                      const SearchLimits& limits) {
    using Key = typename Codec::Key;
    const Key root = codec.encode(start);
    const Key goal = codec.encode(identity_placement(graph.n));

    std::unordered_map<Key, std::pair<Key, ParentLink>> visited;
    visited.reserve(1 << 12);
    visited.emplace(root, std::make_pair(root, ParentLink{~0u}));

    auto reconstruct = [&](Key key) {
        SwapSequence seq;
        while (true) {
            auto& [parent, link] = visited.at(key);
            if (link.swap_index == ~0u) break;
            seq.push_back(graph.edges[link.swap_index]);
            key = parent;
        }
        std::reverse(seq.begin(), seq.end());
        SolveResult res;
        res.length = seq.size();
        res.sequence = std::move(seq);
        return res;
    };

    if (root == goal) return reconstruct(root);

    std::vector<Key> frontier{root}, next;
    for (long long depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        next.clear();
        for (const Key& key : frontier) {
            TokenPlacement p = codec.decode(key);
            for (std::uint32_t ei = 0; ei < graph.edges.size(); ++ei) {
                auto [u, v] = graph.edges[ei];
                std::swap(p[u], p[v]);
                Key nk = codec.encode(p);
                std::swap(p[u], p[v]);
                if (visited.emplace(nk, std::make_pair(key, ParentLink{ei})).second) {
                    if (visited.size() > limits.node_budget) throw BudgetExceeded(visited.size());
                    if (nk == goal) return reconstruct(nk);
                    next.push_back(nk);
                }
            }
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

std::optional<SolveResult> run_bfs(const Graph& graph, const TokenPlacement& placement,
                                   long long max_depth, const SearchLimits& limits) {
    if (!is_permutation(placement)) throw InvalidPermutation("start placement");
    if (graph.n <= 16) return bfs_search(NibbleCodec{graph.n}, graph, placement, max_depth, limits);
    return bfs_search(BytesCodec{graph.n}, graph, placement, max_depth, limits);
}

}  // namespace

SolveResult solve_bfs(const Graph& graph, const TokenPlacement& placement,
                      const SearchLimits& limits) {
    auto res = run_bfs(graph, placement, std::numeric_limits<long long>::max(), limits);
    if (!res) throw Error("BFS exhausted the configuration graph without reaching identity");
    return *res;
}

std::optional<SolveResult> solve_depth_bounded(const Graph& graph, const TokenPlacement& placement,
                                               long long k, const SearchLimits& limits) {
    if (k < 0) throw Error("swap budget must be nonnegative");
    return run_bfs(graph, placement, k, limits);
}

namespace {

struct PrunedDfs {
    const Graph& graph;
    const DistanceTable& dist;
    const SearchLimits& limits;
    TokenPlacement tok;
    long long L;
    bool even;  // parity of the current placement
    std::size_t nodes = 0;
    SwapSequence path;

    bool feasible_within(long long remaining) const {
        long long bound = (L + 1) / 2;
        if ((bound % 2 == 0) != even) ++bound;
        return bound <= remaining;
    }

    bool dfs(long long remaining, int last_edge) {
        if (L == 0) return true;
        if (!feasible_within(remaining)) return false;
        if (++nodes > limits.node_budget) throw BudgetExceeded(nodes);
        for (int ei = 0; ei < (int)graph.edges.size(); ++ei) {
            if (ei == last_edge) continue;  // undoing the previous swap never helps
            auto [u, v] = graph.edges[ei];
            if (tok[u] == u && tok[v] == v) continue;
            long long dL = (long long)dist(v, tok[u]) - dist(u, tok[u]) +
                           (long long)dist(u, tok[v]) - dist(v, tok[v]);
            std::swap(tok[u], tok[v]);
            L += dL;
            even = !even;
            path.push_back(graph.edges[ei]);
            if (dfs(remaining - 1, ei)) return true;
            path.pop_back();
            even = !even;
            L -= dL;
            std::swap(tok[u], tok[v]);
        }
        return false;
    }
};

}  // namespace

std::optional<SolveResult> solve_misplaced_pruned(const Graph& graph,
                                                  const TokenPlacement& placement, long long k,
                                                  const SearchLimits& limits) {
    if (k < 0) throw Error("swap budget must be nonnegative");
    if (!is_permutation(placement)) throw InvalidPermutation("start placement");
    DistanceTable dist = all_pairs_distances(graph);
    PrunedDfs dfs{graph, dist, limits, placement, total_displacement(dist, placement),
                  is_even_permutation(placement), 0, {}};
    if (!dfs.dfs(k, -1)) return std::nullopt;
    SolveResult res;
    res.sequence = std::move(dfs.path);
    res.length = res.sequence.size();
    return res;
}

namespace {

template <class Solver>
SolveResult iterative_deepening(const Graph& graph, const TokenPlacement& placement,
                                Solver&& solve) {
    long long k = lower_bound(graph, placement);
    // Any instance is solvable within 2L swaps, so the loop terminates.
    long long cap = 2 * total_displacement(graph, placement) + 2;
    for (; k <= cap; k += 2)
        if (auto res = solve(k)) return *res;
    throw Error("iterative deepening exceeded the 2L cap (implementation bug)");
}

}  // namespace

SolveResult solve_exact_id(const Graph& graph, const TokenPlacement& placement,
                           const SearchLimits& limits) {
    return iterative_deepening(graph, placement, [&](long long k) {
        return solve_depth_bounded(graph, placement, k, limits);
    });
}

SolveResult solve_exact_pruned_id(const Graph& graph, const TokenPlacement& placement,
                                  const SearchLimits& limits) {
    return iterative_deepening(graph, placement, [&](long long k) {
        return solve_misplaced_pruned(graph, placement, k, limits);
    });
}

}  // namespace tsw
