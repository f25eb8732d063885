#include "tsw/core.hpp"

#include <algorithm>
#include <queue>

namespace tsw {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw Error("self-loop on vertex " + std::to_string(u + 1));
        if (u < 0 || v >= n) throw Error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("duplicate edge");
    adj.assign(n, {});
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n;
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n > 2) e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph Graph::star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

TokenPlacement identity_placement(int n) {
    TokenPlacement p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool is_identity(const TokenPlacement& p) {
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

bool is_permutation(const TokenPlacement& p) {
    std::vector<char> seen(p.size(), 0);
    for (int t : p) {
        if (t < 0 || t >= (int)p.size() || seen[t]) return false;
        seen[t] = 1;
    }
    return true;
}

void ColoredInstance::validate_colors() const {
    std::vector<int> tc = token_colors, vc = vertex_colors;
    std::sort(tc.begin(), tc.end());
    std::sort(vc.begin(), vc.end());
    if (tc != vc) throw ColorMultisetMismatch();
}

TokenPlacement apply_swaps(const Graph& graph, const TokenPlacement& start,
                           const SwapSequence& seq) {
    TokenPlacement p = start;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto [u, v] = seq[i];
        if (!graph.has_edge(u, v)) throw NonEdgeSwap(i, u, v);
        std::swap(p[u], p[v]);
    }
    return p;
}

bool verify_solution(const Graph& graph, const TokenPlacement& start, const SwapSequence& seq) {
    return is_identity(apply_swaps(graph, start, seq));
}

bool verify_colored_solution(const ColoredInstance& inst, const SwapSequence& seq) {
    inst.validate_colors();
    TokenPlacement p = apply_swaps(inst.graph, inst.placement, seq);
    for (int v = 0; v < inst.graph.n; ++v)
        if (inst.token_colors[p[v]] != inst.vertex_colors[v]) return false;
    return true;
}

}  // namespace tsw
