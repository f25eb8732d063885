#include "tsw/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace tsw {

DistanceTable all_pairs_distances(const Graph& graph) {
    const int n = graph.n;
    if (n > std::numeric_limits<std::uint16_t>::max())
        throw Error("graph too large for distance table");
    // Flat adjacency keeps the n search passes cache-friendly.
    std::vector<int> xadj(n + 1, 0), adjn(2 * graph.edges.size());
    for (int v = 0; v < n; ++v) xadj[v + 1] = xadj[v] + (int)graph.adj[v].size();
    for (int v = 0; v < n; ++v)
        std::copy(graph.adj[v].begin(), graph.adj[v].end(), adjn.begin() + xadj[v]);
    const bool tree = (int)graph.edges.size() == n - 1;

    DistanceTable table;
    table.n = n;
    table.dist.assign((std::size_t)n * n, std::numeric_limits<std::uint16_t>::max());

    std::atomic<bool> connected{true};
    auto fill_rows = [&](int from, int to) {
        std::vector<std::pair<int, int>> stack(tree ? n : 0);
        std::vector<int> queue(tree ? 0 : n);
        for (int src = from; src < to; ++src) {
            auto* row = &table.dist[(std::size_t)src * n];
            if (tree) {
                // no visited checks needed: walk away from the parent
                int top = 0, seen = 1;
                stack[top++] = {src, -1};
                row[src] = 0;
                while (top > 0) {
                    auto [u, parent] = stack[--top];
                    std::uint16_t next = (std::uint16_t)(row[u] + 1);
                    for (int k = xadj[u]; k < xadj[u + 1]; ++k) {
                        int w = adjn[k];
                        if (w == parent) continue;
                        row[w] = next;
                        stack[top++] = {w, u};
                        ++seen;
                    }
                }
                if (seen != n) connected = false;
            } else {
                int head = 0, tail = 0;
                queue[tail++] = src;
                row[src] = 0;
                while (head < tail) {
                    int u = queue[head++];
                    std::uint16_t next = (std::uint16_t)(row[u] + 1);
                    for (int k = xadj[u]; k < xadj[u + 1]; ++k) {
                        int w = adjn[k];
                        if (row[w] == std::numeric_limits<std::uint16_t>::max()) {
                            row[w] = next;
                            queue[tail++] = w;
                        }
                    }
                }
                if (tail != n) connected = false;
            }
        }
    };

    unsigned workers = std::thread::hardware_concurrency();
    if (n < 2048 || workers < 2) {
        fill_rows(0, n);
    } else {
        workers = std::min(workers, 8u);
        std::vector<std::thread> pool;
        int chunk = (n + (int)workers - 1) / (int)workers;
        for (unsigned t = 0; t < workers; ++t) {
            int from = (int)t * chunk;
            int to = std::min(n, from + chunk);
            if (from < to) pool.emplace_back(fill_rows, from, to);
        }
        for (auto& th : pool) th.join();
    }
    if (!connected) throw DisconnectedGraph();
    return table;
}

long long total_displacement(const DistanceTable& d, const TokenPlacement& placement) {
    long long sum = 0;
    for (int v = 0; v < d.n; ++v) sum += d(v, placement[v]);
    return sum;
}

long long total_displacement(const Graph& graph, const TokenPlacement& placement) {
    return total_displacement(all_pairs_distances(graph), placement);
}

long long lower_bound_from(const DistanceTable& d, const TokenPlacement& placement) {
    long long L = total_displacement(d, placement);
    long long bound = (L + 1) / 2;
    bool even_perm = is_even_permutation(placement);
    if ((bound % 2 == 0) != even_perm) ++bound;
    return bound;
}

long long lower_bound(const Graph& graph, const TokenPlacement& placement) {
    return lower_bound_from(all_pairs_distances(graph), placement);
}

namespace {

bool is_canonical_path(const Graph& g) {
    if ((int)g.edges.size() != g.n - 1) return false;
    for (int i = 0; i + 1 < g.n; ++i)
        if (!g.has_edge(i, i + 1)) return false;
    return true;
}

bool is_complete(const Graph& g) {
    return (long long)g.edges.size() == (long long)g.n * (g.n - 1) / 2;
}

}  // namespace

long long path_optimal(const Graph& graph, const TokenPlacement& placement) {
    if (!is_canonical_path(graph)) throw NotAPath();
    return inversion_count(placement);
}

long long complete_optimal(const Graph& graph, const TokenPlacement& placement) {
    if (!is_complete(graph)) throw NotComplete();
    return (long long)graph.n - cycle_count(placement);
}

long long inversion_count(const TokenPlacement& p) {
    // Fenwick tree over token values.
    const int n = (int)p.size();
    std::vector<int> tree(n + 1, 0);
    auto add = [&](int i) {
        for (++i; i <= n; i += i & -i) ++tree[i];
    };
    auto prefix = [&](int i) {  // count of values <= i already seen
        int s = 0;
        for (++i; i > 0; i -= i & -i) s += tree[i];
        return s;
    };
    long long inv = 0;
    for (int i = n - 1; i >= 0; --i) {
        inv += prefix(p[i] - 1);
        add(p[i]);
    }
    return inv;
}

int cycle_count(const TokenPlacement& p) {
    std::vector<char> seen(p.size(), 0);
    int cycles = 0;
    for (int i = 0; i < (int)p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
    }
    return cycles;
}

bool is_even_permutation(const TokenPlacement& p) {
    // sign = (-1)^(n - #cycles)
    return (((int)p.size() - cycle_count(p)) % 2) == 0;
}

}  // namespace tsw
