#include "tsw/colored.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace tsw {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Assignment problem with potentials (successive shortest augmenting paths).
// Returns match_row[i] = j; fills dual potentials with u[i] + v[j] <= cost[i][j],
// tight on matched pairs.
std::vector<int> hungarian(const std::vector<std::vector<long long>>& cost,
                           std::vector<long long>& u, std::vector<long long>& v) {
    const int n = (int)cost.size();
    u.assign(n + 1, 0);
    v.assign(n + 1, 0);
    std::vector<int> p(n + 1, n);  // p[j] = row matched to column j
    for (int i = 0; i < n; ++i) {
        std::vector<long long> minv(n + 1, kInf);
        std::vector<int> way(n + 1, n);
        std::vector<char> used(n + 1, 0);
        int j0 = n;
        p[n] = i;
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = n;
            long long delta = kInf;
            for (int j = 0; j < n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0][j] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != n);
        while (j0 != n) {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        }
    }
    std::vector<int> match_row(n, -1);
    for (int j = 0; j < n; ++j)
        if (p[j] != n) match_row[p[j]] = j;
    return match_row;
}

// Strongly connected components (iterative Tarjan) of the tight-edge digraph.
struct Scc {
    const std::vector<std::vector<int>>& g;
    std::vector<int> comp, low, num, stk;
    std::vector<char> on;
    int counter = 0, comps = 0;

    explicit Scc(const std::vector<std::vector<int>>& g_)
        : g(g_), comp(g.size(), -1), low(g.size()), num(g.size(), -1), on(g.size(), 0) {
        for (int s = 0; s < (int)g.size(); ++s)
            if (num[s] < 0) run(s);
    }

    void run(int s) {
        std::vector<std::pair<int, std::size_t>> call{{s, 0}};
        while (!call.empty()) {
            auto& [v, idx] = call.back();
            if (idx == 0) {
                num[v] = low[v] = counter++;
                stk.push_back(v);
                on[v] = 1;
            }
            if (idx < g[v].size()) {
                int w = g[v][idx++];
                if (num[w] < 0)
                    call.push_back({w, 0});
                else if (on[w])
                    low[v] = std::min(low[v], num[w]);
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on[w] = 0;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                int done = v;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
        }
    }
};

}  // namespace

std::vector<int> min_cost_matching_lex(const std::vector<std::vector<long long>>& cost) {
    const int n = (int)cost.size();
    std::vector<long long> u, v;
    std::vector<int> match = hungarian(cost, u, v);

    // An edge sits in some optimal matching iff it is tight and either matched
    // or inside a strongly connected component of the digraph that orients
    // matched tight edges column->row and the rest row->column.
    std::vector<char> row_done(n, 0), col_done(n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> g(2 * n);
        for (int r = 0; r < n; ++r) {
            if (row_done[r]) continue;
            for (int c = 0; c < n; ++c) {
                if (col_done[c] || cost[r][c] != u[r] + v[c]) continue;
                if (match[r] == c)
                    g[n + c].push_back(r);
                else
                    g[r].push_back(n + c);
            }
        }
        Scc scc(g);
        int chosen = -1;
        for (int c = 0; c < n && chosen < 0; ++c) {
            if (col_done[c] || cost[i][c] != u[i] + v[c]) continue;
            if (match[i] == c || scc.comp[i] == scc.comp[n + c]) chosen = c;
        }
        if (chosen < 0) throw Error("matching refinement lost feasibility (implementation bug)");
        if (match[i] != chosen) {
            // Rotate the matching along a directed path from the chosen column
            // back to row i; every column->row arc on it is a matched pair.
            std::vector<int> prev(2 * n, -1);
            std::queue<int> q;
            q.push(n + chosen);
            prev[n + chosen] = n + chosen;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                if (x == i) break;
                for (int y : g[x])
                    if (prev[y] < 0) {
                        prev[y] = x;
                        q.push(y);
                    }
            }
            if (prev[i] < 0) throw Error("matching rotation path missing (implementation bug)");
            // Each row on the path hands its column to the previous row; i
            // takes the chosen column.
            for (int x = i; x != n + chosen; x = prev[x])
                if (x >= n && prev[x] < n) match[prev[x]] = x - n;
            match[i] = chosen;
        }
        row_done[i] = 1;
        col_done[chosen] = 1;
    }
    return match;
}

TargetAssignment optimal_assignment(const ColoredInstance& inst, const DistanceTable& distances) {
    inst.validate_colors();
    const int n = inst.graph.n;
    std::vector<int> pos(n);  // pos[token] = vertex it starts on
    for (int v = 0; v < n; ++v) pos[inst.placement[v]] = v;

    std::map<int, std::pair<std::vector<int>, std::vector<int>>> classes;  // color -> (tokens, vertices)
    for (int t = 0; t < n; ++t) classes[inst.token_colors[t]].first.push_back(t);
    for (int v = 0; v < n; ++v) classes[inst.vertex_colors[v]].second.push_back(v);

    TargetAssignment result;
    result.target.assign(n, -1);
    for (auto& [color, cls] : classes) {
        auto& [tokens, vertices] = cls;
        const int k = (int)tokens.size();
        std::vector<std::vector<long long>> cost(k, std::vector<long long>(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) cost[a][b] = distances(pos[tokens[a]], vertices[b]);
        std::vector<int> match = min_cost_matching_lex(cost);
        for (int a = 0; a < k; ++a) {
            result.target[tokens[a]] = vertices[match[a]];
            result.cost += cost[a][match[a]];
        }
    }
    return result;
}

SolveResult solve_colored(const ColoredInstance& inst, const UncoloredSolver& solver) {
    TargetAssignment assign = optimal_assignment(inst, all_pairs_distances(inst.graph));
    TokenPlacement relabeled(inst.graph.n);
    for (int v = 0; v < inst.graph.n; ++v) relabeled[v] = assign.target[inst.placement[v]];
    return solver(inst.graph, relabeled);
}

long long assignment_floor(const ColoredInstance& inst) {
    TargetAssignment assign = optimal_assignment(inst, all_pairs_distances(inst.graph));
    return (assign.cost + 1) / 2;
}

}  // namespace tsw
