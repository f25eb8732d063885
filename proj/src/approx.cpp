#include "tsw/approx.hpp"

#include <algorithm>
#include <set>

namespace tsw {

namespace {

void desired_moves(const Graph& graph, const TokenPlacement& placement, const DistanceTable& d,
                   int v, std::vector<int>& out) {
    out.clear();
    int target = placement[v];
    if (target == v) return;
    int cur = d(v, target);
    for (int w : graph.adj[v])
        if (d(w, target) < cur) out.push_back(w);  // adj is sorted, so out is too
}

}  // namespace

DesireDigraph build_desire_digraph(const Graph& graph, const TokenPlacement& placement,
                                   const DistanceTable& distances) {
    DesireDigraph F;
    F.out.resize(graph.n);
    for (int v = 0; v < graph.n; ++v) desired_moves(graph, placement, distances, v, F.out[v]);
    return F;
}

Step find_step(const Graph& graph, const TokenPlacement& placement, const DesireDigraph& F) {
    int start = -1;
    for (int v = 0; v < graph.n; ++v)
        if (placement[v] != v) {
            start = v;
            break;
        }
    if (start < 0) throw NoStepFound();  // caller must not ask on the identity

    std::vector<int> order(graph.n, -1);  // position of v in the walk, -1 = unvisited
    std::vector<int> walk;
    int v = start;
    while (true) {
        if (order[v] >= 0) {
            // Closed a cycle; the chain is the walk suffix from v.
            HappyChain chain;
            chain.cycle.assign(walk.begin() + order[v], walk.end());
            return chain;
        }
        order[v] = (int)walk.size();
        walk.push_back(v);
        if (F.out[v].empty()) {
            if (walk.size() < 2) throw NoStepFound();
            return UnhappySwap{walk[walk.size() - 2], v};
        }
        v = F.out[v].front();
    }
}

SolveResult solve_happy(const Graph& graph, const TokenPlacement& placement) {
    if (!is_permutation(placement)) throw InvalidPermutation("start placement");
    DistanceTable dist = all_pairs_distances(graph);
    TokenPlacement tok = placement;
    DesireDigraph F = build_desire_digraph(graph, tok, dist);

    long long L = total_displacement(dist, tok);
    const long long budget = 2 * L;

    std::set<int> misplaced;
    for (int v = 0; v < graph.n; ++v)
        if (tok[v] != v) misplaced.insert(v);

    SolveResult res;
    res.trace.emplace();
    int chain_id = 0;

    auto do_swap = [&](int u, int v, SwapKind kind, int chain) {
        long long dL = 0;
        dL -= (long long)dist(u, tok[u]) + dist(v, tok[v]);
        std::swap(tok[u], tok[v]);
        dL += (long long)dist(u, tok[u]) + dist(v, tok[v]);
        L += dL;
        res.sequence.emplace_back(u, v);
        res.trace->push_back({kind, chain});
        for (int x : {u, v}) {
            desired_moves(graph, tok, dist, x, F.out[x]);
            if (tok[x] == x)
                misplaced.erase(x);
            else
                misplaced.insert(x);
        }
        return dL;
    };

    // Reused walk buffers. A step rewrites tokens only on its own suffix, so
    // the surviving prefix of the walk retraces identically; keep it and
    // resume, resetting whenever the lowest misplaced vertex moved.
    std::vector<int> order(graph.n, -1), stamp(graph.n, -1), walk;
    int step_id = 0;

    auto pop_walk = [&](std::size_t keep) {
        for (std::size_t i = keep; i < walk.size(); ++i) stamp[walk[i]] = -1;
        walk.resize(keep);
    };

    while (!misplaced.empty()) {
        if ((long long)res.sequence.size() >= budget) throw ProgressStall();
        if (!walk.empty() && walk.front() != *misplaced.begin()) {
            pop_walk(0);
            ++step_id;
        }
        int v = walk.empty() ? *misplaced.begin() : F.out[walk.back()].front();
        int cycle_from = -1, unhappy_at = -1;
        while (true) {
            if (stamp[v] == step_id) {
                cycle_from = order[v];
                break;
            }
            stamp[v] = step_id;
            order[v] = (int)walk.size();
            walk.push_back(v);
            if (F.out[v].empty()) {
                unhappy_at = v;
                break;
            }
            v = F.out[v].front();
        }

        if (cycle_from >= 0) {
            // Swapping (w_1,w_c),(w_c,w_{c-1}),...,(w_3,w_2) shifts every
            // token one arc forward around the cycle w_1..w_c.
            const int c = (int)walk.size() - cycle_from;
            long long dL = do_swap(walk[cycle_from], walk[cycle_from + c - 1], SwapKind::Happy,
                                   chain_id);
            for (int i = c - 1; i >= 2; --i)
                dL += do_swap(walk[cycle_from + i], walk[cycle_from + i - 1], SwapKind::Happy,
                              chain_id);
            if (dL != -(long long)c) throw Error("happy chain did not reduce L by its length + 1");
            ++chain_id;
            pop_walk(cycle_from);
        } else {
            if (walk.size() < 2) throw NoStepFound();
            long long dL = do_swap(walk[walk.size() - 2], unhappy_at, SwapKind::Unhappy, -1);
            if (dL != 0) throw Error("unhappy swap changed L");
            pop_walk(walk.size() - 2);
        }
    }
    res.length = res.sequence.size();
    return res;
}

namespace {

// Lowest-indexed next hop on a shortest path toward dst.
int next_hop(const Graph& graph, const DistanceTable& d, int cur, int dst) {
    int want = d(cur, dst) - 1;
    for (int w : graph.adj[cur])
        if (d(w, dst) == want) return w;
    throw Error("no shortest-path hop found (distance table inconsistent)");
}

}  // namespace

SolveResult solve_cycle_decomposition(const Graph& graph, const TokenPlacement& placement,
                                      const DistanceTable& distances) {
    if (!is_permutation(placement)) throw InvalidPermutation("start placement");
    TokenPlacement tok = placement;
    std::vector<int> pos(graph.n);  // pos[t] = vertex of token t
    for (int v = 0; v < graph.n; ++v) pos[tok[v]] = v;

    SolveResult res;
    auto do_swap = [&](int u, int v) {
        std::swap(tok[u], tok[v]);
        pos[tok[u]] = u;
        pos[tok[v]] = v;
        res.sequence.emplace_back(u, v);
    };

    // Moves the token on u to v and the token on v back to u, restoring
    // everything in between: 2d-1 swaps along a shortest path.
    auto exchange = [&](int u, int v) {
        std::vector<int> p{u};
        while (p.back() != v) p.push_back(next_hop(graph, distances, p.back(), v));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) do_swap(p[i], p[i + 1]);
        for (std::size_t i = p.size() - 1; i >= 2; --i) do_swap(p[i - 1], p[i - 2]);
    };

    std::vector<char> done(graph.n, 0);
    for (int start = 0; start < graph.n; ++start) {
        if (done[start] || tok[start] == start) {
            done[start] = 1;
            continue;
        }
        // Cycle c_1, c_2, ..., c_k with the token on c_j belonging to c_{j+1};
        // c_1 is the smallest member. The walking token c_1 starts on c_k.
        std::vector<int> cyc;
        for (int v = start; !done[v]; v = tok[v]) {
            done[v] = 1;
            cyc.push_back(v);
        }
        const int k = (int)cyc.size();
        for (int j = k - 1; j >= 1; --j) exchange(pos[cyc[0]], pos[cyc[j]]);
    }
    res.length = res.sequence.size();
    return res;
}

SolveResult solve_cycle_decomposition(const Graph& graph, const TokenPlacement& placement) {
    return solve_cycle_decomposition(graph, placement, all_pairs_distances(graph));
}

}  // namespace tsw
