#include "tsw/gen.hpp"

#include <algorithm>
#include <set>

#include "tsw/rng.hpp"

namespace tsw {

namespace {

Graph random_tree(int n, Rng rng) {
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    // Uniform labeled tree from a random Pruefer sequence.
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = (int)rng.below((std::uint64_t)n);
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph random_connected(int n, Rng rng) {
    Graph tree = random_tree(n, rng.split("tree"));
    auto edges = tree.edges;
    std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    Rng extra = rng.split("extra");
    int wanted = n / 2;  // sparse but clearly not a tree
    long long max_extra = (long long)n * (n - 1) / 2 - (n - 1);
    wanted = (int)std::min<long long>(wanted, max_extra);
    while (wanted > 0) {
        int u = (int)extra.below((std::uint64_t)n);
        int v = (int)extra.below((std::uint64_t)n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (present.insert({u, v}).second) {
            edges.emplace_back(u, v);
            --wanted;
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace

Graph generate_graph(const std::string& family, int n, std::uint64_t seed) {
    if (n < 2) throw Error("need n >= 2");
    Rng rng(seed);
    if (family == "path") return Graph::path(n);
    if (family == "cycle") {
        if (n < 3) throw Error("cycle needs n >= 3");
        return Graph::cycle(n);
    }
    if (family == "star") return Graph::star(n);
    if (family == "complete") return Graph::complete(n);
    if (family == "tree") return random_tree(n, rng.split("graph"));
    if (family == "random-connected") return random_connected(n, rng.split("graph"));
    throw UnknownFamily(family);
}

TokenPlacement generate_placement(const std::string& perm_kind, int n, std::uint64_t seed) {
    TokenPlacement p = identity_placement(n);
    if (perm_kind == "identity") return p;
    if (perm_kind == "random") {
        Rng rng = Rng(seed).split("perm");
        rng.shuffle(p);
        return p;
    }
    if (perm_kind == "reversal") {
        std::reverse(p.begin(), p.end());
        return p;
    }
    if (perm_kind == "rotation") {
        // vertex v holds token v+1; the last vertex holds token 1
        for (int v = 0; v < n; ++v) p[v] = (v + 1) % n;
        return p;
    }
    if (perm_kind.rfind("cycle-", 0) == 0) {
        int k;
        try {
            k = std::stoi(perm_kind.substr(6));
        } catch (const std::exception&) {
            throw UnknownFamily(perm_kind);
        }
        if (k < 2 || k > n) throw Error("cycle length must be in 2..n");
        for (int v = 0; v < k; ++v) p[v] = (v + 1) % k;
        return p;
    }
    throw UnknownFamily(perm_kind);
}

Instance generate_instance(const std::string& family, int n, std::uint64_t seed,
                           const std::string& perm_kind) {
    Instance inst;
    inst.graph = generate_graph(family, n, seed);
    inst.placement = generate_placement(perm_kind, n, seed);
    return inst;
}

}  // namespace tsw
