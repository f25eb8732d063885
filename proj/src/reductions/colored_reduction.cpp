#include "tsw/reductions/colored_reduction.hpp"

#include <algorithm>
#include <set>

namespace tsw {

StructuredColoredInstance dp_to_colored(const LayeredDag& dag) {
    auto bad = validate_dag(dag);
    if (!bad.empty()) throw Error("invalid DP instance: " + bad.front());

    StructuredColoredInstance s;
    s.layers = dag.layers;
    s.layer_of = dag.layer_of;
    s.sources = dag.sources();
    s.sinks = dag.sinks();
    s.phi = dag.phi;

    const int n = dag.n;
    const int t = (int)dag.layers.size();
    // Colors 1..t for layers; t+1+i for the i-th source/sink pair.
    std::vector<int> vertex_colors(n, -1), token_colors(n, -1);
    std::vector<char> is_sink(n, 0), is_source(n, 0);
    for (int v : s.sinks) is_sink[v] = 1;
    for (int v : s.sources) is_source[v] = 1;

    for (int v = 0; v < n; ++v)
        if (!is_sink[v]) vertex_colors[v] = dag.layer_of[v] + 1;
    for (int i = 0; i < (int)s.sources.size(); ++i) {
        int src = s.sources[i];
        int unique = t + 1 + i;
        token_colors[src] = unique;
        vertex_colors[dag.phi[src]] = unique;
    }
    for (int v = 0; v < n; ++v) {
        if (is_source[v]) continue;
        // a filler destined for the layer its incoming arcs come from
        token_colors[v] = dag.layer_of[dag.in[v][0]] + 1;
    }

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : dag.out[v]) edges.emplace_back(v, w);
    s.inst.graph = Graph(n, std::move(edges));
    if (!s.inst.graph.is_connected()) throw DisconnectedGraph();
    s.inst.placement = identity_placement(n);
    s.inst.token_colors = std::move(token_colors);
    s.inst.vertex_colors = std::move(vertex_colors);
    s.inst.validate_colors();
    s.threshold = n - (long long)s.sources.size();
    return s;
}

std::vector<std::string> check_structured(const StructuredColoredInstance& s) {
    std::vector<std::string> bad;
    const Graph& g = s.inst.graph;
    const int n = g.n;

    for (int li = 0; li < (int)s.layers.size(); ++li)
        if (s.layers[li].size() > 10)
            bad.push_back("property 1: layer " + std::to_string(li + 1) + " has more than 10 vertices");

    for (auto [u, v] : g.edges)
        if (s.layer_of[u] == s.layer_of[v]) {
            bad.push_back("property 2: edge inside one layer cannot be oriented forward");
            break;
        }

    std::set<int> sources(s.sources.begin(), s.sources.end());
    std::set<int> sinks(s.sinks.begin(), s.sinks.end());
    std::set<int> mapped;
    bool phi_ok = true;
    for (int v : s.sources) {
        if (s.phi[v] < 0 || !sinks.count(s.phi[v]) || !mapped.insert(s.phi[v]).second)
            phi_ok = false;
    }
    if (!phi_ok || mapped.size() != sinks.size()) {
        bad.push_back("property 3: phi is not a bijection sources -> sinks");
    } else {
        std::set<int> source_colors;
        for (int v : s.sources) {
            int tc = s.inst.token_colors[s.inst.placement[v]];
            if (tc != s.inst.vertex_colors[s.phi[v]])
                bad.push_back("property 3: source token on " + std::to_string(v + 1) +
                              " is not colored like its sink");
            if (!source_colors.insert(tc).second)
                bad.push_back("property 3: two source tokens share a color");
        }
    }

    for (int li = 0; li < (int)s.layers.size(); ++li) {
        std::set<int> colors;
        for (int v : s.layers[li])
            if (!sinks.count(v)) colors.insert(s.inst.vertex_colors[v]);
        if (colors.size() > 1)
            bad.push_back("property 4: layer " + std::to_string(li + 1) +
                          " has non-sink vertices of two colors");
    }

    for (int v = 0; v < n; ++v) {
        if (sources.count(v)) continue;
        std::set<int> below;
        for (int w : g.adj[v])
            if (s.layer_of[w] < s.layer_of[v]) below.insert(s.layer_of[w]);
        if (below.size() > 1)
            bad.push_back("property 5: vertex " + std::to_string(v + 1) +
                          " has ingoing edges from two layers");
        if (below.empty())
            bad.push_back("property 5: non-source vertex " + std::to_string(v + 1) +
                          " has no ingoing edge");
    }
    return bad;
}

SwapSequence colored_solution_from_paths(const StructuredColoredInstance& inst,
                                         const DisjointPaths& paths) {
    SwapSequence seq;
    for (const auto& path : paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) seq.emplace_back(path[i], path[i + 1]);
    (void)inst;
    return seq;
}

}  // namespace tsw
