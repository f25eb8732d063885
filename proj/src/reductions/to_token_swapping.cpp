#include "tsw/reductions/to_token_swapping.hpp"

#include <algorithm>
#include <set>

namespace tsw {

namespace {

// Fillers destined for layer `li`, per copy, ascending by start vertex.
std::vector<int> fillers_for_layer(const StructuredColoredInstance& s, int li) {
    std::vector<int> out;
    std::set<int> sources(s.sources.begin(), s.sources.end());
    for (int v = 0; v < s.inst.graph.n; ++v) {
        if (sources.count(v)) continue;
        if (s.inst.token_colors[s.inst.placement[v]] == li + 1) out.push_back(v);
    }
    return out;
}

}  // namespace

UncoloredReduction structured_to_uncolored(const StructuredColoredInstance& s) {
    auto bad = check_structured(s);
    if (!bad.empty()) throw Error("not a structured instance: " + bad.front());

    const Graph& g = s.inst.graph;
    const int nv = g.n;
    UncoloredReduction red;
    red.copy_size = nv;

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + nv, v + nv);
    }

    std::set<int> sinks(s.sinks.begin(), s.sinks.end());
    int next_id = 2 * nv;
    for (int li = 0; li < (int)s.layers.size(); ++li) {
        std::vector<int> cls;
        for (int v : s.layers[li])
            if (!sinks.count(v)) cls.push_back(v);
        std::sort(cls.begin(), cls.end());
        if (cls.empty()) continue;
        if (2 * cls.size() > 20) throw LayerTooLarge(2 * cls.size());

        UncoloredReduction::AttachedNetwork att;
        att.layer = li;
        att.class_vertices = cls;
        att.net = build_permutation_network(2 * (int)cls.size());

        const auto& grid = att.net.grid;
        att.vertex_map.assign(grid.width * grid.height, -1);
        for (std::size_t i = 0; i < att.net.grid.inputs.size(); ++i) {
            int cv = i < cls.size() ? cls[i] : cls[i - cls.size()] + nv;
            att.vertex_map[grid.inputs[i]] = cv;
        }
        for (int v = 0; v < grid.width * grid.height; ++v)
            if (att.vertex_map[v] < 0) att.vertex_map[v] = next_id++;

        for (int r = 0; r + 1 < grid.height; ++r)
            for (int c = 0; c < grid.width; ++c)
                if (grid.has_down(r, c))
                    edges.emplace_back(att.vertex_map[grid.id(r, c)],
                                       att.vertex_map[grid.id(r + 1, c)]);
        for (auto [r, a, b] : grid.horizontals)
            edges.emplace_back(att.vertex_map[grid.id(r, a)], att.vertex_map[grid.id(r, b)]);

        red.networks.push_back(std::move(att));
    }

    red.graph = Graph(next_id, std::move(edges));
    if (!red.graph.is_connected()) throw DisconnectedGraph();

    // Targets: real tokens go to their copy's sink, fillers to network
    // outputs (straight pairing, identical in both copies), network tokens to
    // their fixed destinations.
    std::vector<int> target(next_id, -1);
    for (int src : s.sources) {
        target[src] = s.phi[src];
        target[src + nv] = s.phi[src] + nv;
    }
    for (const auto& att : red.networks) {
        std::vector<int> fillers = fillers_for_layer(s, att.layer);
        if (2 * fillers.size() != att.net.grid.outputs.size())
            throw Error("layer filler count does not match its network width");
        for (std::size_t i = 0; i < 2 * fillers.size(); ++i) {
            int fv = i < fillers.size() ? fillers[i] : fillers[i - fillers.size()] + nv;
            target[fv] = att.vertex_map[att.net.grid.outputs[i]];
        }
        const auto& grid = att.net.grid;
        for (int v = 0; v < grid.width * grid.height; ++v)
            if (grid.fixed_target[v] >= 0)
                target[att.vertex_map[v]] = att.vertex_map[grid.fixed_target[v]];
    }

    red.placement.assign(next_id, -1);
    for (int v = 0; v < next_id; ++v) red.placement[v] = target[v];
    if (!is_permutation(red.placement)) throw Error("reduction targets are not a bijection");

    long long network_swaps = 0;
    for (const auto& att : red.networks) network_swaps += att.net.T;
    red.threshold = 2 * s.threshold + network_swaps;
    return red;
}

SwapSequence compose_uncolored_solution(const UncoloredReduction& red, const DisjointPaths& paths) {
    const int nv = red.copy_size;
    SwapSequence seq;
    TokenPlacement cur = red.placement;
    auto do_swap = [&](int u, int v) {
        std::swap(cur[u], cur[v]);
        seq.emplace_back(u, v);
    };
    for (int copy = 0; copy < 2; ++copy)
        for (const auto& path : paths)
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                do_swap(path[i] + copy * nv, path[i + 1] + copy * nv);

    for (const auto& att : red.networks) {
        const auto& grid = att.net.grid;
        // The permutation the network must realize: input position -> output
        // position of the token now sitting there.
        std::vector<int> output_pos(red.graph.n, -1);
        for (std::size_t o = 0; o < grid.outputs.size(); ++o)
            output_pos[att.vertex_map[grid.outputs[o]]] = (int)o;
        std::vector<int> perm(grid.inputs.size(), -1);
        for (std::size_t i = 0; i < grid.inputs.size(); ++i) {
            int token_target = cur[att.vertex_map[grid.inputs[i]]];
            if (token_target < 0 || output_pos[token_target] < 0)
                throw Error("a non-filler token sits on a network input");
            perm[i] = output_pos[token_target];
        }
        for (auto [u, v] : route_network(att.net, perm))
            do_swap(att.vertex_map[u], att.vertex_map[v]);
    }
    return seq;
}

}  // namespace tsw
