#include "tsw/reductions/dp.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace tsw {

std::vector<int> LayeredDag::sources() const {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (in[v].empty()) s.push_back(v);
    return s;
}

std::vector<int> LayeredDag::sinks() const {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (out[v].empty()) s.push_back(v);
    return s;
}

LayeredDag LayeredDag::build(int n, const std::vector<std::vector<int>>& layers,
                             const std::vector<std::pair<int, int>>& arcs,
                             const std::vector<std::pair<int, int>>& phi_pairs) {
    LayeredDag dag;
    dag.n = n;
    dag.layers = layers;
    dag.layer_of.assign(n, -1);
    for (int li = 0; li < (int)layers.size(); ++li)
        for (int v : layers[li]) {
            if (v < 0 || v >= n || dag.layer_of[v] != -1) throw Error("bad layer partition");
            dag.layer_of[v] = li;
        }
    for (int v = 0; v < n; ++v)
        if (dag.layer_of[v] < 0) throw Error("vertex missing from layer partition");
    dag.out.assign(n, {});
    dag.in.assign(n, {});
    for (auto [u, v] : arcs) {
        dag.out[u].push_back(v);
        dag.in[v].push_back(u);
    }
    for (auto& a : dag.out) std::sort(a.begin(), a.end());
    for (auto& a : dag.in) std::sort(a.begin(), a.end());
    dag.phi.assign(n, -1);
    for (auto [s, t] : phi_pairs) dag.phi[s] = t;
    dag.label.assign(n, "");
    return dag;
}

std::vector<int> source_path_counts(const LayeredDag& dag) {
    std::vector<int> counts(dag.n, -1);
    for (int v : dag.sources()) {
        // BFS from v; hop count to phi(v) plus one.
        std::vector<int> hops(dag.n, -1);
        std::queue<int> q;
        q.push(v);
        hops[v] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : dag.out[u])
                if (hops[w] < 0) {
                    hops[w] = hops[u] + 1;
                    q.push(w);
                }
        }
        int t = dag.phi[v];
        if (t < 0 || hops[t] < 0) throw Error("no path from a source to its matched sink");
        counts[v] = hops[t] + 1;
    }
    return counts;
}

std::vector<std::string> validate_dag(const LayeredDag& dag) {
    std::vector<std::string> bad;
    for (int li = 0; li < (int)dag.layers.size(); ++li)
        if (dag.layers[li].size() > 10)
            bad.push_back("layer " + std::to_string(li + 1) + " has " +
                          std::to_string(dag.layers[li].size()) + " vertices (limit 10)");
    for (int v = 0; v < dag.n; ++v) {
        for (int w : dag.out[v])
            if (dag.layer_of[v] >= dag.layer_of[w]) {
                bad.push_back("arc " + std::to_string(v + 1) + "->" + std::to_string(w + 1) +
                              " does not go to a later layer");
            }
        if (!dag.in[v].empty()) {
            int l0 = dag.layer_of[dag.in[v][0]];
            for (int u : dag.in[v])
                if (dag.layer_of[u] != l0) {
                    bad.push_back("vertex " + std::to_string(v + 1) +
                                  " has incoming arcs from two different layers");
                    break;
                }
        }
    }
    auto src = dag.sources();
    auto snk = dag.sinks();
    std::vector<int> mapped;
    for (int v : src) {
        if (dag.phi[v] < 0) {
            bad.push_back("source " + std::to_string(v + 1) + " has no phi image");
            continue;
        }
        mapped.push_back(dag.phi[v]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != snk) bad.push_back("phi is not a bijection sources -> sinks");
    if (bad.empty()) {
        try {
            auto counts = source_path_counts(dag);
            long long total = 0;
            for (int v : src) total += counts[v];
            if (total != dag.n)
                bad.push_back("packing identity violated: sum n(v) = " + std::to_string(total) +
                              ", |V| = " + std::to_string(dag.n));
        } catch (const Error& e) {
            bad.push_back(e.what());
        }
    }
    return bad;
}

namespace {

struct DpSearch {
    const LayeredDag& dag;
    std::size_t budget;
    std::size_t nodes = 0;
    std::vector<int> src;
    std::vector<std::vector<int>> dist_to_sink;  // per source index, hops to its sink
    std::vector<char> used;
    DisjointPaths paths;

    explicit DpSearch(const LayeredDag& d, std::size_t budget_) : dag(d), budget(budget_) {
        src = dag.sources();
        used.assign(dag.n, 0);
        dist_to_sink.resize(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            auto& dist = dist_to_sink[i];
            dist.assign(dag.n, -1);
            std::queue<int> q;
            int t = dag.phi[src[i]];
            dist[t] = 0;
            q.push(t);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : dag.in[u])
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        q.push(w);
                    }
            }
        }
    }

    // Every remaining pair must stay connected through unused vertices.
    bool residual_ok(std::size_t from) {
        std::vector<int> seen(dag.n, -1);
        for (std::size_t i = from; i < src.size(); ++i) {
            std::queue<int> q;
            int goal = dag.phi[src[i]];
            q.push(src[i]);
            seen[src[i]] = (int)i;
            bool ok = false;
            while (!q.empty() && !ok) {
                int u = q.front();
                q.pop();
                for (int w : dag.out[u]) {
                    if (used[w] || seen[w] == (int)i) continue;
                    if (w == goal) {
                        ok = true;
                        break;
                    }
                    seen[w] = (int)i;
                    q.push(w);
                }
            }
            if (!ok && src[i] != goal) return false;
        }
        return true;
    }

    bool extend(std::size_t pi, int v) {
        if (++nodes > budget) throw OracleBudgetExceeded();
        paths[pi].push_back(v);
        used[v] = 1;
        bool done = false;
        if (v == dag.phi[src[pi]]) {
            if (pi + 1 == src.size()) {
                done = std::count(used.begin(), used.end(), 1) == dag.n;
            } else if (residual_ok(pi + 1)) {
                paths.emplace_back();
                done = extend(pi + 1, src[pi + 1]);
                if (!done) paths.pop_back();
            }
        } else {
            const auto& dist = dist_to_sink[pi];
            for (int w : dag.out[v]) {
                if (used[w] || dist[w] != dist[v] - 1) continue;  // paths are shortest
                if (extend(pi, w)) {
                    done = true;
                    break;
                }
            }
        }
        if (!done) {
            used[v] = 0;
            paths[pi].pop_back();
        }
        return done;
    }

    std::optional<DisjointPaths> run() {
        if (src.empty())
            return dag.n == 0 ? std::optional<DisjointPaths>(DisjointPaths{}) : std::nullopt;
        paths.assign(1, {});
        if (extend(0, src[0])) return paths;
        return std::nullopt;
    }
};

}  // namespace

std::optional<DisjointPaths> dp_solve(const LayeredDag& dag, std::size_t node_budget) {
    auto bad = validate_dag(dag);
    if (!bad.empty()) throw Error("invalid DP instance: " + bad.front());
    return DpSearch(dag, node_budget).run();
}

std::string emit_dp(const LayeredDag& dag) {
    std::ostringstream out;
    for (int li = 0; li < (int)dag.layers.size(); ++li) {
        out << "layer " << li + 1 << ':';
        for (int v : dag.layers[li]) out << ' ' << v + 1;
        out << '\n';
    }
    for (int v = 0; v < dag.n; ++v)
        for (int w : dag.out[v]) out << "arc " << v + 1 << ' ' << w + 1 << '\n';
    for (int v = 0; v < dag.n; ++v)
        if (dag.phi[v] >= 0) out << "phi " << v + 1 << ' ' << dag.phi[v] + 1 << '\n';
    return out.str();
}

LayeredDag parse_dp(const std::string& text) {
    std::istringstream ss(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, std::vector<int>>> layer_lines;
    std::vector<std::pair<int, int>> arcs, phis;
    int max_vertex = 0;

    while (std::getline(ss, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream in(raw);
        std::string kind;
        if (!(in >> kind)) continue;
        if (kind == "layer") {
            std::string idx;
            in >> idx;
            if (!idx.empty() && idx.back() == ':') idx.pop_back();
            int li;
            try {
                li = std::stoi(idx);
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected 'layer <i>: v...'");
            }
            std::vector<int> verts;
            int v;
            while (in >> v) {
                if (v < 1) throw ParseError(lineno, "vertex ids are 1-based");
                verts.push_back(v - 1);
                max_vertex = std::max(max_vertex, v);
            }
            layer_lines.emplace_back(li, std::move(verts));
        } else if (kind == "arc" || kind == "phi") {
            int u, v;
            if (!(in >> u >> v) || u < 1 || v < 1)
                throw ParseError(lineno, "expected '" + kind + " <u> <v>'");
            max_vertex = std::max({max_vertex, u, v});
            (kind == "arc" ? arcs : phis).emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(lineno, "unknown line kind '" + kind + "'");
        }
    }
    std::sort(layer_lines.begin(), layer_lines.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<int>> layers;
    for (auto& [idx, verts] : layer_lines) layers.push_back(std::move(verts));
    return LayeredDag::build(max_vertex, layers, arcs, phis);
}

}  // namespace tsw
