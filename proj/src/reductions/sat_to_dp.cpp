#include "tsw/reductions/sat_to_dp.hpp"

#include <algorithm>
#include <cmath>

namespace tsw {

namespace {

struct Builder {
    std::vector<std::vector<int>> layers;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> phi;
    std::vector<std::string> labels;
    int next_id = 0;

    int vertex(int layer, std::string label) {
        while ((int)layers.size() <= layer) layers.emplace_back();
        layers[layer].push_back(next_id);
        labels.push_back(std::move(label));
        return next_id++;
    }
};

}  // namespace

SatDpReduction sat_to_dp(const CnfFormula& f) {
    for (std::size_t z = 0; z < f.clauses.size(); ++z)
        if (f.clauses[z].size() != 3) throw UnsupportedClauseArity(z);

    const int n = f.num_vars;
    const int m = (int)f.clauses.size();
    SatDpReduction red;
    red.vars.resize(n);
    red.clauses.resize(m);
    Builder b;

    // Layer plan: per-variable start crossings, then clause gadgets, then
    // per-variable end crossings, three layers each.
    auto sc_layer = [&](int var) { return 3 * var; };
    auto cg_layer = [&](int z) { return 3 * n + 3 * z; };
    auto ec_layer = [&](int var) { return 3 * n + 3 * m + 3 * var; };

    for (int i = 0; i < n; ++i) {
        auto& V = red.vars[i];
        std::string x = "x" + std::to_string(i + 1);
        V.x_src = b.vertex(sc_layer(i), x + ".src");
        V.s1_src = b.vertex(sc_layer(i), x + ".s1.src");
        V.aT = b.vertex(sc_layer(i) + 1, x + ".aT");
        V.aF = b.vertex(sc_layer(i) + 1, x + ".aF");
        V.headT = b.vertex(sc_layer(i) + 2, x + ".headT");
        V.headF = b.vertex(sc_layer(i) + 2, x + ".headF");
        b.arcs.insert(b.arcs.end(), {{V.x_src, V.aT},
                                     {V.x_src, V.aF},
                                     {V.s1_src, V.aT},
                                     {V.s1_src, V.aF},
                                     {V.aT, V.headT},
                                     {V.aF, V.headF}});
    }

    for (int z = 0; z < m; ++z) {
        auto& C = red.clauses[z];
        std::string cz = "C" + std::to_string(z + 1);
        C.c1 = b.vertex(cg_layer(z), cz + ".top");
        C.zmid = b.vertex(cg_layer(z) + 1, cz + ".mid");
        C.c3 = b.vertex(cg_layer(z) + 2, cz + ".bot");
        b.phi.emplace_back(C.c1, C.c3);
        for (int s = 0; s < 3; ++s) {
            int lit = f.clauses[z][s];
            int var = std::abs(lit) - 1;
            auto& S = C.slot[s];
            S.var = var;
            S.positive = lit > 0;
            std::string tag = cz + ".x" + std::to_string(var + 1);
            for (int l = 0; l < 3; ++l) {
                S.T[l] = b.vertex(cg_layer(z) + l, tag + ".T" + std::to_string(l + 1));
                S.F[l] = b.vertex(cg_layer(z) + l, tag + ".F" + std::to_string(l + 1));
                S.S[l] = b.vertex(cg_layer(z) + l, tag + ".S" + std::to_string(l + 1));
            }
            red.vars[var].occ_clause.push_back(z);
            red.vars[var].occ_slot.push_back(s);

            // Track continuations and the straight supplementary exits.
            b.arcs.insert(b.arcs.end(), {{S.T[0], S.T[1]},
                                         {S.T[1], S.T[2]},
                                         {S.F[0], S.F[1]},
                                         {S.F[1], S.F[2]},
                                         {S.T[1], S.S[2]},
                                         {S.F[1], S.S[2]},
                                         {S.S[0], S.S[1]},
                                         {S.S[1], S.T[2]},
                                         {S.S[1], S.F[2]},
                                         {C.zmid, S.S[2]}});
            // Detour side: the track of the literal that does not appear here.
            const int* D = S.positive ? S.F : S.T;
            b.arcs.insert(b.arcs.end(), {{D[0], C.zmid}, {C.c1, D[1]}, {D[1], C.c3}});
        }
    }

    for (int i = 0; i < n; ++i) {
        auto& V = red.vars[i];
        std::string x = "x" + std::to_string(i + 1);
        V.enT = b.vertex(ec_layer(i), x + ".enT");
        V.enF = b.vertex(ec_layer(i), x + ".enF");
        V.b1 = b.vertex(ec_layer(i) + 1, x + ".b1");
        V.b2 = b.vertex(ec_layer(i) + 1, x + ".b2");
        V.x_snk = b.vertex(ec_layer(i) + 2, x + ".snk");
        V.s_snk = b.vertex(ec_layer(i) + 2, x + ".s.snk");
        b.arcs.insert(b.arcs.end(), {{V.enT, V.b1},
                                     {V.enT, V.b2},
                                     {V.enF, V.b1},
                                     {V.enF, V.b2},
                                     {V.b1, V.x_snk},
                                     {V.b2, V.s_snk}});

        // Chain the twin tracks through this variable's clause gadgets.
        int prevT = V.headT, prevF = V.headF;
        int prev_s_src = V.s1_src;
        for (std::size_t j = 0; j < V.occ_clause.size(); ++j) {
            auto& S = red.clauses[V.occ_clause[j]].slot[V.occ_slot[j]];
            b.arcs.emplace_back(prevT, S.T[0]);
            b.arcs.emplace_back(prevF, S.F[0]);
            prevT = S.T[2];
            prevF = S.F[2];
            b.phi.emplace_back(prev_s_src, S.S[2]);
            prev_s_src = S.S[0];
        }
        b.arcs.emplace_back(prevT, V.enT);
        b.arcs.emplace_back(prevF, V.enF);
        b.phi.emplace_back(prev_s_src, V.s_snk);
        b.phi.emplace_back(V.x_src, V.x_snk);
    }

    red.dag = LayeredDag::build(b.next_id, b.layers, b.arcs, b.phi);
    red.dag.label = std::move(b.labels);
    return red;
}

DisjointPaths paths_for_assignment(const SatDpReduction& red, const CnfFormula& f,
                                   std::uint64_t bits) {
    if (!evaluates(f, bits)) throw Error("assignment does not satisfy the formula");
    const int m = (int)f.clauses.size();

    // Each clause detours into its first satisfied slot.
    std::vector<int> chosen(m, -1);
    for (int z = 0; z < m; ++z) {
        for (int s = 0; s < 3 && chosen[z] < 0; ++s) {
            int lit = f.clauses[z][s];
            bool value = (bits >> (std::abs(lit) - 1)) & 1;
            if (lit < 0) value = !value;
            if (value) chosen[z] = s;
        }
    }

    DisjointPaths paths;
    for (int z = 0; z < m; ++z) {
        const auto& S = red.clauses[z].slot[chosen[z]];
        const int* D = S.positive ? S.F : S.T;
        paths.push_back({red.clauses[z].c1, D[1], red.clauses[z].c3});
    }

    for (int i = 0; i < (int)red.vars.size(); ++i) {
        const auto& V = red.vars[i];
        bool value = (bits >> i) & 1;
        const std::size_t occ = V.occ_clause.size();

        std::vector<int> xp{V.x_src, value ? V.aT : V.aF, value ? V.headT : V.headF};
        for (std::size_t j = 0; j < occ; ++j) {
            const auto& S = red.clauses[V.occ_clause[j]].slot[V.occ_slot[j]];
            const int* A = value ? S.T : S.F;
            xp.insert(xp.end(), {A[0], A[1], A[2]});
        }
        xp.insert(xp.end(), {value ? V.enT : V.enF, V.b1, V.x_snk});
        paths.push_back(std::move(xp));

        // Supplementary path j covers the unused track into occurrence j.
        for (std::size_t j = 0; j <= occ; ++j) {
            std::vector<int> sp;
            if (j == 0) {
                sp = {V.s1_src, value ? V.aF : V.aT, value ? V.headF : V.headT};
            } else {
                const auto& P = red.clauses[V.occ_clause[j - 1]].slot[V.occ_slot[j - 1]];
                const int* U = value ? P.F : P.T;
                sp = {P.S[0], P.S[1], U[2]};
            }
            if (j == occ) {
                sp.insert(sp.end(), {value ? V.enF : V.enT, V.b2, V.s_snk});
            } else {
                int z = V.occ_clause[j];
                const auto& S = red.clauses[z].slot[V.occ_slot[j]];
                const int* U = value ? S.F : S.T;
                bool diverted = chosen[z] == V.occ_slot[j];
                sp.insert(sp.end(), {U[0], diverted ? red.clauses[z].zmid : U[1], S.S[2]});
            }
            paths.push_back(std::move(sp));
        }
    }
    return paths;
}

}  // namespace tsw
