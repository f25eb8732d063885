#include "tsw/colored.hpp"

#include <numeric>

#include "tsw/approx.hpp"
#include "tsw/exact.hpp"
#include "tsw/rng.hpp"

#include "support/harness.hpp"
#include "support/oracles.hpp"

using namespace tsw;

namespace {

UncoloredSolver exact_solver() {
    return [](const Graph& g, const TokenPlacement& p) { return solve_bfs(g, p); };
}

void test_matching_lex() {
    harness::section("min_cost_matching_lex vs brute force");
    Rng rng(2718);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + (int)rng.below(5);
        std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
        for (auto& row : cost)
            for (auto& c : row) c = (long long)rng.below(6);
        std::vector<int> got = min_cost_matching_lex(cost);

        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        long long best = -1;
        std::vector<int> best_perm;
        do {
            long long c = 0;
            for (int i = 0; i < n; ++i) c += cost[i][order[i]];
            if (best < 0 || c < best || (c == best && order < best_perm)) {
                best = c;
                best_perm = order;
            }
        } while (std::next_permutation(order.begin(), order.end()));

        long long got_cost = 0;
        for (int i = 0; i < n; ++i) got_cost += cost[i][got[i]];
        CHECK_EQ(got_cost, best);
        CHECK(got == best_perm);  // lexicographically smallest among optima
    }
}

void test_assignment_examples() {
    harness::section("optimal_assignment");
    Graph p3 = Graph::path(3);
    DistanceTable d = all_pairs_distances(p3);

    // all colors distinct: target(i) = i, cost = L
    ColoredInstance distinct{p3, {2, 1, 0}, {1, 2, 3}, {1, 2, 3}};
    TargetAssignment a = optimal_assignment(distinct, d);
    for (int t = 0; t < 3; ++t) CHECK_EQ(a.target[t], t);
    CHECK_EQ(a.cost, total_displacement(p3, distinct.placement));

    // all colors equal: every token matches its own position, cost 0
    ColoredInstance same{p3, {2, 0, 1}, {1, 1, 1}, {1, 1, 1}};
    TargetAssignment b = optimal_assignment(same, d);
    CHECK_EQ(b.cost, 0);

    // vertex colors r,b,r; token colors by position b,r,r
    ColoredInstance mixed{p3, {0, 1, 2}, {2, 1, 1}, {1, 2, 1}};
    TargetAssignment c = optimal_assignment(mixed, d);
    CHECK_EQ(c.cost, 2);
}

void test_solve_colored() {
    harness::section("solve_colored");
    Graph p3 = Graph::path(3);
    ColoredInstance mixed{p3, {0, 1, 2}, {2, 1, 1}, {1, 2, 1}};
    SolveResult r = solve_colored(mixed, exact_solver());
    CHECK_EQ(r.length, (std::size_t)1);
    CHECK(verify_colored_solution(mixed, r.sequence));

    ColoredInstance distinct{p3, {2, 1, 0}, {1, 2, 3}, {1, 2, 3}};
    CHECK_EQ(solve_colored(distinct, exact_solver()).length, solve_bfs(p3, {2, 1, 0}).length);

    ColoredInstance same{p3, {2, 0, 1}, {1, 1, 1}, {1, 1, 1}};
    CHECK_EQ(solve_colored(same, exact_solver()).length, (std::size_t)0);
}

void test_assignment_floor() {
    harness::section("assignment_floor");
    Graph p3 = Graph::path(3);
    ColoredInstance same{p3, {2, 0, 1}, {1, 1, 1}, {1, 1, 1}};
    CHECK_EQ(assignment_floor(same), 0);
    ColoredInstance mixed{p3, {0, 1, 2}, {2, 1, 1}, {1, 2, 1}};
    CHECK_EQ(assignment_floor(mixed), 1);
    ColoredInstance distinct{p3, {2, 1, 0}, {1, 2, 3}, {1, 2, 3}};
    CHECK_EQ(assignment_floor(distinct), (total_displacement(p3, distinct.placement) + 1) / 2);
}

// Exhaustive small-instance sweep: L* matches the brute-force minimum over
// color-respecting bijections, solutions verify, and the happy route stays
// within 4x of the colored optimum.
void test_exhaustive_small() {
    harness::section("exhaustive small colored instances");
    Rng rng(31);
    for (int n = 2; n <= 5; ++n) {
        std::vector<Graph> graphs{Graph::path(n), Graph::star(n), Graph::complete(n)};
        if (n >= 3) graphs.push_back(Graph::cycle(n));
        for (const Graph& g : graphs) {
            auto dist = oracles::plain_distances(g);
            long long ncolorings = 1;
            for (int i = 0; i < n; ++i) ncolorings *= 3;
            for (long long code = 0; code < ncolorings; code += (n >= 5 ? 7 : 1)) {
                std::vector<int> vc(n);
                long long c = code;
                for (int i = 0; i < n; ++i) {
                    vc[i] = (int)(c % 3) + 1;
                    c /= 3;
                }
                TokenPlacement p = identity_placement(n);
                rng.shuffle(p);
                // token i inherits the color of vertex i, so multisets match
                ColoredInstance inst{g, p, vc, vc};

                TargetAssignment a = optimal_assignment(inst, all_pairs_distances(g));
                CHECK_EQ(a.cost, oracles::brute_min_assignment(inst, dist));
                for (int t = 0; t < n; ++t)
                    CHECK_EQ(inst.token_colors[t], inst.vertex_colors[a.target[t]]);

                long long opt = oracles::colored_optimum(inst, 64);
                CHECK(opt >= 0);
                CHECK(assignment_floor(inst) <= opt);

                SolveResult ex = solve_colored(inst, exact_solver());
                CHECK(verify_colored_solution(inst, ex.sequence));

                SolveResult happy = solve_colored(inst, [](const Graph& gg, const TokenPlacement& pp) {
                    return solve_happy(gg, pp);
                });
                CHECK(verify_colored_solution(inst, happy.sequence));
                CHECK((long long)happy.length <= 4 * opt || opt == 0);
                if (opt == 0) CHECK_EQ(happy.length, (std::size_t)0);
                CHECK((long long)happy.length <= 2 * a.cost || a.cost == 0);
            }
        }
    }
}

void test_brute_min_larger() {
    harness::section("L* = brute minimum over bijections, n = 7..8");
    Rng rng(88);
    for (int n : {7, 8}) {
        std::vector<Graph> graphs{Graph::path(n), Graph::cycle(n)};
        for (const Graph& g : graphs) {
            auto dist = oracles::plain_distances(g);
            for (int iter = 0; iter < 20; ++iter) {
                std::vector<int> vc(n);
                for (auto& c : vc) c = 1 + (int)rng.below(3);
                TokenPlacement p = identity_placement(n);
                rng.shuffle(p);
                ColoredInstance inst{g, p, vc, vc};
                TargetAssignment a = optimal_assignment(inst, all_pairs_distances(g));
                CHECK_EQ(a.cost, oracles::brute_min_assignment(inst, dist));
            }
        }
    }
}

void test_label_permutation_invariance() {
    harness::section("color labels do not change L*");
    Graph g = Graph::cycle(6);
    Rng rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<int> vc(6);
        for (auto& c : vc) c = 1 + (int)rng.below(3);
        TokenPlacement p = identity_placement(6);
        rng.shuffle(p);
        ColoredInstance inst{g, p, vc, vc};
        long long base = optimal_assignment(inst, all_pairs_distances(g)).cost;
        // permute color names 1->2->3->1
        auto relabel = vc;
        for (auto& c : relabel) c = c % 3 + 1;
        ColoredInstance renamed{g, p, relabel, relabel};
        CHECK_EQ(optimal_assignment(renamed, all_pairs_distances(g)).cost, base);
    }
}

}  // namespace

int main() {
    test_matching_lex();
    test_assignment_examples();
    test_solve_colored();
    test_assignment_floor();
    test_exhaustive_small();
    test_brute_min_larger();
    test_label_permutation_invariance();
    return harness::summary("test_colored");
}
