#include "tsw/core.hpp"
#include "tsw/io.hpp"
#include "tsw/rng.hpp"

#include "support/harness.hpp"

using namespace tsw;

namespace {

// 1-based helper so the cases below read like the file format.
TokenPlacement place(std::initializer_list<int> tokens) {
    TokenPlacement p;
    for (int t : tokens) p.push_back(t - 1);
    return p;
}

void test_apply_swaps() {
    harness::section("apply_swaps");
    Graph p3 = Graph::path(3);
    CHECK_EQ(apply_swaps(p3, place({2, 1, 3}), {{0, 1}}) == place({1, 2, 3}), true);

    TokenPlacement start = place({3, 2, 1});
    CHECK(apply_swaps(p3, start, {}) == start);

    // Rotation around C7 undone by walking the ring: 7-6, 6-5, ..., 2-1.
    Graph c7 = Graph::cycle(7);
    TokenPlacement rot(7);
    for (int v = 0; v < 7; ++v) rot[v] = (v + 1) % 7;
    SwapSequence ring;
    for (int v = 6; v >= 1; --v) ring.emplace_back(v, v - 1);
    CHECK(is_identity(apply_swaps(c7, rot, ring)));

    CHECK_THROWS(NonEdgeSwap, apply_swaps(p3, start, {{0, 2}}));
}

void test_verify() {
    harness::section("verify_solution");
    Graph p3 = Graph::path(3);
    CHECK(verify_solution(p3, identity_placement(3), {}));
    CHECK(verify_solution(p3, place({3, 2, 1}), {{0, 1}, {1, 2}, {0, 1}}));
    CHECK(!verify_solution(p3, place({3, 2, 1}), {{0, 1}}));
}

void test_verify_colored() {
    harness::section("verify_colored_solution");
    Graph p3 = Graph::path(3);
    ColoredInstance same{p3, place({2, 3, 1}), {1, 1, 1}, {1, 1, 1}};
    CHECK(verify_colored_solution(same, {}));

    // vertex colors r,b,r; tokens on vertices colored b,r,r
    ColoredInstance inst{p3, place({1, 2, 3}), {2, 1, 1}, {1, 2, 1}};
    CHECK(verify_colored_solution(inst, {{0, 1}}));
    CHECK(!verify_colored_solution(inst, {}));

    ColoredInstance mismatch{p3, place({1, 2, 3}), {2, 2, 1}, {1, 2, 1}};
    CHECK_THROWS(ColorMultisetMismatch, verify_colored_solution(mismatch, {}));
}

void test_parse_emit() {
    harness::section("instance io");
    Instance inst = parse_instance("p tsw 3 2\ne 1 2\ne 2 3\nt 3 2 1\n");
    CHECK_EQ(inst.graph.n, 3);
    CHECK(inst.placement == place({3, 2, 1}));
    CHECK(!inst.colored());

    // round trip, with colors and comments
    std::string text =
        "# comment\np tsw 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nt 2 1 4 3\ncv 1 1 2 2\nct 1 2 1 2\n";
    Instance a = parse_instance(text);
    Instance b = parse_instance(emit_instance(a));
    CHECK(a.graph.edges == b.graph.edges);
    CHECK(a.placement == b.placement);
    CHECK(a.token_colors == b.token_colors);
    CHECK(a.vertex_colors == b.vertex_colors);

    CHECK_THROWS(InvalidPermutation, parse_instance("p tsw 3 2\ne 1 2\ne 2 3\nt 1 1 2\n"));
    CHECK_THROWS(DisconnectedGraph, parse_instance("p tsw 4 2\ne 1 2\ne 3 4\nt 1 2 3 4\n"));
    CHECK_THROWS(ParseError, parse_instance("p tsw 3 1\ne 1 2\ne 2 3\nt 1 2 3\n"));
    CHECK_THROWS(ParseError, parse_instance("p tsw 3 2\ne 1 2\ne 2 3\nt 1 2 3\ncv 1 1 1\n"));

    SwapSequence seq = parse_swap_sequence("s 1 2\ns 2 3\nk 2\n");
    CHECK_EQ(seq.size(), (std::size_t)2);
    CHECK(parse_swap_sequence(emit_swap_sequence(seq)) == seq);
    CHECK_THROWS(ParseError, parse_swap_sequence("s 1 2\nk 5\n"));
}

void test_permutation_preserved() {
    harness::section("permutation preservation");
    Rng rng(20260810);
    Graph g = Graph::cycle(8);
    for (int iter = 0; iter < 50; ++iter) {
        TokenPlacement p = identity_placement(8);
        rng.shuffle(p);
        SwapSequence seq;
        for (int k = 0; k < 30; ++k) seq.push_back(g.edges[rng.below(g.edges.size())]);
        TokenPlacement q = apply_swaps(g, p, seq);
        CHECK(is_permutation(q));
        // parity: each swap is a transposition
        int before = 0, after = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                before += p[i] > p[j];
                after += q[i] > q[j];
            }
        CHECK_EQ((before + seq.size()) % 2, (std::size_t)(after % 2));
    }
}

}  // namespace

int main() {
    test_apply_swaps();
    test_verify();
    test_verify_colored();
    test_parse_emit();
    test_permutation_preserved();
    return harness::summary("test_core");
}
