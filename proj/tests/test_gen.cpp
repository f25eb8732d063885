#include "tsw/gen.hpp"

#include "support/harness.hpp"

using namespace tsw;

namespace {

void test_families() {
    harness::section("graph families");
    for (int n : {2, 3, 5, 9}) {
        for (const char* family : {"path", "star", "complete", "tree", "random-connected"}) {
            Graph g = generate_graph(family, n, 77);
            CHECK_EQ(g.n, n);
            CHECK(g.is_connected());
        }
        if (n >= 3) {
            Graph c = generate_graph("cycle", n, 77);
            CHECK_EQ((int)c.edges.size(), n);
        }
    }
    CHECK_EQ((int)generate_graph("path", 6, 0).edges.size(), 5);
    CHECK_EQ((int)generate_graph("tree", 40, 5).edges.size(), 39);
    CHECK((int)generate_graph("random-connected", 40, 5).edges.size() > 39);
    CHECK_THROWS(UnknownFamily, generate_graph("moebius", 5, 0));
    CHECK_THROWS(Error, generate_graph("path", 1, 0));
}

void test_placements() {
    harness::section("placement kinds");
    CHECK(generate_placement("identity", 4, 0) == TokenPlacement({0, 1, 2, 3}));
    CHECK(generate_placement("reversal", 4, 0) == TokenPlacement({3, 2, 1, 0}));
    CHECK(generate_placement("rotation", 4, 0) == TokenPlacement({1, 2, 3, 0}));
    CHECK(generate_placement("cycle-3", 5, 0) == TokenPlacement({1, 2, 0, 3, 4}));
    for (int seed : {0, 1, 2}) {
        TokenPlacement p = generate_placement("random", 30, seed);
        CHECK(is_permutation(p));
        CHECK(p == generate_placement("random", 30, seed));
    }
    CHECK(generate_placement("random", 30, 1) != generate_placement("random", 30, 2));
    CHECK_THROWS(UnknownFamily, generate_placement("zigzag", 4, 0));
    CHECK_THROWS(Error, generate_placement("cycle-9", 4, 0));
}

void test_instance_determinism() {
    harness::section("instances are seed-deterministic and valid");
    for (int seed : {3, 4}) {
        Instance a = generate_instance("random-connected", 12, seed, "random");
        Instance b = generate_instance("random-connected", 12, seed, "random");
        CHECK(a.graph.edges == b.graph.edges);
        CHECK(a.placement == b.placement);
        CHECK(emit_instance(a) == emit_instance(b));
        Instance back = parse_instance(emit_instance(a));
        CHECK(back.graph.edges == a.graph.edges);
        CHECK(back.placement == a.placement);
    }
}

}  // namespace

int main() {
    test_families();
    test_placements();
    test_instance_determinism();
    return harness::summary("test_gen");
}
