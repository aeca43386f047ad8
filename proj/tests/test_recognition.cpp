#include "bubblecut/recognition.hpp"

#include "bubblecut/generator.hpp"
#include "bubblecut/oracle.hpp"

#include <doctest.h>

using namespace bubblecut;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph claw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

}  // namespace

TEST_CASE("is_umbrella_ordering checks the interval condition") {
    Graph p3 = path(3);
    CHECK(is_umbrella_ordering(p3, {0, 1, 2}));
    CHECK(is_umbrella_ordering(p3, {2, 1, 0}));
    CHECK_FALSE(is_umbrella_ordering(p3, {1, 0, 2}));  // 0 between the ends of edge 1-2
    CHECK_FALSE(is_umbrella_ordering(p3, {0, 1}));     // not a permutation
    CHECK_FALSE(is_umbrella_ordering(p3, {0, 0, 2}));  // repeated vertex
    CHECK(is_umbrella_ordering(Graph(0), {}));
}

TEST_CASE("umbrella_ordering on canonical families") {
    auto p3 = umbrella_ordering(path(3));
    REQUIRE(p3.has_value());
    CHECK(*p3 == std::vector<int>{0, 1, 2});

    for (int n : {1, 2, 3, 5, 8}) {
        auto kn = umbrella_ordering(complete(n));
        REQUIRE(kn.has_value());
        std::vector<int> identity(n);
        for (int v = 0; v < n; ++v) identity[v] = v;
        CHECK(*kn == identity);
    }

    CHECK_FALSE(umbrella_ordering(claw()).has_value());
    CHECK_FALSE(umbrella_ordering(cycle(4)).has_value());
    CHECK_FALSE(umbrella_ordering(cycle(5)).has_value());

    for (int n = 2; n <= 40; ++n) {
        auto ord = umbrella_ordering(path(n));
        REQUIRE(ord.has_value());
        CHECK(is_umbrella_ordering(path(n), *ord));
    }
}

TEST_CASE("build_bubble_model on the standard fixtures") {
    // The path on three vertices gets the two-column model.
    auto p3 = build_bubble_model(path(3));
    REQUIRE(p3.has_value());
    CHECK(p3->columns ==
          std::vector<std::vector<std::vector<int>>>{{{0}, {1}}, {{2}}});

    // Complete graphs collapse to one bubble.
    auto k5 = build_bubble_model(complete(5));
    REQUIRE(k5.has_value());
    CHECK(k5->k() == 1);
    CHECK(k5->rows(0) == 1);
    CHECK(k5->bubble_size(0, 0) == 5);

    CHECK_FALSE(build_bubble_model(claw()).has_value());
    CHECK_FALSE(build_bubble_model(cycle(4)).has_value());
    CHECK_FALSE(build_bubble_model(cycle(5)).has_value());

    auto empty = build_bubble_model(Graph(0));
    REQUIRE(empty.has_value());
    CHECK(empty->n == 0);
    CHECK(empty->k() == 0);
}

TEST_CASE("build_bubble_model handles attachment chains") {
    // A triangle with a pendant on each side of the ordering forces bubbles
    // to reserve rows for their subtrees across three columns.
    Graph g(5);
    g.add_edge(0, 1);  // A-B
    g.add_edge(1, 2);  // B-P
    g.add_edge(1, 3);  // B-T
    g.add_edge(2, 3);  // P-T
    g.add_edge(3, 4);  // T-X
    auto m = build_bubble_model(g);
    REQUIRE(m.has_value());
    CHECK_FALSE(validate_model(*m, g).has_value());
    CHECK(m->k() == 3);
}

TEST_CASE("build_bubble_model handles disconnected graphs") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    auto m = build_bubble_model(g);
    REQUIRE(m.has_value());
    CHECK_FALSE(validate_model(*m, g).has_value());

    // All-isolated graph.
    auto iso = build_bubble_model(Graph(3));
    REQUIRE(iso.has_value());
    CHECK_FALSE(validate_model(*iso, Graph(3)).has_value());
}

TEST_CASE("recognition agrees with the exhaustive oracle on small graphs") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        double p = 0.15 + 0.1 * static_cast<double>(seed % 8);
        Graph g = random_graph(n, seed * 31 + 7, p);
        bool built = build_bubble_model(g).has_value();
        bool oracle = exhaustive_proper_interval_check(g);
        CAPTURE(seed);
        CHECK(built == oracle);
    }
}

TEST_CASE("every realized random model is recognized and round-trips") {
    for (uint64_t seed = 300; seed < 380; ++seed) {
        BubbleModel m = random_model(1 + static_cast<int>(seed % 12), seed);
        Graph g = realize_graph(m);
        auto back = build_bubble_model(g);
        CAPTURE(seed);
        REQUIRE(back.has_value());
        CHECK_FALSE(validate_model(*back, g).has_value());
    }
}

TEST_CASE("bubbles of a built model hold pairwise twins") {
    for (uint64_t seed = 400; seed < 430; ++seed) {
        BubbleModel m = random_model(1 + static_cast<int>(seed % 10), seed);
        Graph g = realize_graph(m);
        auto built = build_bubble_model(g);
        REQUIRE(built.has_value());
        for (const auto& col : built->columns) {
            for (const auto& bubble : col) {
                for (size_t a = 0; a < bubble.size(); ++a) {
                    for (size_t b = a + 1; b < bubble.size(); ++b) {
                        int u = bubble[a], v = bubble[b];
                        for (int w = 0; w < g.n(); ++w) {
                            if (w == u || w == v) continue;
                            CHECK(g.adjacent(u, w) == g.adjacent(v, w));
                        }
                    }
                }
            }
        }
    }
}
