#include "doctest.h"
#include "p5ed/mdtree.hpp"
#include "p5ed/spider.hpp"
#include "p5ed/testkit.hpp"

using namespace p5ed;
using namespace p5ed::testkit;

TEST_CASE("recognize P4 as the k=2 thin spider") {
    const auto cert = recognize_thin_spider(path_graph(4));
    REQUIRE(cert.has_value());
    CHECK(cert->clique == std::vector<Vertex>{1, 2});
    CHECK(cert->independent == std::vector<Vertex>{0, 3});
    CHECK(cert->pairing == std::vector<Vertex>{0, 3});
}

TEST_CASE("non-spiders") {
    CHECK_FALSE(recognize_thin_spider(cycle_graph(5)).has_value());
    const Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(recognize_thin_spider(star).has_value());
    // K2: both vertices have degree one.
    CHECK_FALSE(recognize_thin_spider(complete_graph(2)).has_value());
    // 2K2 plus nothing else: four degree-one vertices, no clique side.
    CHECK_FALSE(recognize_thin_spider(Graph::build(4, {{0, 1}, {2, 3}})).has_value());
    // Two pendants on one clique vertex.
    const Graph doubled = Graph::build(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}});
    CHECK_FALSE(recognize_thin_spider(doubled).has_value());
    // Pendants on a non-clique core: C4 with one pendant each.
    const Graph sun = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK_FALSE(recognize_thin_spider(sun).has_value());
}

TEST_CASE("generated spiders: certificate invariants and unique e.d.") {
    for (std::size_t k = 2; k <= 12; ++k) {
        const Graph g = gen_thin_spider(k);
        const auto cert = recognize_thin_spider(g);
        REQUIRE(cert.has_value());
        CHECK(cert->clique.size() == k);
        CHECK(cert->independent.size() == k);
        CHECK(is_clique(g, cert->clique));
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(g.adjacent(cert->clique[i], cert->pairing[i]));
            CHECK(g.degree(cert->pairing[i]) == 1);
        }
        const EdOutcome ed = thin_spider_ed(*cert, VertexWeights::unit(g.n()));
        CHECK(ed.vertices == cert->independent);
        CHECK(is_ed(g, ed.vertices));
        if (k <= 5) CHECK(enumerate_eds(g) == std::vector<std::vector<Vertex>>{cert->independent});
    }
}

TEST_CASE("thin_spider_ed weights") {
    const auto p4 = recognize_thin_spider(path_graph(4));
    REQUIRE(p4.has_value());
    const EdOutcome unit = thin_spider_ed(*p4, VertexWeights::unit(4));
    CHECK(unit.vertices == std::vector<Vertex>{0, 3});
    CHECK(unit.total_weight == 2);
    const EdOutcome weighted = thin_spider_ed(*p4, VertexWeights(std::vector<Weight>{5, 1, 1, 7}));
    CHECK(weighted.vertices == std::vector<Vertex>{0, 3});
    CHECK(weighted.total_weight == 12);

    const Graph k3 = gen_thin_spider(3);
    const auto cert = recognize_thin_spider(k3);
    REQUIRE(cert.has_value());
    const EdOutcome out = thin_spider_ed(*cert, VertexWeights(std::vector<Weight>{40, 50, 60, 1, 2, 3}));
    CHECK(out.vertices == std::vector<Vertex>{3, 4, 5});
    CHECK(out.total_weight == 6);
    CHECK(brute_force_wed(k3, VertexWeights(std::vector<Weight>{40, 50, 60, 1, 2, 3})) == out);
}

TEST_CASE("prime 2P2-free catalog graphs have an e.d. iff they are thin spiders") {
    std::size_t checked = 0;
    for_each_catalog_graph(8, [&](const Graph& g) {
        if (g.n() < 4 || !is_prime(g)) return;
        // 2K2-free: no two disjoint edges with no edges between them.
        bool two_p2_free = true;
        const auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size() && two_p2_free; ++i) {
            for (std::size_t j = i + 1; j < edges.size() && two_p2_free; ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                if (a == c || a == d || b == c || b == d) continue;
                two_p2_free = g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
            }
        }
        if (!two_p2_free) return;
        ++checked;
        CHECK(enumerate_eds(g).empty() != recognize_thin_spider(g).has_value());
    });
    CHECK(checked > 0);
}

TEST_CASE("no thin spider has minimum degree two or more") {
    for_each_catalog_graph(7, [](const Graph& g) {
        if (g.n() == 0) return;
        if (g.degree(*min_degree_vertex(g)) >= 2) CHECK_FALSE(recognize_thin_spider(g).has_value());
    });
}
