#include <random>
#include <sstream>

#include "doctest.h"
#include "p5ed/mdtree.hpp"
#include "p5ed/testkit.hpp"

using namespace p5ed;
using namespace p5ed::testkit;

namespace {

// P4 0-1-2-3 plus vertex 4 adjacent to all of it.
Graph gem() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }

std::vector<std::vector<Vertex>> child_sets(const MDTree& t, NodeId id) {
    std::vector<std::vector<Vertex>> out;
    for (NodeId c : t.node(id).children) out.push_back(t.node(c).vertices);
    return out;
}

}  // namespace

TEST_CASE("decompose P4: one prime node over four leaves") {
    const MDTree t = decompose(path_graph(4));
    const MDNode& root = t.root_node();
    CHECK(root.kind == NodeKind::prime);
    CHECK(child_sets(t, t.root()) == std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}});
    CHECK(root.quotient == path_graph(4));
}

TEST_CASE("decompose K3 and 2K2") {
    const MDTree k3 = decompose(complete_graph(3));
    CHECK(k3.root_node().kind == NodeKind::series);
    CHECK(k3.root_node().children.size() == 3);

    const Graph two_k2 = Graph::build(4, {{0, 1}, {2, 3}});
    const MDTree t = decompose(two_k2);
    CHECK(t.root_node().kind == NodeKind::parallel);
    REQUIRE(t.root_node().children.size() == 2);
    for (NodeId c : t.root_node().children) CHECK(t.node(c).kind == NodeKind::series);
    CHECK(child_sets(t, t.root()) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
    // The closure oracle agrees that each K2 is a module.
    CHECK(smallest_module_containing(two_k2, 0, 1) == std::vector<Vertex>{0, 1});
    CHECK(smallest_module_containing(two_k2, 2, 3) == std::vector<Vertex>{2, 3});
}

TEST_CASE("single vertex is a lone leaf") {
    const MDTree t = decompose(empty_graph(1));
    CHECK(t.size() == 1);
    CHECK(t.root_node().kind == NodeKind::leaf);
    CHECK(t.root_node().leaf_vertex == 0);
    CHECK_THROWS_AS(decompose(Graph{}), std::invalid_argument);
}

TEST_CASE("is_prime") {
    CHECK(is_prime(path_graph(4)));
    CHECK_FALSE(is_prime(gem()));
    CHECK(smallest_module_containing(gem(), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
    for_each_catalog_graph(3, [](const Graph& g) { CHECK_FALSE(is_prime(g)); });
    CHECK(is_prime(cycle_graph(5)));
    CHECK(is_prime(gen_clique_ladder(2)));
    CHECK(is_prime(gen_thin_spider(6)));
}

TEST_CASE("is_prime agrees with the closure oracle on the catalog") {
    for_each_catalog_graph(7, [](const Graph& g) {
        bool prime = g.n() >= 4;
        for (Vertex u = 0; u < g.n() && prime; ++u) {
            for (Vertex v = u + 1; v < g.n() && prime; ++v) prime = smallest_module_containing(g, u, v).size() == g.n();
        }
        REQUIRE(is_prime(g) == prime);
    });
}

TEST_CASE("smallest_module_containing examples") {
    CHECK(smallest_module_containing(path_graph(4), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(smallest_module_containing(complete_graph(2), 0, 1) == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(smallest_module_containing(path_graph(4), 2, 2), std::invalid_argument);
}

TEST_CASE("maximal modules avoiding a pivot") {
    // Pivot 4 in the gem: the P4 itself is the only maximal module avoiding it.
    CHECK(maximal_modules_avoiding(gem(), 4) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}});
    CHECK(maximal_modules_avoiding(path_graph(4), 0) == std::vector<std::vector<Vertex>>{{1}, {2}, {3}});
    // Spider pendant as pivot: its clique vertex, the rest of the clique, and
    // each remaining pendant.
    CHECK(maximal_modules_avoiding(gen_thin_spider(3), 3) ==
          std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {4}, {5}});
}

TEST_CASE("maximal modules avoiding a pivot are modules and maximal") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_substituted(rng, 4, 14);
        const auto pivot = static_cast<Vertex>(rng() % g.n());
        const auto parts = maximal_modules_avoiding(g, pivot);
        std::size_t covered = 0;
        for (const auto& p : parts) {
            CHECK(is_module(g, p));
            covered += p.size();
        }
        CHECK(covered + 1 == g.n());
        // Any module avoiding the pivot lies inside one part.
        for (std::uint32_t mask : all_modules(g)) {
            if (mask >> pivot & 1) continue;
            bool inside_one = false;
            for (const auto& p : parts) {
                std::uint32_t pm = 0;
                for (Vertex x : p) pm |= 1u << x;
                inside_one = inside_one || (mask & ~pm) == 0;
            }
            CHECK(inside_one);
        }
    }
}

TEST_CASE("decomposition invariants over the catalog") {
    for_each_catalog_graph(7, [](const Graph& g) {
        const MDTree t = decompose(g);
        const auto violation = check_md_tree(g, t, true);
        INFO(violation.value_or(""));
        REQUIRE_FALSE(violation.has_value());
        REQUIRE_FALSE(check_complement_duality(g).has_value());
    });
}

TEST_CASE("decomposition invariants on random substituted and random graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_substituted(rng, 8, 40);
        const auto violation = check_md_tree(g, decompose(g), false);
        INFO(violation.value_or(""));
        REQUIRE_FALSE(violation.has_value());
        REQUIRE_FALSE(check_complement_duality(g).has_value());
    }
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 30;
        const double p = 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0;
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(p);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        const Graph g = Graph::build(n, edges);
        const auto violation = check_md_tree(g, decompose(g), false);
        INFO(violation.value_or(""));
        REQUIRE_FALSE(violation.has_value());
    }
}

TEST_CASE("prime quotients are prime") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_substituted(rng, 10, 50);
        const MDTree t = decompose(g);
        for (const MDNode& node : t.nodes()) {
            if (node.kind == NodeKind::prime) CHECK(is_prime(node.quotient));
        }
    }
}

TEST_CASE("substituted ladder: prime root over clique modules") {
    const Graph g = gen_substituted_ladder(3, 4);
    const MDTree t = decompose(g);
    CHECK(t.root_node().kind == NodeKind::prime);
    CHECK(t.root_node().children.size() == 8);
    for (NodeId c : t.root_node().children) CHECK(t.node(c).kind == NodeKind::series);
    CHECK(t.root_node().quotient == gen_clique_ladder(3));
}

TEST_CASE("dump") {
    std::ostringstream out;
    dump(out, decompose(Graph::build(3, {{0, 1}})));
    CHECK(out.str() == "parallel {0 1 2}\n  series {0 1}\n    leaf {0}\n    leaf {1}\n  leaf {2}\n");
}
