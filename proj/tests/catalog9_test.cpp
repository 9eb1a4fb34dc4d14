#include <random>

#include "doctest.h"
#include "p5ed/mdtree.hpp"
#include "p5ed/prime_ed.hpp"
#include "p5ed/testkit.hpp"
#include "p5ed/wed.hpp"

using namespace p5ed;
using namespace p5ed::testkit;

TEST_CASE("nine-vertex catalog: uniqueness, exactness and soundness") {
    std::mt19937_64 rng(97);
    std::size_t graphs = 0, p5_free = 0, prime_with_ed = 0;
    for_each_catalog_graph(9, [&](const Graph& g) {
        if (g.n() != 9) return;
        ++graphs;
        const VertexWeights w = random_weights(rng, g.n(), 9);
        const EdOutcome ours = solve(g, w);
        if (ours.is_found()) REQUIRE(is_ed(g, ours.vertices));
        if (!is_p5_free(g)) return;
        ++p5_free;
        const EdOutcome oracle = brute_force_wed(g, w);
        REQUIRE(ours.is_found() == oracle.is_found());
        if (!oracle.is_found()) return;
        REQUIRE(ours.total_weight == oracle.total_weight);
        if (!is_prime(g)) return;
        ++prime_with_ed;
        const auto eds = enumerate_eds(g);
        REQUIRE(eds.size() == 1);
        CHECK(ours.vertices == eds.front());
    });
    CHECK(graphs == 274668);
    MESSAGE("P5-free: " << p5_free << ", prime with an e.d.: " << prime_with_ed);
}
