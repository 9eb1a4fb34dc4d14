#pragma once

#include "p5ed/graph.hpp"

namespace p5ed {

// Which step settled the answer. A thin-spider answer is exact for any
// input; the two-vertex branch is exact only on prime P5-free graphs.
enum class PrimeEdStep { too_small, thin_spider, neighborhood_not_clique, no_second_vertex, two_vertex_check };

struct PrimeEdResult {
    EdOutcome outcome;
    PrimeEdStep step;
};

// Weakly robust e.d. search for prime graphs. On a prime P5-free graph the
// result is exact and a found set is the unique e.d.; on any other input a
// `found` set is still a verified e.d. and every other answer means "not
// P5-free or no e.d.". Runs in O(n + m).
PrimeEdResult solve_prime_detailed(const Graph& g, const VertexWeights& w);

inline EdOutcome solve_prime(const Graph& g, const VertexWeights& w) {
    return solve_prime_detailed(g, w).outcome;
}

}  // namespace p5ed
