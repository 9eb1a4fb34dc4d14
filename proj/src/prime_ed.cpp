#include "p5ed/prime_ed.hpp"

#include <array>

#include "p5ed/spider.hpp"

namespace p5ed {

PrimeEdResult solve_prime_detailed(const Graph& g, const VertexWeights& w) {
    w.check_matches(g);
    auto unknown = [](PrimeEdStep step) { return PrimeEdResult{EdOutcome::not_p5_free_or_no_ed(), step}; };

    // No prime graph has fewer than four vertices.
    if (g.n() < 4) return unknown(PrimeEdStep::too_small);

    if (auto cert = recognize_thin_spider(g)) {
        EdOutcome spider = thin_spider_ed(*cert, w);
        if (is_ed(g, spider.vertices)) return {std::move(spider), PrimeEdStep::thin_spider};
    }

    const Vertex d = *min_degree_vertex(g);
    if (!is_clique(g, g.neighbors(d))) return unknown(PrimeEdStep::neighborhood_not_clique);

    const auto d2 = min_degree_vertex(g, closed_neighborhood(g, d));
    if (!d2) return unknown(PrimeEdStep::no_second_vertex);
    if (!is_clique(g, g.neighbors(*d2))) return unknown(PrimeEdStep::neighborhood_not_clique);

    const std::array<Vertex, 2> pair{d, *d2};
    if (is_ed(g, pair)) return {EdOutcome::found({d, *d2}, w), PrimeEdStep::two_vertex_check};
    return unknown(PrimeEdStep::two_vertex_check);
}

}  // namespace p5ed
