#include <algorithm>
#include <numeric>

#include "p5ed/testkit.hpp"

namespace p5ed::testkit {

Graph gen_thin_spider(std::size_t k) {
    if (k < 2) throw std::invalid_argument("thin spider needs k >= 2");
    std::vector<Edge> edges;
    edges.reserve(k * (k - 1) / 2 + k);
    for (Vertex i = 0; i < k; ++i) {
        for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
        edges.emplace_back(i, static_cast<Vertex>(k + i));
    }
    return Graph::build(2 * k, edges);
}

Graph gen_two_clique(std::size_t a, std::size_t b, std::span<const std::pair<std::size_t, std::size_t>> cross) {
    const auto first_a = Vertex{2};
    const auto first_b = static_cast<Vertex>(2 + a);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i) {
        edges.emplace_back(0, first_a + i);
        for (Vertex j = i + 1; j < a; ++j) edges.emplace_back(first_a + i, first_a + j);
    }
    for (Vertex i = 0; i < b; ++i) {
        edges.emplace_back(1, first_b + i);
        for (Vertex j = i + 1; j < b; ++j) edges.emplace_back(first_b + i, first_b + j);
    }
    for (auto [i, j] : cross) {
        if (i >= a || j >= b) throw std::invalid_argument("gen_two_clique: cross edge out of range");
        edges.emplace_back(first_a + static_cast<Vertex>(i), first_b + static_cast<Vertex>(j));
    }
    return Graph::build(2 + a + b, edges);
}

Graph gen_clique_ladder(std::size_t s) {
    std::vector<std::pair<std::size_t, std::size_t>> matching(s);
    for (std::size_t i = 0; i < s; ++i) matching[i] = {i, i};
    return gen_two_clique(s, s, matching);
}

Graph substitute(const Graph& quotient, std::span<const Graph> parts) {
    if (parts.size() != quotient.n()) {
        throw std::invalid_argument("substitute: " + std::to_string(parts.size()) + " parts for a quotient on " +
                                    std::to_string(quotient.n()) + " vertices");
    }
    std::vector<Vertex> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + static_cast<Vertex>(parts[i].n());

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto [u, v] : parts[i].edges()) edges.emplace_back(offset[i] + u, offset[i] + v);
    }
    for (auto [p, q] : quotient.edges()) {
        for (Vertex u = offset[p]; u < offset[p + 1]; ++u) {
            for (Vertex v = offset[q]; v < offset[q + 1]; ++v) edges.emplace_back(u, v);
        }
    }
    return Graph::build(offset.back(), edges);
}

Graph gen_substituted_ladder(std::size_t q, std::size_t t) {
    const Graph quotient = gen_clique_ladder(q);
    std::vector<Graph> parts(quotient.n(), complete_graph(t));
    return substitute(quotient, parts);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::build(n, std::span<const Edge>{}); }

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::build(n, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::build(g.n(), edges);
}

Graph random_substituted(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
    if (min_n == 0 || min_n > max_n) throw std::invalid_argument("random_substituted: bad size range");
    // Small P5-free building blocks, including the prime ones P4 and the
    // 6-vertex two-clique ladder.
    static const std::vector<Graph> blocks = [] {
        std::vector<Graph> out;
        for_each_catalog_graph(4, [&](const Graph& h) {
            if (h.n() >= 2) out.push_back(h);
        });
        out.push_back(gen_clique_ladder(2));
        out.push_back(gen_thin_spider(3));
        out.push_back(cycle_graph(5));
        return out;
    }();

    Graph g = empty_graph(1);
    while (g.n() < min_n) {
        std::vector<const Graph*> fitting;
        for (const Graph& b : blocks) {
            if (g.n() - 1 + b.n() <= max_n) fitting.push_back(&b);
        }
        if (fitting.empty()) break;
        const Graph& block = *fitting[std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng)];
        const auto target = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, g.n() - 1)(rng));

        std::vector<Graph> parts(g.n(), empty_graph(1));
        parts[target] = block;
        g = substitute(g, parts);
    }
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

VertexWeights random_weights(std::mt19937_64& rng, std::size_t n, Weight max_weight) {
    std::uniform_int_distribution<Weight> dist(0, max_weight);
    std::vector<Weight> w(n);
    for (auto& x : w) x = dist(rng);
    return VertexWeights(std::move(w));
}

}  // namespace p5ed::testkit
