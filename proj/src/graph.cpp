#include "p5ed/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace p5ed {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v) + " with n=" + std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adjacency_.resize(g.offsets_[n]);

    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - (n > 0 ? 1 : 0));
    for (auto [u, v] : edges) {
        g.adjacency_[fill[u]++] = v;
        g.adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            throw std::invalid_argument("duplicate edge " + std::to_string(v) + " " + std::to_string(*dup));
        }
    }
    if (n == 0) g.offsets_.clear();
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m());
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void VertexWeights::check_matches(const Graph& g) const {
    if (weights_.size() != g.n()) {
        throw std::invalid_argument("weight count " + std::to_string(weights_.size()) +
                                    " does not match vertex count " + std::to_string(g.n()));
    }
}

EdOutcome EdOutcome::found(std::vector<Vertex> vertices, const VertexWeights& w) {
    std::sort(vertices.begin(), vertices.end());
    Weight total = 0;
    for (Vertex v : vertices) total += w[v];
    return {EdStatus::found, std::move(vertices), total};
}

const char* to_string(EdStatus status) {
    switch (status) {
        case EdStatus::found: return "found";
        case EdStatus::none_exists: return "none_exists";
        case EdStatus::not_p5_free_or_no_ed: return "not_p5_free_or_no_ed";
    }
    return "?";
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    if (s.size() <= 1) return true;
    std::vector<char> in_set(g.n(), 0);
    for (Vertex v : s) {
        if (in_set[v]) return false;  // repeated vertex: not a set
        in_set[v] = 1;
    }
    const std::size_t need = s.size() - 1;
    for (Vertex u : s) {
        if (g.degree(u) < need) return false;
        std::size_t seen = 0;
        for (Vertex x : g.neighbors(u)) seen += in_set[x];
        if (seen != need) return false;
    }
    return true;
}

bool is_ed(const Graph& g, std::span<const Vertex> d) {
    std::vector<std::uint32_t> hits(g.n(), 0);
    for (Vertex u : d) {
        if (u >= g.n()) return false;
        ++hits[u];
        for (Vertex x : g.neighbors(u)) ++hits[x];
    }
    return std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h == 1; });
}

std::optional<Vertex> min_degree_vertex(const Graph& g, std::span<const Vertex> excluded) {
    std::vector<char> skip(g.n(), 0);
    for (Vertex v : excluded) skip[v] = 1;
    std::optional<Vertex> best;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (skip[v]) continue;
        if (!best || g.degree(v) < g.degree(*best)) best = v;
    }
    return best;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> out(nb.begin(), nb.end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> local(g.n(), absent);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (local[s[i]] != absent) throw std::invalid_argument("induced_subgraph: repeated vertex");
        local[s[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (Vertex x : g.neighbors(s[i])) {
            Vertex j = local[x];
            if (j != absent && i < j) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    return {Graph::build(s.size(), edges), std::vector<Vertex>(s.begin(), s.end())};
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    std::vector<char> adj(g.n(), 0);
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex x : g.neighbors(u)) adj[x] = 1;
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (!adj[v]) edges.emplace_back(u, v);
        }
        for (Vertex x : g.neighbors(u)) adj[x] = 0;
    }
    return Graph::build(g.n(), edges);
}

}  // namespace p5ed
