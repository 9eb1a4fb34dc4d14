#include "p5ed/spider.hpp"

namespace p5ed {

std::optional<ThinSpiderCert> recognize_thin_spider(const Graph& g) {
    ThinSpiderCert cert;
    for (Vertex v = 0; v < g.n(); ++v) {
        (g.degree(v) == 1 ? cert.independent : cert.clique).push_back(v);
    }
    const std::size_t k = cert.clique.size();
    if (k < 2 || cert.independent.size() != k) return std::nullopt;
    if (!is_clique(g, cert.clique)) return std::nullopt;

    constexpr Vertex unmatched = ~Vertex{0};
    std::vector<Vertex> partner(g.n(), unmatched);
    for (Vertex s : cert.independent) {
        const Vertex c = g.neighbors(s).front();
        // A degree-1 neighbor means an isolated edge, never a clique vertex.
        if (g.degree(c) == 1 || partner[c] != unmatched) return std::nullopt;
        partner[c] = s;
    }
    // k distinct clique vertices are hit, so the map is onto C.
    cert.pairing.reserve(k);
    for (Vertex c : cert.clique) cert.pairing.push_back(partner[c]);
    return cert;
}

EdOutcome thin_spider_ed(const ThinSpiderCert& cert, const VertexWeights& w) {
    return EdOutcome::found(cert.independent, w);
}

}  // namespace p5ed
