#pragma once

#include <optional>
#include <vector>

#include "p5ed/graph.hpp"

namespace p5ed {

// Thin spider: clique C and independent set I of equal size k >= 2 where
// pairing[i] in I is the unique I-neighbor of clique[i] and has no other
// neighbor.
struct ThinSpiderCert {
    std::vector<Vertex> clique;       // ascending
    std::vector<Vertex> independent;  // ascending
    std::vector<Vertex> pairing;      // pairing[i] matches clique[i]
};

// I := degree-1 vertices, C := the rest; accept iff |C| = |I| >= 2, C is a
// clique and every I vertex hangs off a distinct C vertex. O(n + m).
std::optional<ThinSpiderCert> recognize_thin_spider(const Graph& g);

// The independent side is the only e.d. of a thin spider.
EdOutcome thin_spider_ed(const ThinSpiderCert& cert, const VertexWeights& w);

}  // namespace p5ed
