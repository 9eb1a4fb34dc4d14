#pragma once

#include <optional>

#include "p5ed/graph.hpp"
#include "p5ed/mdtree.hpp"

namespace p5ed {

struct UniversalChoice {
    Vertex vertex;
    Weight weight;

    friend bool operator==(const UniversalChoice&, const UniversalChoice&) = default;
};

// Minimum-weight vertex adjacent to every other vertex of the node's vertex
// set (smallest id on ties), or nothing when the node has no such vertex.
std::optional<UniversalChoice> min_universal(const MDTree& tree, NodeId node, const VertexWeights& w);

// Minimum-weight e.d. through the modular decomposition. An e.d. meets a
// module with outside neighbors in at most one vertex, which then dominates
// the whole module, so each child module of a prime node contributes its
// lightest universal vertex or nothing. Same three-valued contract as
// solve_prime: `found` is always a verified e.d., `none_exists` is exact,
// and on P5-free inputs the answer is exact with minimum weight.
EdOutcome solve(const Graph& g, const VertexWeights& w);
EdOutcome solve(const Graph& g, const MDTree& tree, const VertexWeights& w);

}  // namespace p5ed
