#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace p5ed {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
// strictly ascending neighbor lists.
class Graph {
public:
    Graph() = default;

    // Rejects self-loops, duplicate edges (in either orientation) and
    // out-of-range endpoints with std::invalid_argument.
    static Graph build(std::size_t n, std::span<const Edge> edges);
    static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t m() const { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    // Binary search on the sorted adjacency of the lower-degree endpoint.
    bool adjacent(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

// Non-negative integer vertex weights; length is tied to a graph's n.
class VertexWeights {
public:
    VertexWeights() = default;
    explicit VertexWeights(std::vector<Weight> weights) : weights_(std::move(weights)) {}

    static VertexWeights unit(std::size_t n) { return VertexWeights(std::vector<Weight>(n, 1)); }

    std::size_t size() const { return weights_.size(); }
    Weight operator[](Vertex v) const { return weights_[v]; }
    std::span<const Weight> values() const { return weights_; }

    // Throws std::invalid_argument when size() != g.n().
    void check_matches(const Graph& g) const;

private:
    std::vector<Weight> weights_;
};

enum class EdStatus { found, none_exists, not_p5_free_or_no_ed };

// Three-valued weakly robust answer. `vertices` is ascending and non-empty
// only for `found`; `total_weight` is the weight sum over `vertices`.
struct EdOutcome {
    EdStatus status = EdStatus::none_exists;
    std::vector<Vertex> vertices;
    Weight total_weight = 0;

    static EdOutcome found(std::vector<Vertex> vertices, const VertexWeights& w);
    static EdOutcome none_exists() { return {EdStatus::none_exists, {}, 0}; }
    static EdOutcome not_p5_free_or_no_ed() { return {EdStatus::not_p5_free_or_no_ed, {}, 0}; }

    bool is_found() const { return status == EdStatus::found; }

    friend bool operator==(const EdOutcome&, const EdOutcome&) = default;
};

const char* to_string(EdStatus status);

// True iff every pair of vertices in s is adjacent. Marks s and counts marked
// neighbors per member, so the cost is O(n + sum of degrees over s).
bool is_clique(const Graph& g, std::span<const Vertex> s);

// True iff every vertex has exactly one member of d in its closed
// neighborhood. Duplicate members of d make it fail.
bool is_ed(const Graph& g, std::span<const Vertex> d);

// Minimum-degree vertex outside `excluded`, smallest id on ties.
std::optional<Vertex> min_degree_vertex(const Graph& g, std::span<const Vertex> excluded = {});

// Closed neighborhood N[v] in ascending order.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new id -> old id
};

// Subgraph induced by s. New ids follow the order of s; s must be non-empty
// and duplicate-free (std::invalid_argument otherwise).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

Graph complement(const Graph& g);

}  // namespace p5ed
