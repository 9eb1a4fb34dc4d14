#pragma once

#include <iosfwd>
#include <vector>

#include "p5ed/graph.hpp"

namespace p5ed {

enum class NodeKind { leaf, parallel, series, prime };

const char* to_string(NodeKind kind);

using NodeId = std::uint32_t;

struct MDNode {
    NodeKind kind = NodeKind::leaf;
    std::vector<NodeId> children;  // ordered by smallest contained vertex
    Vertex leaf_vertex = 0;        // leaf only
    std::vector<Vertex> vertices;  // ascending vertex set of the node
    Graph quotient;                // prime only; vertex i stands for children[i]
};

// Modular decomposition tree. Children are allocated after their parent, so
// iterating node ids in reverse visits every child before its parent.
class MDTree {
public:
    const MDNode& node(NodeId id) const { return nodes_[id]; }
    const MDNode& root_node() const { return nodes_[root()]; }
    NodeId root() const { return 0; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<MDNode>& nodes() const { return nodes_; }

    // Leaf node holding v.
    NodeId leaf_of(Vertex v) const { return leaf_of_[v]; }

private:
    friend MDTree decompose(const Graph& g);
    std::vector<MDNode> nodes_;
    std::vector<NodeId> leaf_of_;
};

// Builds the tree by recursion on parallel / series / prime splits. A prime
// node's children (its maximal strong modules) come from partition
// refinement around a minimum-degree pivot followed by a forcing-graph
// search for the module that contains the pivot; each prime level costs
// O((n + m) log n). Throws std::invalid_argument for n = 0.
MDTree decompose(const Graph& g);

// True iff g has no homogeneous set; false for every graph with n <= 3.
bool is_prime(const Graph& g);

// Closure of {u, v} under adding any outside vertex that sees some but not
// all of the current set: the inclusion-minimal module containing u and v.
std::vector<Vertex> smallest_module_containing(const Graph& g, Vertex u, Vertex v);

// Maximal modules of g not containing `pivot`, each ascending, listed by
// smallest vertex.
std::vector<std::vector<Vertex>> maximal_modules_avoiding(const Graph& g, Vertex pivot);

// Indented "kind {vertices}" listing, one node per line.
void dump(std::ostream& out, const MDTree& tree);

}  // namespace p5ed
