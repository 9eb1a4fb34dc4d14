#pragma once

// Oracles and generators for verification. Every oracle here is a naive
// search sharing no code path with the solvers it checks.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <stdexcept>
#include <vector>

#include "p5ed/graph.hpp"
#include "p5ed/mdtree.hpp"

namespace p5ed::testkit {

// Thrown when an oracle is asked to run beyond its size guard.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kWedOracleMaxN = 24;
inline constexpr std::size_t kP5OracleMaxN = 64;
inline constexpr std::size_t kCatalogMaxN = 9;

// Exact minimum-weight e.d. by backtracking exact cover over closed
// neighborhoods; ties go to the lexicographically smallest vertex set.
EdOutcome brute_force_wed(const Graph& g, const VertexWeights& w);

// Every e.d. of g, each ascending, in lexicographic order.
std::vector<std::vector<Vertex>> enumerate_eds(const Graph& g);

// Some induced P5 as an ordered path, found by extending chordless paths
// from each start vertex in id order.
std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph& g);

inline bool is_p5_free(const Graph& g) { return !find_induced_p5(g).has_value(); }

// Homogeneous-set definition check (any size, including V and singletons).
bool is_module(const Graph& g, std::span<const Vertex> s);

// Every module with 2 <= |M| <= n, as bitmasks over vertex ids (n <= 16).
std::vector<std::uint32_t> all_modules(const Graph& g);

// Clique {0..k-1}, independent {k..2k-1}, pairing i <-> k+i.
Graph gen_thin_spider(std::size_t k);

// Dominators 0 and 1; cliques A = {2..2+a-1} on 0 and B = {2+a..2+a+b-1}
// on 1; `cross` lists (i, j) edges between A[i] and B[j]. The pair {0, 1} is
// an e.d. whenever every clique vertex has a cross edge.
Graph gen_two_clique(std::size_t a, std::size_t b, std::span<const std::pair<std::size_t, std::size_t>> cross);

// gen_two_clique with a = b = s and the perfect matching A[i] - B[i].
Graph gen_clique_ladder(std::size_t s);

// Clique ladder on 2q+2 vertices with every vertex replaced by K_t: a
// non-prime P5-free graph whose e.d. needs the prime quotient solver.
Graph gen_substituted_ladder(std::size_t q, std::size_t t);

// Replaces quotient vertex i by parts[i], fully joining parts whose
// quotient vertices are adjacent. Part i occupies a contiguous id block.
Graph substitute(const Graph& quotient, std::span<const Graph> parts);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// Isomorphism-invariant code (n <= 11) via individualization-refinement.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class on 1..n_max vertices, ordered by
// vertex count. Built by one-vertex extensions with canonical-code
// deduplication.
void for_each_catalog_graph(std::size_t n_max, const std::function<void(const Graph&)>& visit);
std::vector<Graph> catalog(std::size_t n_max);

// Random P5-free graph: starting from K1, vertices are repeatedly replaced
// by small P5-free graphs until at least `min_n` vertices (never more than
// `max_n`).
Graph random_substituted(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n);

VertexWeights random_weights(std::mt19937_64& rng, std::size_t n, Weight max_weight);

Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Checks a decomposition against definitions: leaves biject with V, node
// sets are modules split exactly as their kind says (components, complement
// components, or a prime quotient), and for each vertex pair the smallest
// module containing both is what the tree predicts. With `all_modules_check`
// (n <= 16) every module must also be a node or a union of children of a
// parallel/series node. Returns a description of the first violation.
std::optional<std::string> check_md_tree(const Graph& g, const MDTree& tree, bool all_modules_check);

// Node vertex sets and kinds of decompose(g) and decompose(complement(g))
// coincide with parallel and series swapped.
std::optional<std::string> check_complement_duality(const Graph& g);

// Cells R_i = N(d_i) \ D for an e.d. D.
struct DominationPartition {
    std::vector<Vertex> dominators;
    std::vector<std::vector<Vertex>> cells;
};

DominationPartition domination_partition(const Graph& g, std::span<const Vertex> d);

// Structure every e.d. D of a prime P5-free graph must have: each cell R_i
// is a clique; every two cells are joined by an edge; for x, y, z in three
// distinct cells, xy missing forces zx or zy missing; every cell vertex has
// a neighbor in another cell. Unless the graph is a thin spider, also
// |D| = 2 and the minimum degree is attained by both members of D and
// nobody else, or by exactly one member of D alone. Returns the first
// violated property.
std::optional<std::string> check_ed_structure(const Graph& g, std::span<const Vertex> d, bool thin_spider);

}  // namespace p5ed::testkit
