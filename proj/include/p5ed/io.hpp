#pragma once

#include <iosfwd>
#include <string>

#include "p5ed/graph.hpp"

namespace p5ed {

// Edge-list text: a header line "n m" followed by m lines "u v" of 0-based
// ids. Malformed input throws std::runtime_error naming the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// One non-negative integer per line; line i is the weight of vertex i.
VertexWeights read_weights(std::istream& in, std::size_t n);
VertexWeights read_weights_file(const std::string& path, std::size_t n);

}  // namespace p5ed
