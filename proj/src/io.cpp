#include "p5ed/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace p5ed {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

// Splits on spaces/tabs and parses every token as an unsigned integer.
std::vector<std::uint64_t> parse_fields(std::string_view text, std::size_t line) {
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc{} || ptr != text.data() + j) {
            fail(line, "expected a non-negative integer, got '" + std::string(text.substr(i, j - i)) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string text;
    std::size_t line = 0;
    std::vector<std::uint64_t> header;
    while (header.empty()) {
        if (!std::getline(in, text)) fail(line + 1, "missing header \"n m\"");
        header = parse_fields(text, ++line);
    }
    if (header.size() != 2) fail(line, "header must be \"n m\"");
    const std::uint64_t n = header[0];
    const std::uint64_t m = header[1];
    if (n > std::numeric_limits<Vertex>::max()) fail(line, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(m);
    while (std::getline(in, text)) {
        auto fields = parse_fields(text, ++line);
        if (fields.empty()) continue;
        if (fields.size() != 2) fail(line, "edge line must be \"u v\"");
        if (edges.size() == m) fail(line, "more edges than announced in header");
        if (fields[0] >= n || fields[1] >= n) fail(line, "vertex id out of range");
        edges.emplace_back(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]));
    }
    if (edges.size() != m) {
        throw std::runtime_error("expected " + std::to_string(m) + " edges, read " + std::to_string(edges.size()));
    }
    try {
        return Graph::build(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

VertexWeights read_weights(std::istream& in, std::size_t n) {
    std::vector<Weight> weights;
    weights.reserve(n);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        auto fields = parse_fields(text, ++line);
        if (fields.empty()) continue;
        if (fields.size() != 1) fail(line, "expected one weight per line");
        weights.push_back(fields[0]);
    }
    if (weights.size() != n) {
        throw std::runtime_error("expected " + std::to_string(n) + " weights, read " + std::to_string(weights.size()));
    }
    return VertexWeights(std::move(weights));
}

VertexWeights read_weights_file(const std::string& path, std::size_t n) {
    auto in = open(path);
    return read_weights(in, n);
}

}  // namespace p5ed
