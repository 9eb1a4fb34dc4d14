#include <algorithm>

#include "p5ed/testkit.hpp"

namespace p5ed::testkit {

std::optional<std::string> check_ed_structure(const Graph& g, std::span<const Vertex> d, bool thin_spider) {
    const DominationPartition part = domination_partition(g, d);
    const std::size_t k = part.cells.size();
    std::vector<std::size_t> cell_of(g.n(), k);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex x : part.cells[i]) cell_of[x] = i;
    }

    for (const auto& cell : part.cells) {
        for (std::size_t a = 0; a < cell.size(); ++a) {
            for (std::size_t b = a + 1; b < cell.size(); ++b) {
                if (!g.adjacent(cell[a], cell[b])) return std::string("cell is not a clique");
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool joined = false;
            for (Vertex x : part.cells[i]) {
                for (Vertex y : part.cells[j]) joined = joined || g.adjacent(x, y);
            }
            if (!joined) return std::string("two cells without an edge between them");
        }
    }
    for (Vertex x = 0; x < g.n(); ++x) {
        if (cell_of[x] == k) continue;
        for (Vertex y = x + 1; y < g.n(); ++y) {
            if (cell_of[y] == k || cell_of[y] == cell_of[x] || g.adjacent(x, y)) continue;
            for (Vertex z = 0; z < g.n(); ++z) {
                if (cell_of[z] == k || cell_of[z] == cell_of[x] || cell_of[z] == cell_of[y]) continue;
                if (g.adjacent(z, x) && g.adjacent(z, y)) {
                    return std::string("a third-cell vertex sees both ends of a cross non-edge");
                }
            }
        }
    }
    for (Vertex x = 0; x < g.n(); ++x) {
        if (cell_of[x] == k) continue;
        const auto nb = g.neighbors(x);
        const bool outside = std::any_of(nb.begin(), nb.end(), [&](Vertex y) {
            return cell_of[y] != k && cell_of[y] != cell_of[x];
        });
        if (!outside) return std::string("cell vertex without a neighbor in another cell");
    }

    if (thin_spider) return std::nullopt;
    if (d.size() != 2) return "non-spider e.d. with " + std::to_string(d.size()) + " vertices";
    const std::size_t delta = g.degree(*min_degree_vertex(g));
    std::vector<Vertex> minimum;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) == delta) minimum.push_back(v);
    }
    std::vector<Vertex> sorted_d(d.begin(), d.end());
    std::sort(sorted_d.begin(), sorted_d.end());
    const bool both = minimum == sorted_d;
    const bool one = minimum.size() == 1 && std::find(d.begin(), d.end(), minimum[0]) != d.end();
    if (!both && !one) return std::string("minimum-degree vertices are not as the two-vertex e.d. requires");
    return std::nullopt;
}

}  // namespace p5ed::testkit
