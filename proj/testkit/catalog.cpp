#include <algorithm>
#include <bit>
#include <unordered_set>

#include "p5ed/testkit.hpp"

namespace p5ed::testkit {

namespace {

constexpr std::size_t kCanonMaxN = 11;

using Row = std::uint16_t;
using Cells = std::vector<std::vector<int>>;

struct SmallGraph {
    int n = 0;
    std::array<Row, kCanonMaxN> adj{};
};

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = static_cast<int>(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex x : g.neighbors(v)) s.adj[v] |= Row(1u << x);
    }
    return s;
}

Graph to_graph(const SmallGraph& s) {
    std::vector<Edge> edges;
    for (int u = 0; u < s.n; ++u) {
        for (int v = u + 1; v < s.n; ++v) {
            if (s.adj[u] >> v & 1) edges.emplace_back(u, v);
        }
    }
    return Graph::build(static_cast<std::size_t>(s.n), edges);
}

// Splits cells by neighbor counts into each splitter cell until equitable.
// Only cell order and counts are consulted, never vertex labels.
void refine(const SmallGraph& g, Cells& cells) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            Row splitter = 0;
            for (int v : cells[w]) splitter |= Row(1u << v);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                auto count = [&](int v) { return std::popcount(static_cast<unsigned>(g.adj[v] & splitter)); };
                auto& cell = cells[c];
                std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
                if (count(cell.front()) == count(cell.back())) continue;
                Cells pieces;
                for (int v : cell) {
                    if (pieces.empty() || count(pieces.back().front()) != count(v)) pieces.emplace_back();
                    pieces.back().push_back(v);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::uint64_t code_of(const SmallGraph& g, const Cells& cells) {
    std::uint64_t code = 0;
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c.front());
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) code = code << 1 | (g.adj[order[i]] >> order[j] & 1);
    }
    return code;
}

void search(const SmallGraph& g, Cells cells, std::uint64_t& best) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        best = std::max(best, code_of(g, cells));
        return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> cell = *target;
    std::vector<int> tried;
    for (int u : cell) {
        // Swapping true or false twins is an automorphism fixing every
        // individualized vertex, so one representative suffices.
        const bool twin = std::any_of(tried.begin(), tried.end(), [&](int t) {
            return (g.adj[u] & Row(~(1u << t))) == (g.adj[t] & Row(~(1u << u)));
        });
        if (twin) continue;
        tried.push_back(u);
        Cells next = cells;
        std::vector<int> rest;
        for (int x : cell) {
            if (x != u) rest.push_back(x);
        }
        next[at] = {u};
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
        search(g, std::move(next), best);
    }
}

std::uint64_t canonical(const SmallGraph& g) {
    Cells cells(1);
    for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
    std::uint64_t best = 0;
    if (g.n > 0) search(g, std::move(cells), best);
    return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > kCanonMaxN) throw BudgetExceeded("canonical_code limited to n <= 11");
    return canonical(to_small(g));
}

void for_each_catalog_graph(std::size_t n_max, const std::function<void(const Graph&)>& visit) {
    if (n_max > kCatalogMaxN) {
        throw BudgetExceeded("catalog limited to n <= " + std::to_string(kCatalogMaxN));
    }
    if (n_max == 0) return;
    std::vector<SmallGraph> level(1);
    level[0].n = 1;
    visit(to_graph(level[0]));
    for (int n = 2; n <= static_cast<int>(n_max); ++n) {
        std::vector<SmallGraph> next;
        std::unordered_set<std::uint64_t> seen;
        for (const SmallGraph& h : level) {
            for (unsigned nb = 0; nb < (1u << (n - 1)); ++nb) {
                SmallGraph g = h;
                g.n = n;
                g.adj[n - 1] = static_cast<Row>(nb);
                for (int v = 0; v < n - 1; ++v) {
                    if (nb >> v & 1) g.adj[v] |= Row(1u << (n - 1));
                }
                if (seen.insert(canonical(g)).second) {
                    visit(to_graph(g));
                    next.push_back(g);
                }
            }
        }
        level = std::move(next);
    }
}

std::vector<Graph> catalog(std::size_t n_max) {
    std::vector<Graph> out;
    for_each_catalog_graph(n_max, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace p5ed::testkit
