#include <algorithm>
#include <bit>
#include <map>

#include "p5ed/testkit.hpp"

namespace p5ed::testkit {

namespace {

std::string show(const std::vector<Vertex>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out + "}";
}

// Components of g[s] (or of its complement), each ascending, by first vertex.
std::vector<std::vector<Vertex>> naive_components(const Graph& g, const std::vector<Vertex>& s, bool complemented) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> done(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> queue{i};
        done[i] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (!done[j] && g.adjacent(s[queue[h]], s[j]) != complemented) {
                    done[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        std::vector<Vertex> comp;
        for (std::size_t j : queue) comp.push_back(s[j]);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<std::string> check_md_tree(const Graph& g, const MDTree& tree, bool all_modules_check) {
    const std::size_t n = g.n();
    std::vector<NodeId> parent(tree.size(), tree.root());
    std::vector<std::size_t> depth(tree.size(), 0);
    std::vector<NodeId> order{tree.root()};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (NodeId c : tree.node(order[i]).children) {
            parent[c] = order[i];
            depth[c] = depth[order[i]] + 1;
            order.push_back(c);
        }
    }
    if (order.size() != tree.size()) return "unreachable nodes in tree";

    std::vector<int> leaf_count(n, 0);
    for (NodeId id : order) {
        const MDNode& node = tree.node(id);
        if (!std::is_sorted(node.vertices.begin(), node.vertices.end())) return "node vertex set not ascending";
        if (node.kind == NodeKind::leaf) {
            if (!node.children.empty() || node.vertices != std::vector<Vertex>{node.leaf_vertex}) {
                return "malformed leaf";
            }
            ++leaf_count[node.leaf_vertex];
            if (tree.leaf_of(node.leaf_vertex) != id) return "leaf_of disagrees with leaves";
            continue;
        }
        if (node.children.size() < 2) return "internal node with fewer than two children";
        std::vector<Vertex> joined;
        std::vector<std::vector<Vertex>> child_sets;
        for (NodeId c : node.children) {
            const auto& cv = tree.node(c).vertices;
            if (!child_sets.empty() && child_sets.back().front() > cv.front()) return "children out of order";
            joined.insert(joined.end(), cv.begin(), cv.end());
            child_sets.push_back(cv);
        }
        std::sort(joined.begin(), joined.end());
        if (joined != node.vertices) return "children do not partition " + show(node.vertices);
        if (!is_module(g, node.vertices)) return show(node.vertices) + " is not a module";

        const auto comps = naive_components(g, node.vertices, false);
        const auto cocomps = naive_components(g, node.vertices, true);
        auto sorted_children = child_sets;
        std::sort(sorted_children.begin(), sorted_children.end());
        switch (node.kind) {
            case NodeKind::parallel:
                if (comps != sorted_children) return "parallel children are not the components of " + show(node.vertices);
                break;
            case NodeKind::series:
                if (cocomps != sorted_children) {
                    return "series children are not the co-components of " + show(node.vertices);
                }
                break;
            case NodeKind::prime: {
                if (comps.size() != 1 || cocomps.size() != 1) return "prime node not connected and co-connected";
                const Graph& q = node.quotient;
                if (q.n() != child_sets.size()) return "quotient size mismatch";
                for (Vertex i = 0; i < q.n(); ++i) {
                    if (!is_module(g, child_sets[i])) return "prime child is not a module";
                    for (Vertex j = i + 1; j < q.n(); ++j) {
                        if (q.adjacent(i, j) != g.adjacent(child_sets[i].front(), child_sets[j].front())) {
                            return "quotient adjacency mismatch at " + show(node.vertices);
                        }
                        if (smallest_module_containing(q, i, j).size() != q.n()) {
                            return "quotient of " + show(node.vertices) + " has a homogeneous set";
                        }
                    }
                }
                break;
            }
            case NodeKind::leaf:
                break;
        }
    }
    if (std::any_of(leaf_count.begin(), leaf_count.end(), [](int c) { return c != 1; })) {
        return "leaves do not biject with vertices";
    }

    auto lca = [&](NodeId a, NodeId b) {
        while (depth[a] > depth[b]) a = parent[a];
        while (depth[b] > depth[a]) b = parent[b];
        while (a != b) {
            a = parent[a];
            b = parent[b];
        }
        return a;
    };
    // Child of `top` on the path up from `low`.
    auto child_toward = [&](NodeId top, NodeId low) {
        while (parent[low] != top) low = parent[low];
        return low;
    };

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const NodeId a = lca(tree.leaf_of(u), tree.leaf_of(v));
            const MDNode& node = tree.node(a);
            std::vector<Vertex> expected;
            if (node.kind == NodeKind::prime) {
                expected = node.vertices;
            } else {
                const auto& cu = tree.node(child_toward(a, tree.leaf_of(u))).vertices;
                const auto& cv = tree.node(child_toward(a, tree.leaf_of(v))).vertices;
                std::merge(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(expected));
            }
            if (smallest_module_containing(g, u, v) != expected) {
                return "smallest module containing " + std::to_string(u) + "," + std::to_string(v) +
                       " is not the tree's " + show(expected);
            }
        }
    }

    if (all_modules_check) {
        std::map<std::vector<Vertex>, NodeId> by_set;
        for (NodeId id : order) by_set[tree.node(id).vertices] = id;
        for (std::uint32_t mask : all_modules(g)) {
            std::vector<Vertex> m;
            for (std::uint32_t r = mask; r; r &= r - 1) m.push_back(static_cast<Vertex>(std::countr_zero(r)));
            if (by_set.count(m)) continue;
            NodeId a = tree.leaf_of(m[0]);
            for (Vertex x : m) a = lca(a, tree.leaf_of(x));
            const MDNode& node = tree.node(a);
            bool union_of_children = node.kind == NodeKind::parallel || node.kind == NodeKind::series;
            for (NodeId c : node.children) {
                const auto& cv = tree.node(c).vertices;
                const auto inside = std::count_if(cv.begin(), cv.end(), [&](Vertex x) { return mask >> x & 1; });
                if (inside != 0 && static_cast<std::size_t>(inside) != cv.size()) union_of_children = false;
            }
            if (!union_of_children) return "module " + show(m) + " is not a union of children of one node";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_complement_duality(const Graph& g) {
    auto summary = [](const MDTree& t, bool swap) {
        std::map<std::vector<Vertex>, NodeKind> out;
        for (const MDNode& node : t.nodes()) {
            NodeKind k = node.kind;
            if (swap && k == NodeKind::parallel) {
                k = NodeKind::series;
            } else if (swap && k == NodeKind::series) {
                k = NodeKind::parallel;
            }
            out[node.vertices] = k;
        }
        return out;
    };
    if (summary(decompose(g), false) != summary(decompose(complement(g)), true)) {
        return std::string("decomposition of the complement differs");
    }
    return std::nullopt;
}

}  // namespace p5ed::testkit
