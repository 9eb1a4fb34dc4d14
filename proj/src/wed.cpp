#include "p5ed/wed.hpp"

#include <stdexcept>

#include "p5ed/prime_ed.hpp"

namespace p5ed {

namespace {

using ChoiceTable = std::vector<std::optional<UniversalChoice>>;

std::optional<UniversalChoice> lighter(std::optional<UniversalChoice> a, std::optional<UniversalChoice> b) {
    if (!a) return b;
    if (!b) return a;
    if (b->weight < a->weight || (b->weight == a->weight && b->vertex < a->vertex)) return b;
    return a;
}

// Fills table entries for every node in the subtree of `top`.
void fill_choices(const MDTree& tree, NodeId top, const VertexWeights& w, ChoiceTable& table) {
    std::vector<NodeId> order{top};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (NodeId c : tree.node(order[i]).children) order.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const MDNode& node = tree.node(*it);
        std::optional<UniversalChoice> best;
        switch (node.kind) {
            case NodeKind::leaf:
                best = UniversalChoice{node.leaf_vertex, w[node.leaf_vertex]};
                break;
            case NodeKind::parallel:
                break;
            case NodeKind::series:
                for (NodeId c : node.children) best = lighter(best, table[c]);
                break;
            case NodeKind::prime: {
                const std::size_t k = node.children.size();
                for (Vertex i = 0; i < k; ++i) {
                    if (node.quotient.degree(i) + 1 == k) best = lighter(best, table[node.children[i]]);
                }
                break;
            }
        }
        table[*it] = best;
    }
}

EdOutcome solve_prime_node(const MDNode& node, const ChoiceTable& table, const VertexWeights& w) {
    const std::size_t k = node.children.size();
    std::vector<Weight> module_weight(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (const auto& c = table[node.children[i]]) module_weight[i] = c->weight;
    }
    const PrimeEdResult inner = solve_prime_detailed(node.quotient, VertexWeights(std::move(module_weight)));
    if (!inner.outcome.is_found()) return inner.outcome;

    std::vector<Vertex> lifted;
    for (Vertex i : inner.outcome.vertices) {
        const auto& c = table[node.children[i]];
        if (!c) {
            // A thin spider's e.d. is unique on any input, so an unusable
            // module there rules out every e.d.
            return inner.step == PrimeEdStep::thin_spider ? EdOutcome::none_exists()
                                                          : EdOutcome::not_p5_free_or_no_ed();
        }
        lifted.push_back(c->vertex);
    }
    return EdOutcome::found(std::move(lifted), w);
}

EdOutcome solve_root(const MDTree& tree, NodeId id, const ChoiceTable& table, const VertexWeights& w) {
    const MDNode& node = tree.node(id);
    switch (node.kind) {
        case NodeKind::leaf:
            return EdOutcome::found({node.leaf_vertex}, w);
        case NodeKind::series:
            if (const auto& c = table[id]) return EdOutcome::found({c->vertex}, w);
            return EdOutcome::none_exists();
        case NodeKind::prime:
            return solve_prime_node(node, table, w);
        case NodeKind::parallel: {
            std::vector<Vertex> all;
            bool unknown = false;
            for (NodeId c : node.children) {
                EdOutcome part = solve_root(tree, c, table, w);
                if (part.status == EdStatus::none_exists) return part;
                if (part.status == EdStatus::not_p5_free_or_no_ed) {
                    unknown = true;
                } else {
                    all.insert(all.end(), part.vertices.begin(), part.vertices.end());
                }
            }
            if (unknown) return EdOutcome::not_p5_free_or_no_ed();
            return EdOutcome::found(std::move(all), w);
        }
    }
    throw std::logic_error("unknown node kind");
}

}  // namespace

std::optional<UniversalChoice> min_universal(const MDTree& tree, NodeId node, const VertexWeights& w) {
    ChoiceTable table(tree.size());
    fill_choices(tree, node, w, table);
    return table[node];
}

EdOutcome solve(const Graph& g, const MDTree& tree, const VertexWeights& w) {
    w.check_matches(g);
    ChoiceTable table(tree.size());
    fill_choices(tree, tree.root(), w, table);
    return solve_root(tree, tree.root(), table, w);
}

EdOutcome solve(const Graph& g, const VertexWeights& w) {
    w.check_matches(g);
    if (g.n() == 0) return EdOutcome::found({}, w);
    return solve(g, decompose(g), w);
}

}  // namespace p5ed
