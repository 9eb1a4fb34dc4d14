#include "p5ed/mdtree.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace p5ed {

namespace {

constexpr std::uint32_t npos = ~std::uint32_t{0};

using VertexSets = std::vector<std::vector<Vertex>>;

void sort_by_first(VertexSets& sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

VertexSets components(const Graph& g) {
    VertexSets out;
    std::vector<char> seen(g.n(), 0);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex x : g.neighbors(comp[head])) {
                if (!seen[x]) {
                    seen[x] = 1;
                    comp.push_back(x);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

// Components of the complement in O(n + m): each BFS step keeps only the
// unvisited vertices adjacent to the current one.
VertexSets co_components(const Graph& g) {
    VertexSets out;
    std::vector<Vertex> unvisited(g.n());
    for (Vertex v = 0; v < g.n(); ++v) unvisited[v] = v;
    std::vector<char> adj(g.n(), 0);
    std::vector<Vertex> keep;
    while (!unvisited.empty()) {
        std::vector<Vertex> comp{unvisited.back()};
        unvisited.pop_back();
        for (std::size_t head = 0; head < comp.size() && !unvisited.empty(); ++head) {
            Vertex u = comp[head];
            for (Vertex x : g.neighbors(u)) adj[x] = 1;
            keep.clear();
            for (Vertex x : unvisited) {
                if (adj[x]) {
                    keep.push_back(x);
                } else {
                    comp.push_back(x);
                }
            }
            unvisited.swap(keep);
            for (Vertex x : g.neighbors(u)) adj[x] = 0;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

// Coarsest partition of V \ {pivot} into modules. Parts live as contiguous
// ranges of `order_`. Every split queues its smaller half; processing a
// queued half H refines all parts by each vertex of H and refines the parts
// inside H by every outside neighbor, after which parts inside H and parts
// outside H are mutually uniform. A vertex is queued O(log n) times.
class ModulePartition {
public:
    ModulePartition(const Graph& g, Vertex pivot)
        : pos_(g.n(), npos), part_of_(g.n(), npos), stamp_(g.n(), 0), bucket_(g.n(), 0) {
        order_.reserve(g.n());
        for (Vertex v = 0; v < g.n(); ++v) {
            if (v == pivot) continue;
            pos_[v] = static_cast<std::uint32_t>(order_.size());
            part_of_[v] = 0;
            order_.push_back(v);
        }
        if (order_.empty()) return;
        parts_.push_back({0, static_cast<std::uint32_t>(order_.size()), 0});

        for (Vertex y : g.neighbors(pivot)) mark(y);
        split_touched();

        std::vector<Vertex> seen;
        std::vector<Vertex> grouped;
        while (!pending_.empty()) {
            std::vector<Vertex> half = std::move(pending_.front());
            pending_.pop_front();

            for (Vertex x : half) {
                const std::uint32_t own = part_of_[x];
                for (Vertex y : g.neighbors(x)) {
                    if (part_of_[y] != npos && part_of_[y] != own) mark(y);
                }
                split_touched();
            }

            // Group the members of H by outside neighbor with a counting pass.
            ++token_;
            for (Vertex y : half) stamp_[y] = token_;
            seen.clear();
            std::size_t total = 0;
            for (Vertex y : half) {
                for (Vertex z : g.neighbors(y)) {
                    if (stamp_[z] == token_ || z == pivot) continue;
                    if (bucket_[z] == 0) seen.push_back(z);
                    ++bucket_[z];
                    ++total;
                }
            }
            std::uint32_t offset = 0;
            for (Vertex z : seen) {
                const std::uint32_t size = bucket_[z];
                bucket_[z] = offset;
                offset += size;
            }
            grouped.resize(total);
            for (Vertex y : half) {
                for (Vertex z : g.neighbors(y)) {
                    if (stamp_[z] != token_ && z != pivot) grouped[bucket_[z]++] = y;
                }
            }
            std::uint32_t start = 0;
            for (Vertex z : seen) {
                for (std::uint32_t i = start; i < bucket_[z]; ++i) mark(grouped[i]);
                split_touched();
                start = bucket_[z];
                bucket_[z] = 0;
            }
        }
    }

    VertexSets parts() const {
        VertexSets out;
        out.reserve(parts_.size());
        for (const Part& p : parts_) out.emplace_back(order_.begin() + p.begin, order_.begin() + p.end);
        sort_by_first(out);
        return out;
    }

private:
    struct Part {
        std::uint32_t begin;
        std::uint32_t end;
        std::uint32_t marked;
    };

    void mark(Vertex y) {
        const std::uint32_t p = part_of_[y];
        Part& part = parts_[p];
        if (part.marked == 0) touched_.push_back(p);
        const std::uint32_t slot = part.begin + part.marked;
        const Vertex other = order_[slot];
        std::swap(order_[slot], order_[pos_[y]]);
        pos_[other] = pos_[y];
        pos_[y] = slot;
        ++part.marked;
    }

    void split_touched() {
        for (std::uint32_t p : touched_) {
            Part& part = parts_[p];
            const std::uint32_t marked = part.marked;
            part.marked = 0;
            if (marked == part.end - part.begin) continue;
            const auto q = static_cast<std::uint32_t>(parts_.size());
            const Part fresh{part.begin, part.begin + marked, 0};
            part.begin += marked;
            for (std::uint32_t i = fresh.begin; i < fresh.end; ++i) part_of_[order_[i]] = q;
            const Part& rest = parts_[p];
            const Part& smaller = (fresh.end - fresh.begin <= rest.end - rest.begin) ? fresh : rest;
            pending_.emplace_back(order_.begin() + smaller.begin, order_.begin() + smaller.end);
            parts_.push_back(fresh);
        }
        touched_.clear();
    }

    std::vector<Vertex> order_;
    std::vector<std::uint32_t> pos_;
    std::vector<std::uint32_t> part_of_;
    std::vector<Part> parts_;
    std::vector<std::uint32_t> touched_;
    std::deque<std::vector<Vertex>> pending_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> bucket_;
    std::uint32_t token_ = 0;
};

// Strongly connected components, iterative Tarjan. Returns component ids.
std::vector<std::uint32_t> scc(const VertexSets& out_edges, std::uint32_t& count) {
    const std::size_t k = out_edges.size();
    std::vector<std::uint32_t> index(k, npos), low(k, 0), comp(k, npos);
    std::vector<char> on_stack(k, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::size_t>> calls;
    std::uint32_t next = 0;
    count = 0;
    for (std::uint32_t s = 0; s < k; ++s) {
        if (index[s] != npos) continue;
        index[s] = low[s] = next++;
        stack.push_back(s);
        on_stack[s] = 1;
        calls.emplace_back(s, 0);
        while (!calls.empty()) {
            const std::uint32_t u = calls.back().first;
            const std::size_t i = calls.back().second;
            if (i < out_edges[u].size()) {
                ++calls.back().second;
                const std::uint32_t w = out_edges[u][i];
                if (index[w] == npos) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    calls.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = count;
                } while (w != u);
                ++count;
            }
            calls.pop_back();
            if (!calls.empty()) {
                const std::uint32_t parent = calls.back().first;
                low[parent] = std::min(low[parent], low[u]);
            }
        }
    }
    return comp;
}

// Maximal strong modules of a connected, co-connected graph. The maximal
// modules avoiding a pivot v are strong children except those inside the
// child that contains v. A part X forces part Y when Y distinguishes v from
// X; the parts outside v's child are exactly the unique source component of
// this forcing digraph.
VertexSets maximal_strong_modules(const Graph& g) {
    const Vertex pivot = *min_degree_vertex(g);
    VertexSets parts = ModulePartition(g, pivot).parts();
    const std::size_t k = parts.size();

    std::vector<std::uint32_t> part_of(g.n(), npos);
    for (std::uint32_t p = 0; p < k; ++p) {
        for (Vertex x : parts[p]) part_of[x] = p;
    }
    std::vector<char> sees_pivot(k, 0);
    std::vector<std::uint32_t> pivot_side;
    for (Vertex y : g.neighbors(pivot)) {
        if (!sees_pivot[part_of[y]]) {
            sees_pivot[part_of[y]] = 1;
            pivot_side.push_back(part_of[y]);
        }
    }

    VertexSets forcing(k);
    std::vector<std::uint32_t> stamp(k, npos);
    std::vector<std::uint32_t> quotient_nb;
    for (std::uint32_t p = 0; p < k; ++p) {
        quotient_nb.clear();
        stamp[p] = p;
        for (Vertex y : g.neighbors(parts[p].front())) {
            const std::uint32_t q = part_of[y];
            if (q == npos || stamp[q] == p) continue;
            stamp[q] = p;
            quotient_nb.push_back(q);
        }
        for (std::uint32_t q : quotient_nb) {
            if (!sees_pivot[q]) forcing[p].push_back(q);
        }
        for (std::uint32_t q : pivot_side) {
            if (stamp[q] != p) forcing[p].push_back(q);
        }
    }

    std::uint32_t count = 0;
    const auto comp = scc(forcing, count);
    std::vector<char> has_incoming(count, 0);
    for (std::uint32_t p = 0; p < k; ++p) {
        for (std::uint32_t q : forcing[p]) {
            if (comp[p] != comp[q]) has_incoming[comp[q]] = 1;
        }
    }
    if (std::count(has_incoming.begin(), has_incoming.end(), 0) != 1) {
        throw std::logic_error("forcing graph of a prime node must have one source component");
    }
    const auto source = static_cast<std::uint32_t>(std::find(has_incoming.begin(), has_incoming.end(), 0) -
                                                   has_incoming.begin());

    VertexSets modules;
    std::vector<Vertex> with_pivot{pivot};
    for (std::uint32_t p = 0; p < k; ++p) {
        if (comp[p] == source) {
            modules.push_back(std::move(parts[p]));
        } else {
            with_pivot.insert(with_pivot.end(), parts[p].begin(), parts[p].end());
        }
    }
    modules.push_back(std::move(with_pivot));
    sort_by_first(modules);
    return modules;
}

Graph quotient_graph(const Graph& g, const VertexSets& children) {
    std::vector<std::uint32_t> child_of(g.n(), npos);
    for (std::uint32_t c = 0; c < children.size(); ++c) {
        for (Vertex x : children[c]) child_of[x] = c;
    }
    std::vector<Edge> edges;
    std::vector<std::uint32_t> stamp(children.size(), npos);
    for (std::uint32_t c = 0; c < children.size(); ++c) {
        for (Vertex y : g.neighbors(children[c].front())) {
            const std::uint32_t d = child_of[y];
            if (d > c && stamp[d] != c) {
                stamp[d] = c;
                edges.emplace_back(c, d);
            }
        }
    }
    return Graph::build(children.size(), edges);
}

}  // namespace

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::leaf: return "leaf";
        case NodeKind::parallel: return "parallel";
        case NodeKind::series: return "series";
        case NodeKind::prime: return "prime";
    }
    return "?";
}

MDTree decompose(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("decompose: empty graph");

    struct Task {
        Graph local;
        std::vector<Vertex> global;  // ascending, local id -> vertex of g
        NodeId id;
    };

    MDTree tree;
    tree.leaf_of_.assign(g.n(), 0);
    tree.nodes_.emplace_back();

    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    std::vector<Task> work;
    work.push_back({g, std::move(all), 0});

    while (!work.empty()) {
        Task task = std::move(work.back());
        work.pop_back();
        const Graph& local = task.local;

        if (local.n() == 1) {
            MDNode& node = tree.nodes_[task.id];
            node.kind = NodeKind::leaf;
            node.leaf_vertex = task.global.front();
            node.vertices = task.global;
            tree.leaf_of_[node.leaf_vertex] = task.id;
            continue;
        }

        NodeKind kind = NodeKind::parallel;
        VertexSets children = components(local);
        if (children.size() == 1) {
            kind = NodeKind::series;
            children = co_components(local);
            if (children.size() == 1) {
                kind = NodeKind::prime;
                children = maximal_strong_modules(local);
            }
        }
        sort_by_first(children);

        {
            MDNode& node = tree.nodes_[task.id];
            node.kind = kind;
            node.vertices = task.global;
            if (kind == NodeKind::prime) node.quotient = quotient_graph(local, children);
        }

        std::vector<NodeId> child_ids;
        for (const auto& child : children) {
            const auto id = static_cast<NodeId>(tree.nodes_.size());
            child_ids.push_back(id);
            tree.nodes_.emplace_back();
            std::vector<Vertex> global;
            global.reserve(child.size());
            for (Vertex x : child) global.push_back(task.global[x]);
            if (child.size() == 1) {
                MDNode& leaf = tree.nodes_[id];
                leaf.leaf_vertex = global.front();
                leaf.vertices = std::move(global);
                tree.leaf_of_[leaf.leaf_vertex] = id;
            } else {
                work.push_back({induced_subgraph(local, child).graph, std::move(global), id});
            }
        }
        tree.nodes_[task.id].children = std::move(child_ids);
    }
    return tree;
}

bool is_prime(const Graph& g) {
    if (g.n() < 4) return false;
    const MDTree tree = decompose(g);
    const MDNode& root = tree.root_node();
    return root.kind == NodeKind::prime && root.children.size() == g.n();
}

std::vector<Vertex> smallest_module_containing(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("smallest_module_containing: u == v");
    std::vector<char> in_module(g.n(), 0);
    std::vector<std::size_t> seen(g.n(), 0);  // neighbors inside the module
    std::size_t size = 0;
    auto add = [&](Vertex x) {
        in_module[x] = 1;
        ++size;
        for (Vertex y : g.neighbors(x)) ++seen[y];
    };
    add(u);
    add(v);
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex x = 0; x < g.n(); ++x) {
            if (!in_module[x] && seen[x] != 0 && seen[x] != size) {
                add(x);
                grew = true;
            }
        }
    }
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g.n(); ++x) {
        if (in_module[x]) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<Vertex>> maximal_modules_avoiding(const Graph& g, Vertex pivot) {
    if (pivot >= g.n()) throw std::invalid_argument("maximal_modules_avoiding: pivot out of range");
    return ModulePartition(g, pivot).parts();
}

void dump(std::ostream& out, const MDTree& tree) {
    std::vector<std::pair<NodeId, std::size_t>> stack{{tree.root(), 0}};
    while (!stack.empty()) {
        auto [id, depth] = stack.back();
        stack.pop_back();
        const MDNode& node = tree.node(id);
        out << std::string(2 * depth, ' ') << to_string(node.kind) << " {";
        for (std::size_t i = 0; i < node.vertices.size(); ++i) out << (i ? " " : "") << node.vertices[i];
        out << "}\n";
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.emplace_back(*it, depth + 1);
    }
}

}  // namespace p5ed
