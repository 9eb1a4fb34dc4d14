#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "p5ed/testkit.hpp"

namespace p5ed::testkit {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> closed_masks(const Graph& g) {
    std::vector<Mask> masks(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        masks[v] = Mask{1} << v;
        for (Vertex x : g.neighbors(v)) masks[v] |= Mask{1} << x;
    }
    return masks;
}

void check_wed_budget(const Graph& g) {
    if (g.n() > kWedOracleMaxN) {
        throw BudgetExceeded("exact-cover oracle limited to n <= " + std::to_string(kWedOracleMaxN) + ", got " +
                             std::to_string(g.n()));
    }
}

std::vector<Vertex> to_vertices(Mask m) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

// Exact cover of V by closed neighborhoods. Branches on the uncovered
// vertex with the fewest neighborhoods that still fit.
struct CoverSearch {
    std::vector<Mask> nbhd;
    Mask all = 0;
    std::function<bool(Mask chosen, Mask covered)> prune;
    std::function<void(Mask chosen)> emit;

    void run(Mask chosen, Mask covered) {
        if (covered == all) {
            emit(chosen);
            return;
        }
        if (prune && prune(chosen, covered)) return;
        int best_count = std::numeric_limits<int>::max();
        Mask best_options = 0;
        for (Mask rest = all & ~covered; rest; rest &= rest - 1) {
            const auto x = static_cast<Vertex>(std::countr_zero(rest));
            Mask options = 0;
            for (Mask cand = nbhd[x]; cand; cand &= cand - 1) {
                const auto d = static_cast<Vertex>(std::countr_zero(cand));
                if ((nbhd[d] & covered) == 0) options |= Mask{1} << d;
            }
            const int count = std::popcount(options);
            if (count < best_count) {
                best_count = count;
                best_options = options;
                if (count == 0) return;
            }
        }
        for (Mask opt = best_options; opt; opt &= opt - 1) {
            const auto d = static_cast<Vertex>(std::countr_zero(opt));
            run(chosen | (Mask{1} << d), covered | nbhd[d]);
        }
    }
};

bool lex_less(Mask a, Mask b) { return to_vertices(a) < to_vertices(b); }

}  // namespace

EdOutcome brute_force_wed(const Graph& g, const VertexWeights& w) {
    check_wed_budget(g);
    w.check_matches(g);
    if (g.n() == 0) return EdOutcome::found({}, w);

    auto weight_of = [&](Mask m) {
        Weight total = 0;
        for (; m; m &= m - 1) total += w[static_cast<Vertex>(std::countr_zero(m))];
        return total;
    };
    std::optional<Mask> best;
    Weight best_weight = 0;
    CoverSearch search;
    search.nbhd = closed_masks(g);
    search.all = g.n() == 32 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
    search.prune = [&](Mask chosen, Mask) { return best && weight_of(chosen) > best_weight; };
    search.emit = [&](Mask chosen) {
        const Weight total = weight_of(chosen);
        if (!best || total < best_weight || (total == best_weight && lex_less(chosen, *best))) {
            best = chosen;
            best_weight = total;
        }
    };
    search.run(0, 0);
    if (!best) return EdOutcome::none_exists();
    return EdOutcome::found(to_vertices(*best), w);
}

std::vector<std::vector<Vertex>> enumerate_eds(const Graph& g) {
    check_wed_budget(g);
    std::vector<std::vector<Vertex>> out;
    if (g.n() == 0) return {{}};
    CoverSearch search;
    search.nbhd = closed_masks(g);
    search.all = (Mask{1} << g.n()) - 1;
    search.emit = [&](Mask chosen) { out.push_back(to_vertices(chosen)); };
    search.run(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::array<Vertex, 5>> find_induced_p5(const Graph& g) {
    if (g.n() > kP5OracleMaxN) {
        throw BudgetExceeded("induced-P5 oracle limited to n <= " + std::to_string(kP5OracleMaxN) + ", got " +
                             std::to_string(g.n()));
    }
    using Bits = std::uint64_t;
    std::vector<Bits> adj(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex x : g.neighbors(v)) adj[v] |= Bits{1} << x;
    }

    std::array<Vertex, 5> path{};
    // `blocked` holds the path so far plus neighbors of all but its last
    // vertex; the next vertex must avoid it and touch the last one.
    std::function<bool(std::size_t, Bits)> extend = [&](std::size_t len, Bits blocked) {
        if (len == 5) return true;
        const Vertex last = path[len - 1];
        for (Bits cand = adj[last] & ~blocked; cand; cand &= cand - 1) {
            const auto next = static_cast<Vertex>(std::countr_zero(cand));
            path[len] = next;
            if (extend(len + 1, blocked | adj[last] | (Bits{1} << next))) return true;
        }
        return false;
    };
    for (Vertex s = 0; s < g.n(); ++s) {
        path[0] = s;
        if (extend(1, Bits{1} << s)) return path;
    }
    return std::nullopt;
}

bool is_module(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> inside(g.n(), 0);
    for (Vertex v : s) inside[v] = 1;
    for (Vertex x = 0; x < g.n(); ++x) {
        if (inside[x]) continue;
        std::size_t seen = 0;
        for (Vertex y : g.neighbors(x)) seen += inside[y];
        if (seen != 0 && seen != s.size()) return false;
    }
    return true;
}

std::vector<std::uint32_t> all_modules(const Graph& g) {
    if (g.n() > 16) throw BudgetExceeded("module enumeration limited to n <= 16");
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex x : g.neighbors(v)) adj[v] |= std::uint32_t{1} << x;
    }
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (std::uint32_t{1} << g.n()) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (std::popcount(s) < 2) continue;
        bool ok = true;
        for (Vertex x = 0; x < g.n() && ok; ++x) {
            if (s >> x & 1) continue;
            const std::uint32_t seen = adj[x] & s;
            ok = seen == 0 || seen == s;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

DominationPartition domination_partition(const Graph& g, std::span<const Vertex> d) {
    std::vector<char> in_d(g.n(), 0);
    for (Vertex v : d) in_d[v] = 1;
    DominationPartition out;
    out.dominators.assign(d.begin(), d.end());
    for (Vertex v : d) {
        std::vector<Vertex> cell;
        for (Vertex x : g.neighbors(v)) {
            if (!in_d[x]) cell.push_back(x);
        }
        out.cells.push_back(std::move(cell));
    }
    return out;
}

}  // namespace p5ed::testkit
