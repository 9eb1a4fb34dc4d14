#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "p5ed/graph.hpp"
#include "p5ed/io.hpp"
#include "p5ed/mdtree.hpp"
#include "p5ed/testkit.hpp"
#include "p5ed/wed.hpp"

namespace {

using namespace p5ed;

constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCertify = 3;

void print_verdict(const EdOutcome& outcome, bool assume_p5_free) {
    switch (outcome.status) {
        case EdStatus::found:
            std::cout << "ED " << outcome.total_weight;
            for (Vertex v : outcome.vertices) std::cout << ' ' << v;
            std::cout << '\n';
            break;
        case EdStatus::none_exists:
            std::cout << "NONE\n";
            break;
        case EdStatus::not_p5_free_or_no_ed:
            std::cout << (assume_p5_free ? "NONE" : "UNKNOWN (not P5-free or no e.d.)") << '\n';
            break;
    }
}

VertexWeights load_weights(const std::string& path, const Graph& g) {
    return path.empty() ? VertexWeights::unit(g.n()) : read_weights_file(path, g.n());
}

Graph bench_instance(const std::string& family, std::size_t n) {
    if (family == "spider") return testkit::gen_thin_spider(std::max<std::size_t>(2, n / 2));
    // Ladder quotient on 2q+2 vertices, each replaced by K4.
    const std::size_t q = std::max<std::size_t>(2, n / 8 > 1 ? n / 8 - 1 : 2);
    return testkit::gen_substituted_ladder(q, 4);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-weight efficient domination on P5-free graphs"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string weights_path;
    bool assume_p5_free = false;
    bool certify = false;

    auto* solve_cmd = app.add_subcommand("solve", "Solve weighted efficient domination");
    solve_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    solve_cmd->add_option("--weights", weights_path, "Weights file (default: all ones)");
    solve_cmd->add_flag("--assume-p5-free", assume_p5_free, "Report UNKNOWN as NONE");
    solve_cmd->add_flag("--certify", certify, "Re-verify a found set before printing");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force exact cover (n <= 24)");
    oracle_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    oracle_cmd->add_option("--weights", weights_path, "Weights file (default: all ones)");

    auto* mdtree_cmd = app.add_subcommand("mdtree", "Print the modular decomposition tree");
    mdtree_cmd->add_option("graph", graph_path, "Edge-list file")->required();

    std::string family;
    std::vector<std::size_t> sizes;
    int repeat = 3;
    auto* bench_cmd = app.add_subcommand("bench", "Time the solve path on generated families");
    bench_cmd->add_option("--family", family, "spider or substituted")
        ->required()
        ->check(CLI::IsMember({"spider", "substituted"}));
    bench_cmd->add_option("--sizes", sizes, "Target vertex counts")->required()->delimiter(',');
    bench_cmd->add_option("--repeat", repeat, "Runs per size; the fastest is reported")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) {
            const Graph g = read_edge_list_file(graph_path);
            const VertexWeights w = load_weights(weights_path, g);
            const EdOutcome outcome = solve(g, w);
            if (certify && outcome.is_found() && !is_ed(g, outcome.vertices)) {
                std::cerr << "certification failed: reported set is not an efficient dominating set\n";
                return kExitCertify;
            }
            print_verdict(outcome, assume_p5_free);
        } else if (*oracle_cmd) {
            const Graph g = read_edge_list_file(graph_path);
            const VertexWeights w = load_weights(weights_path, g);
            print_verdict(testkit::brute_force_wed(g, w), false);
        } else if (*mdtree_cmd) {
            const Graph g = read_edge_list_file(graph_path);
            if (g.n() == 0) throw std::runtime_error("empty graph has no decomposition");
            dump(std::cout, decompose(g));
        } else if (*bench_cmd) {
            std::cout << "n,m,micros\n";
            for (std::size_t n : sizes) {
                const Graph g = bench_instance(family, n);
                const VertexWeights w = VertexWeights::unit(g.n());
                auto best = std::chrono::nanoseconds::max();
                for (int r = 0; r < repeat; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    const EdOutcome outcome = solve(g, w);
                    const auto elapsed = std::chrono::steady_clock::now() - start;
                    if (!outcome.is_found()) throw std::logic_error("benchmark family lost its e.d.");
                    best = std::min(best, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed));
                }
                std::cout << g.n() << ',' << g.m() << ',' << best.count() / 1000 << '\n';
            }
        }
    } catch (const testkit::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
