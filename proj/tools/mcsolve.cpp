#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mcs/bench.hpp"
#include "mcs/gen.hpp"
#include "mcs/graph.hpp"
#include "mcs/search.hpp"
#include "mcs/verify.hpp"

namespace {

struct CommonOpts {
    std::string format = "bin";
    bool directed = false;
    bool labelled = false;
    bool connected = false;
    bool swap = false;
    double timeout = 1800.0;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    std::string heuristic = "lsm";
    std::string lum = "auto";  // on|off|auto (auto: on for lsm)
    std::uint64_t t_short = mcs::kDefaultShortThreshold;
    std::uint64_t t_long = mcs::kDefaultLongThreshold;
};

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--format", o.format, "Graph file format")->check(CLI::IsMember({"bin", "text"}));
    app->add_flag("--directed", o.directed, "Treat graphs as directed");
    app->add_flag("--labelled", o.labelled, "Binary files carry vertex and edge labels");
    app->add_flag("--connected", o.connected, "Require the common subgraph to be connected");
    app->add_flag("--swap", o.swap, "Swap the two input graphs before solving");
    app->add_option("--timeout", o.timeout, "Cutoff in seconds (default 1800)");
    app->add_option("--node-budget", o.node_budget, "Stop after this many search nodes (0 = unlimited)");
    app->add_option("--heuristic", o.heuristic, "Branching variant")
        ->check(CLI::IsMember({"mcsplit", "rl", "sm", "lsm"}));
    app->add_option("--lum", o.lum, "Leaf union matching (default: on for lsm)")
        ->check(CLI::IsMember({"on", "off", "auto"}));
    app->add_option("--t-short", o.t_short, "Short-term decay threshold (default 1e5)");
    app->add_option("--t-long", o.t_long, "Long-term decay threshold (default 1e9)");
}

mcs::GraphFormat to_format(const std::string& f) {
    return f == "text" ? mcs::GraphFormat::text : mcs::GraphFormat::binary;
}

mcs::SolverConfig to_solver_config(const CommonOpts& o) {
    mcs::SolverConfig cfg;
    cfg.variant.tag = mcs::heuristic_from_name(o.heuristic);
    cfg.variant.lum_enabled =
        o.lum == "on" || (o.lum == "auto" && cfg.variant.tag == mcs::Heuristic::lsm);
    cfg.connected = o.connected;
    cfg.timeout_seconds = o.timeout;
    if (o.node_budget > 0) cfg.node_budget = o.node_budget;
    cfg.t_short = o.t_short;
    cfg.t_long = o.t_long;
    return cfg;
}

int cmd_solve(const CommonOpts& opts, const std::string& path0, const std::string& path1,
              const std::string& solution_out) {
    mcs::Graph g0 = mcs::load_graph(path0, to_format(opts.format), opts.directed, opts.labelled);
    mcs::Graph g1 = mcs::load_graph(path1, to_format(opts.format), opts.directed, opts.labelled);
    if (opts.swap) std::swap(g0, g1);
    const mcs::SolverConfig cfg = to_solver_config(opts);
    const mcs::SolveResult res = mcs::solve(g0, g1, cfg);

    std::cout << "size=" << res.solution.size() << " nodes=" << res.stats.nodes_expanded
              << " seconds=" << res.stats.wall_time << " completed=" << res.stats.completed
              << " prunes=" << res.stats.prunes << " lum_pairs=" << res.stats.lum_pairs_matched
              << '\n';
    std::cout << "pairs:";
    for (auto [p, q] : res.solution.pairs) std::cout << " (" << p << "," << q << ")";
    std::cout << '\n';
    std::cout << "RESULT size=" << res.solution.size() << " nodes=" << res.stats.nodes_expanded
              << " seconds=" << res.stats.wall_time << " completed=" << res.stats.completed
              << '\n';
    if (!solution_out.empty()) {
        std::ofstream out(solution_out);
        if (!out) throw std::runtime_error("cannot write " + solution_out);
        for (auto [p, q] : res.solution.pairs) out << p << ' ' << q << '\n';
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& path0, const std::string& path1,
               const std::string& solution_path) {
    mcs::Graph g0 = mcs::load_graph(path0, to_format(opts.format), opts.directed, opts.labelled);
    mcs::Graph g1 = mcs::load_graph(path1, to_format(opts.format), opts.directed, opts.labelled);
    std::ifstream in(solution_path);
    if (!in) throw std::runtime_error("cannot open solution file: " + solution_path);
    mcs::Solution sol;
    int p, q;
    while (in >> p >> q) sol.pairs.emplace_back(p, q);
    const mcs::VerifyReport report = mcs::verify_solution(g0, g1, sol, opts.connected);
    if (report.valid) {
        std::cout << "valid size=" << sol.size() << '\n';
        return 0;
    }
    std::cout << "invalid\n";
    for (const auto& v : report.violations) std::cout << v.to_string() << '\n';
    return 1;
}

int cmd_bench(const CommonOpts& opts, const std::string& list_path, const std::string& variants,
              double easy_secs, int jobs, const std::string& output) {
    mcs::BenchConfig cfg;
    cfg.list_path = list_path;
    cfg.variants = mcs::parse_variant_list(variants);
    cfg.format = to_format(opts.format);
    cfg.directed = opts.directed;
    cfg.labelled = opts.labelled;
    cfg.connected = opts.connected;
    cfg.swap = opts.swap;
    cfg.timeout_seconds = opts.timeout;
    if (opts.node_budget > 0) cfg.node_budget = opts.node_budget;
    cfg.t_short = opts.t_short;
    cfg.t_long = opts.t_long;
    cfg.easy_secs = easy_secs;
    cfg.jobs = jobs;
    if (output.empty()) {
        mcs::run_benchmark(cfg, std::cout, std::cerr);
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        mcs::run_benchmark(cfg, out, std::cerr);
    }
    return 0;
}

int cmd_cactus(const std::string& csv_path, const std::string& output) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open " + csv_path);
    const auto rows = mcs::parse_csv(in);
    const auto series = mcs::emit_cactus_data(rows);
    if (output.empty()) {
        mcs::write_cactus_csv(series, std::cout);
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        mcs::write_cactus_csv(series, out);
    }
    return 0;
}

struct GenOpts {
    std::string out0, out1;
    std::string format = "bin";
    int n = 20;
    int n1 = 0;  // target size for pair mode; 0 = same as n
    double edge_prob = 0.3;
    bool directed = false;
    int vertex_labels = 1;
    int edge_labels = 1;
    unsigned seed = 1;
    double pattern_frac = 0.0;  // >0: pattern-of-target pair
    double mutate_prob = 0.0;
    int plant_leaves = 0;
};

int cmd_gen(const GenOpts& o) {
    std::mt19937 rng(o.seed);
    mcs::GenSpec spec;
    spec.n = o.n;
    spec.edge_prob = o.edge_prob;
    spec.directed = o.directed;
    spec.vertex_label_count = o.vertex_labels;
    spec.edge_label_count = o.edge_labels;
    const mcs::GraphFormat fmt = to_format(o.format);

    if (o.out1.empty()) {
        mcs::Graph g = mcs::random_graph(spec, rng);
        if (o.plant_leaves > 0)
            g = mcs::plant_leaves(g, o.plant_leaves, rng, o.vertex_labels, o.edge_labels);
        mcs::save_graph(g, o.out0, fmt);
        std::cout << "wrote " << o.out0 << " n=" << g.n() << '\n';
        return 0;
    }
    mcs::Graph g0, g1;
    if (o.pattern_frac > 0.0) {
        mcs::GenSpec target_spec = spec;
        if (o.n1 > 0) target_spec.n = o.n1;
        auto [pattern, target] = mcs::random_pattern_pair(target_spec, o.pattern_frac,
                                                          o.mutate_prob, rng);
        g0 = std::move(pattern);
        g1 = std::move(target);
    } else {
        g0 = mcs::random_graph(spec, rng);
        mcs::GenSpec spec1 = spec;
        if (o.n1 > 0) spec1.n = o.n1;
        g1 = mcs::random_graph(spec1, rng);
    }
    if (o.plant_leaves > 0) {
        g0 = mcs::plant_leaves(g0, o.plant_leaves, rng, o.vertex_labels, o.edge_labels);
        g1 = mcs::plant_leaves(g1, o.plant_leaves, rng, o.vertex_labels, o.edge_labels);
    }
    mcs::save_graph(g0, o.out0, fmt);
    mcs::save_graph(g1, o.out1, fmt);
    std::cout << "wrote " << o.out0 << " n=" << g0.n() << " and " << o.out1 << " n=" << g1.n()
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maximum common (connected) induced subgraph solver"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string path0, path1, solution_path, solution_out;
    std::string list_path, variants = "rl,lsm+lum", output, csv_path;
    double easy_secs = 10.0;
    int jobs = 1;
    GenOpts gen;

    CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
    add_common(solve, opts);
    solve->add_option("g0", path0, "Pattern graph")->required();
    solve->add_option("g1", path1, "Target graph")->required();
    solve->add_option("--solution-out", solution_out, "Write the pair list to this file");

    CLI::App* verify = app.add_subcommand("verify", "Verify a solution file");
    add_common(verify, opts);
    verify->add_option("g0", path0, "Pattern graph")->required();
    verify->add_option("g1", path1, "Target graph")->required();
    verify->add_option("solution", solution_path, "File of 'p q' lines")->required();

    CLI::App* bench = app.add_subcommand("bench", "Run an instance list under several variants");
    add_common(bench, opts);
    bench->add_option("--list", list_path, "Instance list file")->required();
    bench->add_option("--variants", variants, "Comma-separated variants, e.g. rl,lsm+lum");
    bench->add_option("--easy-secs", easy_secs, "Easy-class threshold in seconds (default 10)");
    bench->add_option("--jobs", jobs, "Concurrent instances (default 1)");
    bench->add_option("--output", output, "CSV output path (default stdout)");

    CLI::App* cactus = app.add_subcommand("cactus", "Cumulative solved-vs-time series from a results CSV");
    cactus->add_option("csv", csv_path, "Benchmark results CSV")->required();
    cactus->add_option("--output", output, "Output path (default stdout)");

    CLI::App* genc = app.add_subcommand("gen", "Generate random fixture graphs");
    genc->add_option("out0", gen.out0, "Output path")->required();
    genc->add_option("out1", gen.out1, "Second output path (pair mode)");
    genc->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"bin", "text"}));
    genc->add_option("--n", gen.n, "Vertex count (pattern side in pair mode)");
    genc->add_option("--n1", gen.n1, "Target vertex count in pair mode");
    genc->add_option("--edge-prob", gen.edge_prob, "Edge probability");
    genc->add_flag("--directed", gen.directed, "Directed graphs");
    genc->add_option("--vertex-labels", gen.vertex_labels, "Vertex label alphabet size");
    genc->add_option("--edge-labels", gen.edge_labels, "Edge label alphabet size");
    genc->add_option("--seed", gen.seed, "RNG seed");
    genc->add_option("--pattern-frac", gen.pattern_frac,
                     "Pair mode: pattern is this fraction of the target");
    genc->add_option("--mutate-prob", gen.mutate_prob, "Pair mode: per-edge flip probability");
    genc->add_option("--plant-leaves", gen.plant_leaves, "Attach 0..k pendant leaves per vertex");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(opts, path0, path1, solution_out);
        if (verify->parsed()) return cmd_verify(opts, path0, path1, solution_path);
        if (bench->parsed()) return cmd_bench(opts, list_path, variants, easy_secs, jobs, output);
        if (cactus->parsed()) return cmd_cactus(csv_path, output);
        if (genc->parsed()) return cmd_gen(gen);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
