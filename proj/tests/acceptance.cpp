// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exits nonzero if any fail.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "mcs/bench.hpp"
#include "mcs/bidomain.hpp"
#include "mcs/gen.hpp"
#include "mcs/graph.hpp"
#include "mcs/search.hpp"
#include "mcs/verify.hpp"
#include "support/oracles.hpp"

using namespace mcs;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (detail.empty()) detail = what;
    }
};

std::string fixture(const std::string& name) {
    return testsupport::fixture_dir() + "/" + name;
}

const std::vector<PolicyVariant> kAllVariants = {
    {Heuristic::mcsplit, false}, {Heuristic::mcsplit, true}, {Heuristic::rl, false},
    {Heuristic::rl, true},       {Heuristic::sm, false},     {Heuristic::sm, true},
    {Heuristic::lsm, false},     {Heuristic::lsm, true},
};

std::vector<int> sorted(std::span<const int> s) {
    std::vector<int> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

// --- criterion 1: golden three-match bidomain trace ------------------------

Outcome criterion_golden_trace() {
    Outcome out;
    Graph g0 = load_graph(fixture("fig1_g0.txt"), GraphFormat::text, false, false);
    Graph g1 = load_graph(fixture("fig1_g1.txt"), GraphFormat::text, false, false);
    BidomainList dl(g0, g1);
    if (dl.entry_count() != 1 || dl.over_estimate() != 7)
        out.fail("initial class should be <{0..7},{0..6}> with bound 7");
    for (int v = 0; v < 3; ++v) {
        dl.detach_left(dl.find_entry_left(v), v);
        dl.detach_right(dl.find_entry_right(v), v);
        dl.divide(v, v);
    }
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{5}, {5}}, {{6, 7}, {3}}, {{3}, {4}}};
    if (dl.entry_count() != 3) {
        out.fail("expected exactly 3 classes, got " + std::to_string(dl.entry_count()));
    } else {
        for (int i = 0; i < 3; ++i) {
            if (sorted(dl.left_of(i)) != expected[static_cast<std::size_t>(i)].first ||
                sorted(dl.right_of(i)) != expected[static_cast<std::size_t>(i)].second)
                out.fail("class " + std::to_string(i) + " mismatch");
        }
    }
    if (dl.over_estimate() != 3) out.fail("bound after three matches should be 3");
    out.note("classes {5}/{5}, {6,7}/{3}, {3}/{4}, bound 3");
    return out;
}

// --- criterion 2: oracle equivalence sweep ---------------------------------

Outcome criterion_oracle_equivalence() {
    Outcome out;
    int runs = 0;
    for (bool directed : {false, true}) {
        std::mt19937 rng(directed ? 9001 : 9000);
        for (int iter = 0; iter < 200; ++iter) {
            GenSpec spec;
            spec.n = 3 + static_cast<int>(rand_below(rng, 5));  // 3..7
            spec.edge_prob = 0.1 + 0.7 * (rng() / 4294967296.0);
            spec.directed = directed;
            Graph g0 = random_graph(spec, rng);
            spec.n = 3 + static_cast<int>(rand_below(rng, 5));
            Graph g1 = random_graph(spec, rng);
            for (bool connected : {false, true}) {
                const int expected = brute_force_best(g0, g1, connected);
                for (const auto& variant : kAllVariants) {
                    SolverConfig cfg;
                    cfg.variant = variant;
                    cfg.connected = connected;
                    const auto res = solve(g0, g1, cfg);
                    ++runs;
                    if (!res.stats.completed || res.solution.size() != expected) {
                        out.fail("size mismatch (directed=" + std::to_string(directed) +
                                 " connected=" + std::to_string(connected) + " iter=" +
                                 std::to_string(iter) + " variant=" +
                                 heuristic_name(variant.tag) +
                                 (variant.lum_enabled ? "+lum" : "") + ")");
                        return out;
                    }
                    if (!verify_solution(g0, g1, res.solution, connected).valid) {
                        out.fail("invalid solution at iter " + std::to_string(iter));
                        return out;
                    }
                }
            }
        }
    }
    out.note(std::to_string(runs) + " solver runs, all equal to the oracle");
    return out;
}

// --- criterion 3: leaf-matching invariance ---------------------------------

Outcome criterion_lum_invariance() {
    Outcome out;
    std::mt19937 rng(4242);
    int node_le = 0;
    const int total = 100;
    for (int iter = 0; iter < total; ++iter) {
        GenSpec spec;
        spec.n = 4 + static_cast<int>(rand_below(rng, 3));  // 4..6 base vertices
        spec.edge_prob = 0.2 + 0.5 * (rng() / 4294967296.0);
        spec.directed = rand_chance(rng, 0.3);
        spec.vertex_label_count = rand_chance(rng, 0.3) ? 2 : 1;
        Graph g0 = plant_leaves(random_graph(spec, rng), 3, rng, spec.vertex_label_count, 1);
        Graph g1 = plant_leaves(random_graph(spec, rng), 3, rng, spec.vertex_label_count, 1);

        // Node comparison under the score-free policy isolates the leaf
        // matching itself; learned policies see different reward streams
        // with and without it, which churns their branching both ways.
        SolverConfig with;
        with.variant = {Heuristic::mcsplit, true};
        SolverConfig without = with;
        without.variant.lum_enabled = false;
        const auto a = solve(g0, g1, with);
        const auto b = solve(g0, g1, without);
        if (a.solution.size() != b.solution.size()) {
            out.fail("size changed with leaf matching at iter " + std::to_string(iter) + " (" +
                     std::to_string(a.solution.size()) + " vs " +
                     std::to_string(b.solution.size()) + ")");
            return out;
        }
        if (!verify_solution(g0, g1, a.solution, false).valid) {
            out.fail("invalid solution at iter " + std::to_string(iter));
            return out;
        }
        SolverConfig with_rl;
        with_rl.variant = {Heuristic::rl, true};
        if (solve(g0, g1, with_rl).solution.size() != a.solution.size()) {
            out.fail("size changed under the learned policy at iter " + std::to_string(iter));
            return out;
        }
        if (a.stats.nodes_expanded <= b.stats.nodes_expanded) ++node_le;
    }
    if (node_le < 95)
        out.fail("node count grew with leaf matching on " + std::to_string(total - node_le) +
                 "/100 instances");
    out.note("sizes identical on 100/100; nodes <= on " + std::to_string(node_le) + "/100");
    return out;
}

// --- criterion 4: decay semantics ------------------------------------------

Outcome criterion_decay() {
    Outcome out;
    {
        // s0 crossing t_short halves the whole list.
        ScoreState s(3, 3, true);
        s.add_s0(0, 40);
        s.add_s0(1, 99'999);
        s.add_s0(2, 7);
        update_scores(s, {Heuristic::lsm, false}, 1, 0, 2);
        if (s.s0(0) != 20 || s.s0(1) != 50'000 || s.s0(2) != 3)
            out.fail("s0 decay arithmetic");
    }
    {
        // Pair-table crossing t_long halves exactly its row.
        ScoreState s(3, 3, true);
        s.add_pair(1, 0, kDefaultLongThreshold - 1);
        s.add_pair(1, 1, 10);
        s.add_pair(1, 2, 11);
        s.add_pair(2, 0, 77);
        update_scores(s, {Heuristic::lsm, false}, 1, 0, 2);
        if (s.pair_score(1, 0) != (kDefaultLongThreshold + 1) / 2 || s.pair_score(1, 1) != 5 ||
            s.pair_score(1, 2) != 5)
            out.fail("pair row decay arithmetic");
        if (s.pair_score(2, 0) != 77) out.fail("pair decay leaked into another row");
    }
    {
        // sm halves s0 and s1 independently at t_short.
        ScoreState s(2, 2, false, 10, 1000);
        update_scores(s, {Heuristic::sm, false}, 0, 0, 11);
        if (s.s0(0) != 5 || s.s1(0) != 5) out.fail("sm first update");
        update_scores(s, {Heuristic::sm, false}, 1, 0, 9);
        if (s.s0(1) != 9 || s.s0(0) != 5) out.fail("sm s0 decayed without crossing");
        if (s.s1(0) != 7) out.fail("sm s1 should halve independently");
    }
    {
        // rl never decays.
        ScoreState s(2, 2, false, 10, 10);
        update_scores(s, {Heuristic::rl, false}, 0, 1, 50);
        if (s.s0(0) != 50 || s.s1(1) != 50) out.fail("rl must not decay");
    }
    out.note("threshold crossings pinned exactly");
    return out;
}

// --- criterion 5: directional ablation via the bench CLI -------------------

Outcome criterion_ablation() {
    Outcome out;
    const char* bin = std::getenv("MCSOLVE_BIN");
    if (!bin || !*bin) {
        out.fail("MCSOLVE_BIN not set");
        return out;
    }
    const fs::path list = fs::path(fixture("moderate")) / "instances.txt";
    if (!fs::exists(list)) {
        out.fail("missing " + list.string());
        return out;
    }
    const fs::path csv_path = fs::temp_directory_path() / "mcs_acceptance_bench.csv";
    const fs::path summary_path = fs::temp_directory_path() / "mcs_acceptance_bench.log";
    std::ostringstream cmd;
    cmd << '"' << bin << '"' << " bench --list " << list << " --variants rl,lsm+lum"
        << " --timeout 300 --easy-secs 0.001 --output " << csv_path << " 2> " << summary_path;
    if (std::system(cmd.str().c_str()) != 0) {
        out.fail("bench run failed");
        return out;
    }
    std::ifstream csv_in(csv_path);
    const auto rows = parse_csv(csv_in);
    const auto classes = classify_instances(rows, 0.001);
    std::vector<std::string> moderate;
    for (const auto& c : classes)
        if (c.cls == InstanceClass::moderate) moderate.push_back(c.instance);
    if (moderate.size() < 20)
        out.fail("only " + std::to_string(moderate.size()) + " moderate instances");
    for (const auto& r : rows)
        if (r.error || !r.solved) out.fail("unsolved or failed row: " + r.instance);

    const auto means = geomean_nodes(rows, moderate);
    double rl = 0, ll = 0;
    for (const auto& m : means) {
        if (m.series == "rl") rl = m.geomean_nodes;
        if (m.series == "lsm+lum") ll = m.geomean_nodes;
    }
    if (rl <= 0 || ll <= 0) {
        out.fail("missing geometric means");
        return out;
    }
    if (ll > rl)
        out.fail("direction violated: lsm+lum geomean " + std::to_string(ll) + " > rl " +
                 std::to_string(rl));
    // The CLI must have emitted the per-instance table and the comparison.
    std::ifstream summary_in(summary_path);
    std::stringstream summary;
    summary << summary_in.rdbuf();
    if (summary.str().find("per-instance nodes") == std::string::npos ||
        summary.str().find("geometric-mean node ratio") == std::string::npos)
        out.fail("bench summary missing the table or comparison");
    std::ostringstream note;
    note << moderate.size() << " moderate instances; geomean nodes lsm+lum " << std::fixed
         << std::setprecision(0) << ll << " vs rl " << rl << " (ratio "
         << std::setprecision(3) << ll / rl << ")";
    out.note(note.str());
    return out;
}

// --- criterion 6: determinism ----------------------------------------------

Outcome criterion_determinism() {
    Outcome out;
    struct Case {
        Graph g0, g1;
        std::string name;
    };
    std::vector<Case> cases;
    cases.push_back({load_graph(fixture("fig1_g0.txt"), GraphFormat::text, false, false),
                     load_graph(fixture("fig1_g1.txt"), GraphFormat::text, false, false),
                     "fig1"});
    const auto instances = read_instance_list(fixture("moderate") + "/instances.txt");
    for (std::size_t i = 0; i < std::min<std::size_t>(2, instances.size()); ++i)
        cases.push_back({load_graph(instances[i].pattern, GraphFormat::binary, false, false),
                         load_graph(instances[i].target, GraphFormat::binary, false, false),
                         instances[i].id});
    for (const auto& c : cases) {
        for (const auto& variant : {PolicyVariant{Heuristic::rl, false},
                                    PolicyVariant{Heuristic::lsm, true}}) {
            SolverConfig cfg;
            cfg.variant = variant;
            cfg.timeout_seconds = 120;
            const auto a = solve(c.g0, c.g1, cfg);
            const auto b = solve(c.g0, c.g1, cfg);
            if (a.solution.pairs != b.solution.pairs ||
                a.stats.nodes_expanded != b.stats.nodes_expanded ||
                a.solution.size() != b.solution.size())
                out.fail("nondeterministic run on " + c.name);
        }
    }
    out.note(std::to_string(cases.size()) + " instances x 2 variants, identical reruns");
    return out;
}

// --- criterion 7: instrumented prune soundness ------------------------------

Outcome criterion_prune_soundness() {
    Outcome out;
    std::mt19937 rng(31337);
    std::uint64_t prunes_checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        GenSpec spec;
        spec.n = 4 + static_cast<int>(rand_below(rng, 4));  // 4..7
        spec.edge_prob = 0.15 + 0.6 * (rng() / 4294967296.0);
        spec.directed = rand_chance(rng, 0.3);
        Graph g0 = random_graph(spec, rng);
        spec.n = 4 + static_cast<int>(rand_below(rng, 4));
        Graph g1 = random_graph(spec, rng);
        for (bool connected : {false, true}) {
            for (const auto& variant :
                 {PolicyVariant{Heuristic::mcsplit, false}, PolicyVariant{Heuristic::lsm, true}}) {
                SolverConfig cfg;
                cfg.variant = variant;
                cfg.connected = connected;
                bool sound = true;
                cfg.on_prune = [&](MatchSpan cur, std::span<const int> a0,
                                   std::span<const int> a1, int, int best_size) {
                    ++prunes_checked;
                    if (testsupport::best_extension_size(g0, g1, cur, a0, a1, connected) >
                        best_size)
                        sound = false;
                };
                solve(g0, g1, cfg);
                if (!sound) {
                    out.fail("unsound prune at iter " + std::to_string(iter));
                    return out;
                }
            }
        }
    }
    out.note(std::to_string(prunes_checked) + " prunes checked against the residual oracle");
    return out;
}

// --- criterion 8: format fidelity -------------------------------------------

Outcome criterion_format_fidelity() {
    Outcome out;
    std::mt19937 rng(616);
    for (int i = 0; i < 100; ++i) {
        GenSpec spec;
        spec.n = 1 + static_cast<int>(rand_below(rng, 60));
        spec.edge_prob = 0.02 + 0.4 * (rng() / 4294967296.0);
        spec.directed = rand_chance(rng, 0.5);
        spec.vertex_label_count = rand_chance(rng, 0.5) ? 1 : 5;
        spec.edge_label_count = spec.vertex_label_count == 1 ? 1 : 3;
        Graph g = random_graph(spec, rng);
        Graph back = parse_binary_graph(serialize_binary_graph(g), g.directed(), g.labelled());
        if (!(back == g)) {
            out.fail("round-trip mismatch at iter " + std::to_string(i));
            return out;
        }
    }
    int corpus_files = 0;
    const fs::path corpus = fixture("corpus");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.path().extension() == ".bin") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        const std::string name = path.filename().string();
        const bool directed = name.find("_dir") != std::string::npos;
        const bool labelled = name.find("_lab") != std::string::npos;
        try {
            Graph g = load_graph(path, GraphFormat::binary, directed, labelled);
            Graph back =
                parse_binary_graph(serialize_binary_graph(g), g.directed(), g.labelled());
            if (!(back == g)) out.fail("corpus round-trip mismatch: " + name);
            ++corpus_files;
        } catch (const std::exception& e) {
            out.fail("corpus parse failure on " + name + ": " + e.what());
        }
    }
    if (corpus_files < 4) out.fail("corpus sample too small");
    out.note("100 random round-trips plus " + std::to_string(corpus_files) + " corpus files");
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "golden bidomain trace", criterion_golden_trace},
        {2, "oracle equivalence sweep", criterion_oracle_equivalence},
        {3, "leaf-match invariance", criterion_lum_invariance},
        {4, "decay semantics", criterion_decay},
        {5, "directional ablation (bench)", criterion_ablation},
        {6, "determinism", criterion_determinism},
        {7, "prune soundness (instrumented)", criterion_prune_soundness},
        {8, "format fidelity", criterion_format_fidelity},
    };
    bool all_pass = true;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " (" << std::fixed << std::setprecision(1) << secs << "s)"
                  << (out.detail.empty() ? "" : " -- " + out.detail) << std::endl;
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
