#include "mcs/search.hpp"

#include <chrono>

#include "mcs/bidomain.hpp"
#include "mcs/lum.hpp"

namespace mcs {

bool should_stop(const SearchStats& stats, const SolverConfig& config, double elapsed_seconds) {
    if (config.node_budget && stats.nodes_expanded > *config.node_budget) return true;
    return elapsed_seconds > config.timeout_seconds;
}

namespace {

using Clock = std::chrono::steady_clock;

class Engine {
public:
    Engine(const Graph& g0, const Graph& g1, const SolverConfig& cfg)
        : g0_(g0),
          g1_(g1),
          cfg_(cfg),
          domains_(g0, g1),
          scores_(g0.n(), g1.n(), cfg.variant.tag == Heuristic::lsm, cfg.t_short, cfg.t_long,
                  cfg.pair_cell_budget),
          tried_(static_cast<std::size_t>(g1.n()), 0) {}

    SolveResult run() {
        start_ = Clock::now();
        node();
        stats_.wall_time = elapsed();
        stats_.completed = !aborted_;
        return {Solution{std::move(best_)}, std::move(stats_)};
    }

private:
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    bool stop_check() {
        if (aborted_) return true;
        if (cfg_.node_budget && stats_.nodes_expanded > *cfg_.node_budget) {
            aborted_ = true;
            return true;
        }
        // Amortised clock read: the budget check above is exact, the
        // timeout is only probed every 1024 nodes.
        if ((stats_.nodes_expanded & 1023u) == 0 && elapsed() > cfg_.timeout_seconds) {
            aborted_ = true;
            return true;
        }
        return false;
    }

    void record_improvement() {
        best_ = cur_;
        stats_.best_size_trajectory.emplace_back(elapsed(), static_cast<int>(best_.size()));
        if (cfg_.on_improve) cfg_.on_improve(best_);
    }

    // Residual candidate sets for the instrumentation hooks.
    void fire_hook(const SolverConfig::StateHook& hook, int bound) {
        avail0_.clear();
        avail1_.clear();
        for (int i = 0; i < domains_.entry_count(); ++i) {
            auto l = domains_.left_of(i);
            auto r = domains_.right_of(i);
            avail0_.insert(avail0_.end(), l.begin(), l.end());
            avail1_.insert(avail1_.end(), r.begin(), r.end());
        }
        hook(cur_, avail0_, avail1_, bound, static_cast<int>(best_.size()));
    }

    void apply_lum(int p, int q) {
        auto avail_left = [&](int v) { return domains_.find_entry_left(v) >= 0; };
        auto avail_right = [&](int v) { return domains_.find_entry_right(v) >= 0; };
        for (auto [x, y] : union_match_leaves(g0_, g1_, p, q, avail_left, avail_right)) {
            domains_.detach_left(domains_.find_entry_left(x), x);
            domains_.detach_right(domains_.find_entry_right(y), y);
            cur_.emplace_back(x, y);
            ++stats_.lum_pairs_matched;
        }
    }

    // One search node. The final "leave p unmatched" branch continues the
    // loop instead of recursing, so recursion depth stays bounded by the
    // matched-pair count.
    void node() {
        const auto node_mark = domains_.mark();
        for (;;) {
            ++stats_.nodes_expanded;
            if (stop_check()) break;
            const int bound = domains_.over_estimate();
            if (cfg_.on_node) fire_hook(cfg_.on_node, bound);
            if (cur_.size() + static_cast<std::size_t>(bound) <= best_.size()) {
                ++stats_.prunes;
                if (cfg_.on_prune) fire_hook(cfg_.on_prune, bound);
                break;
            }
            const int bd = domains_.select_bidomain(cfg_.connected, !cur_.empty());
            if (bd < 0) break;
            const int p =
                select_first_vertex(domains_.left_of(bd), g0_, scores_, cfg_.variant);

            // Marks are stamped per node and journalled: descendants may try
            // the same target vertex, so their overwrites must be rolled
            // back before this loop resumes.
            const std::uint64_t my_stamp = ++stamp_;
            const std::size_t trail_mark = tried_trail_.size();
            for (;;) {
                const int q =
                    pick_second_vertex(domains_.right_of(bd), p, g1_, scores_, cfg_.variant,
                                       [&](int w) { return tried_[static_cast<std::size_t>(w)] == my_stamp; });
                if (q < 0) break;
                tried_trail_.emplace_back(q, tried_[static_cast<std::size_t>(q)]);
                tried_[static_cast<std::size_t>(q)] = my_stamp;

                const auto branch_mark = domains_.mark();
                const std::size_t cur_base = cur_.size();
                domains_.detach_left(bd, p);
                domains_.detach_right(bd, q);
                cur_.emplace_back(p, q);
                if (cfg_.variant.lum_enabled) apply_lum(p, q);
                if (cur_.size() > best_.size()) record_improvement();
                domains_.divide(p, q);
                const std::uint64_t r = reward(bound, domains_.over_estimate());
                if (cfg_.variant.tag != Heuristic::mcsplit)
                    update_scores(scores_, cfg_.variant, p, q, r);
                node();
                cur_.resize(cur_base);
                domains_.rollback(branch_mark);
                if (aborted_) break;
            }
            while (tried_trail_.size() > trail_mark) {
                auto [w, old] = tried_trail_.back();
                tried_trail_.pop_back();
                tried_[static_cast<std::size_t>(w)] = old;
            }
            if (aborted_) break;
            domains_.remove_left_vertex_at(bd, p);
        }
        domains_.rollback(node_mark);
    }

    const Graph& g0_;
    const Graph& g1_;
    const SolverConfig& cfg_;
    BidomainList domains_;
    ScoreState scores_;
    std::vector<std::pair<int, int>> cur_, best_;
    std::vector<int> avail0_, avail1_;
    SearchStats stats_;
    std::vector<std::uint64_t> tried_;
    std::vector<std::pair<int, std::uint64_t>> tried_trail_;
    std::uint64_t stamp_ = 0;
    Clock::time_point start_;
    bool aborted_ = false;
};

}  // namespace

SolveResult solve(const Graph& g0, const Graph& g1, const SolverConfig& config) {
    Engine engine(g0, g1, config);
    return engine.run();
}

}  // namespace mcs
