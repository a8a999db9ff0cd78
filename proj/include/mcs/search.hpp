#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcs/graph.hpp"
#include "mcs/policy.hpp"

namespace mcs {

/// An ordered list of matched vertex pairs (g0 vertex, g1 vertex)
/// realising the common-subgraph bijection.
struct Solution {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
};

using MatchSpan = std::span<const std::pair<int, int>>;

struct SolverConfig {
    PolicyVariant variant{};
    bool connected = false;
    double timeout_seconds = 1800.0;
    std::optional<std::uint64_t> node_budget;
    std::uint64_t t_short = kDefaultShortThreshold;
    std::uint64_t t_long = kDefaultLongThreshold;
    std::size_t pair_cell_budget = kDefaultPairCellBudget;

    // Test instrumentation; never set in production runs. avail0/avail1 are
    // the vertices still present in the candidate partition, i.e. the
    // residual state the subtree may still draw matches from.
    using StateHook = std::function<void(MatchSpan cur, std::span<const int> avail0,
                                         std::span<const int> avail1, int bound, int best_size)>;
    StateHook on_node;
    StateHook on_prune;
    std::function<void(MatchSpan best)> on_improve;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t prunes = 0;
    std::uint64_t lum_pairs_matched = 0;
    std::vector<std::pair<double, int>> best_size_trajectory;  // (elapsed seconds, size)
    double wall_time = 0.0;
    bool completed = true;
};

struct SolveResult {
    Solution solution;
    SearchStats stats;
};

/// Exact branch-and-bound search for the maximum common induced subgraph
/// (connected variant when config.connected). Returns the optimum with
/// completed=true, or the best solution found so far with completed=false
/// once the timeout or node budget is exceeded.
SolveResult solve(const Graph& g0, const Graph& g1, const SolverConfig& config = {});

/// Cutoff predicate: true once the node budget or the timeout is exceeded.
bool should_stop(const SearchStats& stats, const SolverConfig& config, double elapsed_seconds);

}  // namespace mcs
