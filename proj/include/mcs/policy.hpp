#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mcs/graph.hpp"

namespace mcs {

enum class Heuristic { mcsplit, rl, sm, lsm };

const char* heuristic_name(Heuristic h);
Heuristic heuristic_from_name(std::string_view name);

struct PolicyVariant {
    Heuristic tag = Heuristic::mcsplit;
    bool lum_enabled = false;
};

inline constexpr std::uint64_t kDefaultShortThreshold = 100'000;
inline constexpr std::uint64_t kDefaultLongThreshold = 1'000'000'000;

// Above this many cells the pair table falls back to hashed rows.
inline constexpr std::size_t kDefaultPairCellBudget = std::size_t{1} << 25;

/// Accumulated branching rewards. s0/s1 are per-vertex scores; the pair
/// table records rewards per branched pair and is only allocated when the
/// variant needs it. Crossing t_short halves an entire vertex list;
/// crossing t_long halves one pair-table row, rows independently.
class ScoreState {
public:
    ScoreState() = default;
    ScoreState(int n0, int n1, bool with_pair_table,
               std::uint64_t t_short = kDefaultShortThreshold,
               std::uint64_t t_long = kDefaultLongThreshold,
               std::size_t pair_cell_budget = kDefaultPairCellBudget);

    std::uint64_t s0(int p) const { return s0_[static_cast<std::size_t>(p)]; }
    std::uint64_t s1(int q) const { return s1_[static_cast<std::size_t>(q)]; }
    std::uint64_t pair_score(int p, int q) const;

    std::uint64_t t_short() const { return t_short_; }
    std::uint64_t t_long() const { return t_long_; }

    std::uint64_t add_s0(int p, std::uint64_t r);
    std::uint64_t add_s1(int q, std::uint64_t r);
    std::uint64_t add_pair(int p, int q, std::uint64_t r);
    void halve_s0();
    void halve_s1();
    void halve_pair_row(int p);

private:
    int n1_ = 0;
    std::uint64_t t_short_ = kDefaultShortThreshold;
    std::uint64_t t_long_ = kDefaultLongThreshold;
    bool pair_dense_ = true;
    std::vector<std::uint64_t> s0_, s1_;
    std::vector<std::uint64_t> pair_dense_table_;
    std::vector<std::unordered_map<int, std::uint64_t>> pair_rows_;
};

/// Bound reduction of a branching step. Throws InternalError when the
/// bound grew, which would indicate a partition bug.
std::uint64_t reward(int bound_before, int bound_after);

/// Applies one branching update for the given variant: rl accumulates
/// s0/s1, sm additionally decays them at t_short, lsm accumulates s0 and
/// the pair table with their respective decays. Must not be called for the
/// mcsplit variant, which keeps no scores.
void update_scores(ScoreState& state, const PolicyVariant& variant, int p, int q,
                   std::uint64_t r);

/// First-vertex choice from a class's left side: score under the variant
/// (degree for mcsplit), ties by larger degree then lower index.
int select_first_vertex(std::span<const int> left, const Graph& g0, const ScoreState& state,
                        const PolicyVariant& variant);

/// Key for enumerating second vertices, before the shared degree/index
/// tie-break: degree for mcsplit, s1 for rl/sm, the pair score for lsm.
std::uint64_t second_vertex_score(int p, int q, const ScoreState& state,
                                  const PolicyVariant& variant);

/// Picks the best not-yet-tried second vertex, or -1. Evaluated against
/// current scores, so repeated calls realise the re-sorted enumeration.
template <class Skip>
int pick_second_vertex(std::span<const int> right, int p, const Graph& g1,
                       const ScoreState& state, const PolicyVariant& variant, Skip&& skip) {
    int best = -1;
    std::uint64_t best_score = 0;
    int best_deg = -1;
    for (int q : right) {
        if (skip(q)) continue;
        const std::uint64_t score = second_vertex_score(p, q, state, variant);
        const int deg = g1.degree(q);
        if (best >= 0) {
            if (score < best_score) continue;
            if (score == best_score && (deg < best_deg || (deg == best_deg && q > best)))
                continue;
        }
        best = q;
        best_score = score;
        best_deg = deg;
    }
    return best;
}

/// Full enumeration order of a class's right side under current scores.
std::vector<int> order_second_vertices(std::span<const int> right, int p, const Graph& g1,
                                       const ScoreState& state, const PolicyVariant& variant);

}  // namespace mcs
