#include "mcs/policy.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcs {

const char* heuristic_name(Heuristic h) {
    switch (h) {
        case Heuristic::mcsplit: return "mcsplit";
        case Heuristic::rl: return "rl";
        case Heuristic::sm: return "sm";
        case Heuristic::lsm: return "lsm";
    }
    return "?";
}

Heuristic heuristic_from_name(std::string_view name) {
    if (name == "mcsplit") return Heuristic::mcsplit;
    if (name == "rl") return Heuristic::rl;
    if (name == "sm") return Heuristic::sm;
    if (name == "lsm") return Heuristic::lsm;
    throw std::invalid_argument("unknown heuristic: " + std::string(name));
}

ScoreState::ScoreState(int n0, int n1, bool with_pair_table, std::uint64_t t_short,
                       std::uint64_t t_long, std::size_t pair_cell_budget)
    : n1_(n1),
      t_short_(t_short),
      t_long_(t_long),
      s0_(static_cast<std::size_t>(n0), 0),
      s1_(static_cast<std::size_t>(n1), 0) {
    if (with_pair_table) {
        const std::size_t cells = static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1);
        pair_dense_ = cells <= pair_cell_budget;
        if (pair_dense_)
            pair_dense_table_.assign(cells, 0);
        else
            pair_rows_.resize(static_cast<std::size_t>(n0));
    }
}

std::uint64_t ScoreState::pair_score(int p, int q) const {
    if (pair_dense_) {
        if (pair_dense_table_.empty()) return 0;
        return pair_dense_table_[static_cast<std::size_t>(p) * n1_ + q];
    }
    const auto& row = pair_rows_[static_cast<std::size_t>(p)];
    auto it = row.find(q);
    return it == row.end() ? 0 : it->second;
}

std::uint64_t ScoreState::add_s0(int p, std::uint64_t r) {
    return s0_[static_cast<std::size_t>(p)] += r;
}

std::uint64_t ScoreState::add_s1(int q, std::uint64_t r) {
    return s1_[static_cast<std::size_t>(q)] += r;
}

std::uint64_t ScoreState::add_pair(int p, int q, std::uint64_t r) {
    if (pair_dense_)
        return pair_dense_table_[static_cast<std::size_t>(p) * n1_ + q] += r;
    return pair_rows_[static_cast<std::size_t>(p)][q] += r;
}

void ScoreState::halve_s0() {
    for (std::uint64_t& s : s0_) s /= 2;
}

void ScoreState::halve_s1() {
    for (std::uint64_t& s : s1_) s /= 2;
}

void ScoreState::halve_pair_row(int p) {
    if (pair_dense_) {
        auto row = pair_dense_table_.begin() + static_cast<std::ptrdiff_t>(p) * n1_;
        for (int j = 0; j < n1_; ++j) row[j] /= 2;
    } else {
        for (auto& [_, s] : pair_rows_[static_cast<std::size_t>(p)]) s /= 2;
    }
}

std::uint64_t reward(int bound_before, int bound_after) {
    if (bound_after < 0 || bound_before < bound_after)
        throw InternalError("reward: bound grew from " + std::to_string(bound_before) + " to " +
                            std::to_string(bound_after));
    return static_cast<std::uint64_t>(bound_before - bound_after);
}

void update_scores(ScoreState& state, const PolicyVariant& variant, int p, int q,
                   std::uint64_t r) {
    switch (variant.tag) {
        case Heuristic::mcsplit:
            throw InternalError("update_scores: mcsplit keeps no scores");
        case Heuristic::rl:
            state.add_s0(p, r);
            state.add_s1(q, r);
            break;
        case Heuristic::sm:
            if (state.add_s0(p, r) > state.t_short()) state.halve_s0();
            if (state.add_s1(q, r) > state.t_short()) state.halve_s1();
            break;
        case Heuristic::lsm:
            if (state.add_s0(p, r) > state.t_short()) state.halve_s0();
            if (state.add_pair(p, q, r) > state.t_long()) state.halve_pair_row(p);
            break;
    }
}

int select_first_vertex(std::span<const int> left, const Graph& g0, const ScoreState& state,
                        const PolicyVariant& variant) {
    int best = -1;
    std::uint64_t best_score = 0;
    int best_deg = -1;
    for (int v : left) {
        const std::uint64_t score =
            variant.tag == Heuristic::mcsplit ? 0 : state.s0(v);
        const int deg = g0.degree(v);
        if (best >= 0) {
            if (score < best_score) continue;
            if (score == best_score && (deg < best_deg || (deg == best_deg && v > best)))
                continue;
        }
        best = v;
        best_score = score;
        best_deg = deg;
    }
    return best;
}

std::uint64_t second_vertex_score(int p, int q, const ScoreState& state,
                                  const PolicyVariant& variant) {
    switch (variant.tag) {
        case Heuristic::mcsplit: return 0;
        case Heuristic::rl:
        case Heuristic::sm: return state.s1(q);
        case Heuristic::lsm: return state.pair_score(p, q);
    }
    return 0;
}

std::vector<int> order_second_vertices(std::span<const int> right, int p, const Graph& g1,
                                       const ScoreState& state, const PolicyVariant& variant) {
    std::vector<int> order(right.begin(), right.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const std::uint64_t sa = second_vertex_score(p, a, state, variant);
        const std::uint64_t sb = second_vertex_score(p, b, state, variant);
        if (sa != sb) return sa > sb;
        const int da = g1.degree(a), db = g1.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

}  // namespace mcs
