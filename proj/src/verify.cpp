#include "mcs/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mcs {

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::not_injective: return "not-injective";
        case ViolationKind::adjacency_mismatch: return "adjacency-mismatch";
        case ViolationKind::direction_mismatch: return "direction-mismatch";
        case ViolationKind::label_mismatch: return "label-mismatch";
        case ViolationKind::edge_label_mismatch: return "edge-label-mismatch";
        case ViolationKind::not_connected: return "not-connected";
    }
    return "?";
}

std::string Violation::to_string() const {
    std::string s = violation_kind_name(kind);
    s += " at (" + std::to_string(p0) + "," + std::to_string(q0) + ")";
    if (p1 >= 0) s += " vs (" + std::to_string(p1) + "," + std::to_string(q1) + ")";
    return s;
}

namespace {

bool g0_side_connected(const Graph& g0, const std::vector<int>& verts) {
    if (verts.size() <= 1) return true;
    std::vector<int> stack{verts[0]};
    std::vector<bool> seen(static_cast<std::size_t>(g0.n()), false);
    seen[static_cast<std::size_t>(verts[0])] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : verts) {
            if (!seen[static_cast<std::size_t>(v)] && g0.adjacent(u, v)) {
                seen[static_cast<std::size_t>(v)] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == verts.size();
}

}  // namespace

VerifyReport verify_solution(const Graph& g0, const Graph& g1, const Solution& sol,
                             bool connected) {
    VerifyReport report;
    auto flag = [&report](Violation v) {
        report.valid = false;
        report.violations.push_back(v);
    };

    for (auto [p, q] : sol.pairs) {
        if (p < 0 || p >= g0.n() || q < 0 || q >= g1.n())
            throw std::out_of_range("verify_solution: vertex index out of range");
    }

    std::vector<bool> used0(static_cast<std::size_t>(g0.n()), false);
    std::vector<bool> used1(static_cast<std::size_t>(g1.n()), false);
    for (auto [p, q] : sol.pairs) {
        if (used0[static_cast<std::size_t>(p)] || used1[static_cast<std::size_t>(q)])
            flag({ViolationKind::not_injective, p, q});
        used0[static_cast<std::size_t>(p)] = true;
        used1[static_cast<std::size_t>(q)] = true;
        if (g0.vertex_label(p) != g1.vertex_label(q))
            flag({ViolationKind::label_mismatch, p, q});
    }

    const auto& pairs = sol.pairs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [p0, q0] = pairs[i];
            auto [p1, q1] = pairs[j];
            const std::uint16_t a_out = g0.cell(p0, p1), a_in = g0.cell(p1, p0);
            const std::uint16_t b_out = g1.cell(q0, q1), b_in = g1.cell(q1, q0);
            const bool ao = a_out != 0, ai = a_in != 0;
            const bool bo = b_out != 0, bi = b_in != 0;
            if (ao != bo || ai != bi) {
                // Same arcs but flipped is a direction error; anything else
                // is a plain presence mismatch.
                if (ao == bi && ai == bo)
                    flag({ViolationKind::direction_mismatch, p0, q0, p1, q1});
                else
                    flag({ViolationKind::adjacency_mismatch, p0, q0, p1, q1});
            } else if (a_out != b_out || a_in != b_in) {
                flag({ViolationKind::edge_label_mismatch, p0, q0, p1, q1});
            }
        }
    }

    if (connected) {
        std::vector<int> verts;
        verts.reserve(pairs.size());
        for (auto [p, q] : pairs) verts.push_back(p);
        if (!g0_side_connected(g0, verts))
            flag({ViolationKind::not_connected, pairs.empty() ? -1 : pairs[0].first,
                  pairs.empty() ? -1 : pairs[0].second});
    }
    return report;
}

namespace {

// Backtracking injection of the ordered subset into g1, honouring vertex
// labels, adjacency, direction and edge labels against all earlier picks.
bool extend_injection(const Graph& g0, const Graph& g1, const std::vector<int>& subset,
                      std::size_t idx, std::vector<int>& image, std::vector<bool>& used) {
    if (idx == subset.size()) return true;
    const int p = subset[idx];
    for (int q = 0; q < g1.n(); ++q) {
        if (used[static_cast<std::size_t>(q)]) continue;
        if (g0.vertex_label(p) != g1.vertex_label(q)) continue;
        bool ok = true;
        for (std::size_t k = 0; k < idx; ++k) {
            const int p2 = subset[k], q2 = image[k];
            if (g0.cell(p, p2) != g1.cell(q, q2) || g0.cell(p2, p) != g1.cell(q2, q)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[static_cast<std::size_t>(q)] = true;
        image[idx] = q;
        if (extend_injection(g0, g1, subset, idx + 1, image, used)) return true;
        used[static_cast<std::size_t>(q)] = false;
    }
    return false;
}

}  // namespace

int brute_force_best(const Graph& g0, const Graph& g1, bool connected, int cap) {
    if (g0.n() > cap)
        throw std::invalid_argument("brute_force_best: |V(g0)|=" + std::to_string(g0.n()) +
                                    " exceeds cap " + std::to_string(cap));
    const int n0 = g0.n();
    const int max_k = std::min(n0, g1.n());
    for (int k = max_k; k >= 1; --k) {
        for (std::uint32_t mask = 0; mask < (1u << n0); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<int> subset;
            for (int v = 0; v < n0; ++v)
                if (mask & (1u << v)) subset.push_back(v);
            if (connected && !g0_side_connected(g0, subset)) continue;
            std::vector<int> image(subset.size(), -1);
            std::vector<bool> used(static_cast<std::size_t>(g1.n()), false);
            if (extend_injection(g0, g1, subset, 0, image, used)) return k;
        }
    }
    return 0;
}

}  // namespace mcs
