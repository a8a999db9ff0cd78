#pragma once

#include <string>
#include <vector>

#include "mcs/graph.hpp"
#include "mcs/search.hpp"

namespace mcs {

enum class ViolationKind {
    not_injective,
    adjacency_mismatch,
    direction_mismatch,
    label_mismatch,
    edge_label_mismatch,
    not_connected,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    // The matched pairs involved: (p0,q0) always, (p1,q1) for pairwise kinds.
    int p0 = -1, q0 = -1, p1 = -1, q1 = -1;

    std::string to_string() const;
};

struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks that the pair list is injective on both coordinates, preserves
/// vertex labels, preserves adjacency including direction and edge labels,
/// and (when connected) that the matched g0 vertices induce a connected
/// subgraph. Throws std::out_of_range on out-of-range vertex indices.
VerifyReport verify_solution(const Graph& g0, const Graph& g1, const Solution& sol,
                             bool connected);

/// Exhaustive oracle: the maximum size over all injections of g0-subsets
/// into g1 that induce isomorphic subgraphs (connected when requested).
/// Deliberately naive and structurally unrelated to the search engine.
/// Throws std::invalid_argument when g0 has more than `cap` vertices.
int brute_force_best(const Graph& g0, const Graph& g1, bool connected, int cap = 8);

}  // namespace mcs
