#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "mcs/graph.hpp"

namespace mcs {

enum class LeafDirection : std::uint8_t { undirected, head, tail };

/// Compatibility key of a leaf: its vertex label, the label of its unique
/// incident edge, and (for directed graphs) whether the leaf is the head
/// or the tail of that arc. Leaves may be matched together exactly when
/// their attributes are equal.
struct LeafAttribute {
    Label vertex_label = 0;
    Label edge_label = 0;
    LeafDirection direction = LeafDirection::undirected;

    friend bool operator==(const LeafAttribute&, const LeafAttribute&) = default;
    friend auto operator<=>(const LeafAttribute&, const LeafAttribute&) = default;
};

/// Attribute of a degree-1 vertex. Throws InternalError when the vertex is
/// not a leaf.
LeafAttribute leaf_attribute(const Graph& g, int leaf);

// Attribute of a leaf whose unique neighbour is already known.
LeafAttribute leaf_attribute_at(const Graph& g, int leaf, int anchor);

/// Matches as many still-available leaves of p with leaves of q as their
/// attribute groups allow: within each attribute the pairing is
/// index-ascending on both sides and yields min(count_p, count_q) pairs.
/// avail0/avail1 decide whether a leaf is still an unmatched candidate.
template <class Avail0, class Avail1>
std::vector<std::pair<int, int>> union_match_leaves(const Graph& g0, const Graph& g1, int p,
                                                    int q, Avail0&& avail0, Avail1&& avail1) {
    std::vector<std::pair<LeafAttribute, int>> ls, rs;
    for (int x : g0.leaves(p))
        if (avail0(x)) ls.emplace_back(leaf_attribute_at(g0, x, p), x);
    std::vector<std::pair<int, int>> pairs;
    if (ls.empty()) return pairs;
    for (int y : g1.leaves(q))
        if (avail1(y)) rs.emplace_back(leaf_attribute_at(g1, y, q), y);
    if (rs.empty()) return pairs;
    // Leaf lists are index-ascending, so sorting by attribute alone keeps
    // each group index-ascending.
    std::stable_sort(ls.begin(), ls.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::stable_sort(rs.begin(), rs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t i = 0, j = 0;
    while (i < ls.size() && j < rs.size()) {
        if (ls[i].first < rs[j].first) {
            ++i;
        } else if (rs[j].first < ls[i].first) {
            ++j;
        } else {
            const LeafAttribute attr = ls[i].first;
            while (i < ls.size() && j < rs.size() && ls[i].first == attr &&
                   rs[j].first == attr) {
                pairs.emplace_back(ls[i].second, rs[j].second);
                ++i;
                ++j;
            }
            while (i < ls.size() && ls[i].first == attr) ++i;
            while (j < rs.size() && rs[j].first == attr) ++j;
        }
    }
    return pairs;
}

}  // namespace mcs
