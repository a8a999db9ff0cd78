#include "mcs/lum.hpp"

namespace mcs {

LeafAttribute leaf_attribute_at(const Graph& g, int leaf, int anchor) {
    LeafAttribute attr;
    attr.vertex_label = g.vertex_label(leaf);
    if (!g.directed()) {
        attr.edge_label = static_cast<Label>(g.cell(anchor, leaf) - 1);
        attr.direction = LeafDirection::undirected;
    } else if (std::uint16_t in = g.cell(anchor, leaf); in != 0) {
        attr.edge_label = static_cast<Label>(in - 1);
        attr.direction = LeafDirection::head;
    } else {
        attr.edge_label = static_cast<Label>(g.cell(leaf, anchor) - 1);
        attr.direction = LeafDirection::tail;
    }
    return attr;
}

LeafAttribute leaf_attribute(const Graph& g, int leaf) {
    if (g.degree(leaf) != 1)
        throw InternalError("leaf_attribute: vertex " + std::to_string(leaf) +
                            " has degree " + std::to_string(g.degree(leaf)));
    for (int u = 0; u < g.n(); ++u) {
        if (u != leaf && g.adjacent(u, leaf)) return leaf_attribute_at(g, leaf, u);
    }
    throw InternalError("leaf_attribute: no neighbour found");
}

}  // namespace mcs
