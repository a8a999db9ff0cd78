#include "mcs/gen.hpp"

#include <algorithm>
#include <numeric>

namespace mcs {

Graph random_graph(const GenSpec& spec, std::mt19937& rng) {
    const bool labelled = spec.vertex_label_count > 1 || spec.edge_label_count > 1;
    Graph g(spec.n, spec.directed, labelled);
    for (int v = 0; v < spec.n; ++v)
        g.set_vertex_label(v, static_cast<Label>(rand_below(rng, static_cast<std::uint32_t>(
                                                                     spec.vertex_label_count))));
    auto edge_label = [&]() {
        return static_cast<Label>(rand_below(rng, static_cast<std::uint32_t>(spec.edge_label_count)));
    };
    if (spec.directed) {
        for (int u = 0; u < spec.n; ++u)
            for (int v = 0; v < spec.n; ++v)
                if (u != v && rand_chance(rng, spec.edge_prob)) g.add_edge(u, v, edge_label());
    } else {
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (rand_chance(rng, spec.edge_prob)) g.add_edge(u, v, edge_label());
    }
    g.finalize();
    return g;
}

Graph plant_leaves(const Graph& base, int max_per_vertex, std::mt19937& rng,
                   int vertex_label_count, int edge_label_count) {
    std::vector<int> leaf_counts(static_cast<std::size_t>(base.n()));
    int total = base.n();
    for (int u = 0; u < base.n(); ++u) {
        leaf_counts[static_cast<std::size_t>(u)] =
            static_cast<int>(rand_below(rng, static_cast<std::uint32_t>(max_per_vertex + 1)));
        total += leaf_counts[static_cast<std::size_t>(u)];
    }
    const bool labelled = base.labelled() || vertex_label_count > 1 || edge_label_count > 1;
    Graph g(total, base.directed(), labelled);
    for (int v = 0; v < base.n(); ++v) g.set_vertex_label(v, base.vertex_label(v));
    for (int u = 0; u < base.n(); ++u)
        for (int v = 0; v < base.n(); ++v)
            if (base.cell(u, v) && (base.directed() || u < v))
                g.add_edge(u, v, static_cast<Label>(base.cell(u, v) - 1));
    int next = base.n();
    for (int u = 0; u < base.n(); ++u) {
        for (int i = 0; i < leaf_counts[static_cast<std::size_t>(u)]; ++i) {
            const int leaf = next++;
            g.set_vertex_label(leaf, static_cast<Label>(rand_below(
                                         rng, static_cast<std::uint32_t>(vertex_label_count))));
            const Label el = static_cast<Label>(
                rand_below(rng, static_cast<std::uint32_t>(edge_label_count)));
            if (base.directed() && rand_chance(rng, 0.5))
                g.add_edge(leaf, u, el);
            else
                g.add_edge(u, leaf, el);
        }
    }
    g.finalize();
    return g;
}

std::pair<Graph, Graph> random_pattern_pair(const GenSpec& target_spec, double pattern_frac,
                                            double mutate_prob, std::mt19937& rng) {
    Graph target = random_graph(target_spec, rng);
    const int k = std::max(1, static_cast<int>(target_spec.n * pattern_frac));
    std::vector<int> verts(static_cast<std::size_t>(target.n()));
    std::iota(verts.begin(), verts.end(), 0);
    // Fisher-Yates prefix with stable draws.
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rand_below(
                              rng, static_cast<std::uint32_t>(target.n() - i)));
        std::swap(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]);
    }
    verts.resize(static_cast<std::size_t>(k));

    Graph pattern(k, target.directed(), target.labelled());
    for (int i = 0; i < k; ++i)
        pattern.set_vertex_label(i, target.vertex_label(verts[static_cast<std::size_t>(i)]));
    auto edge_label = [&]() {
        return static_cast<Label>(
            rand_below(rng, static_cast<std::uint32_t>(target_spec.edge_label_count)));
    };
    for (int i = 0; i < k; ++i) {
        for (int j = target.directed() ? 0 : i + 1; j < k; ++j) {
            if (i == j) continue;
            bool present = target.cell(verts[static_cast<std::size_t>(i)],
                                       verts[static_cast<std::size_t>(j)]) != 0;
            Label el = present ? static_cast<Label>(
                                     target.cell(verts[static_cast<std::size_t>(i)],
                                                 verts[static_cast<std::size_t>(j)]) -
                                     1)
                               : edge_label();
            if (rand_chance(rng, mutate_prob)) present = !present;
            if (present) pattern.add_edge(i, j, el);
        }
    }
    pattern.finalize();
    return {std::move(pattern), std::move(target)};
}

}  // namespace mcs
