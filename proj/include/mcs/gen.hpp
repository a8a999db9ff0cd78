#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "mcs/graph.hpp"

namespace mcs {

/// Parameters for the random-instance generator. Label counts of 1 mean
/// "unlabelled"; the generated graph carries labels only when either count
/// exceeds 1.
struct GenSpec {
    int n = 10;
    double edge_prob = 0.3;
    bool directed = false;
    int vertex_label_count = 1;
    int edge_label_count = 1;
};

// Platform-stable draws: the raw mt19937 stream is standardised, the
// standard distributions are not.
inline std::uint32_t rand_below(std::mt19937& rng, std::uint32_t m) {
    return m == 0 ? 0 : rng() % m;
}

inline bool rand_chance(std::mt19937& rng, double p) {
    return static_cast<double>(rng()) < p * 4294967296.0;
}

Graph random_graph(const GenSpec& spec, std::mt19937& rng);

/// Appends 0..max_per_vertex pendant leaves to every vertex of the base
/// graph (random arc direction when directed, labels drawn from the given
/// alphabets).
Graph plant_leaves(const Graph& base, int max_per_vertex, std::mt19937& rng,
                   int vertex_label_count = 1, int edge_label_count = 1);

/// A (pattern, target) pair: the target is random, the pattern is an
/// induced subgraph of about pattern_frac of its vertices with each
/// pattern edge flipped with probability mutate_prob.
std::pair<Graph, Graph> random_pattern_pair(const GenSpec& target_spec, double pattern_frac,
                                            double mutate_prob, std::mt19937& rng);

}  // namespace mcs
