#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

/// Raised on malformed graph input; the message names the byte offset
/// (binary format) or line number (text format).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a solver data structure detects an impossible state.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Label = std::uint16_t;

// Maximum edge label: adjacency cells store label+1 in 16 bits.
inline constexpr Label kMaxEdgeLabel = 0xFFFE;

/// Graph with dense adjacency. A cell holds 0 for "no edge" or
/// 1 + edge_label; for undirected graphs cells are symmetric, for directed
/// graphs cell(u,v) describes the arc u -> v and cell(u,v), cell(v,u) are
/// independent. Immutable once finalize() has run; safe to share across
/// concurrent solver runs.
class Graph {
public:
    Graph() = default;
    Graph(int n, bool directed, bool labelled);

    int n() const { return n_; }
    bool directed() const { return directed_; }
    bool labelled() const { return labelled_; }
    bool has_edge_labels() const { return has_edge_labels_; }

    Label vertex_label(int v) const { return vertex_labels_[static_cast<std::size_t>(v)]; }
    void set_vertex_label(int v, Label l);

    /// Adds u->v (and the mirror cell when undirected). Rejects self-loops,
    /// duplicate declarations with a different label, and oversized labels.
    void add_edge(int u, int v, Label edge_label = 0);

    std::uint16_t cell(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v];
    }
    bool has_arc(int u, int v) const { return cell(u, v) != 0; }
    bool adjacent(int u, int v) const { return cell(u, v) != 0 || cell(v, u) != 0; }
    std::span<const std::uint16_t> row(int u) const {
        return {adj_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }

    /// Total degree: neighbour count when undirected, in+out when directed.
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return degrees_; }

    /// Neighbours of u whose own total degree is exactly 1, ascending.
    const std::vector<int>& leaves(int u) const { return leaves_[static_cast<std::size_t>(u)]; }

    /// Recomputes degrees and leaf lists from the adjacency. Must be called
    /// after the last add_edge before the graph is used.
    void finalize();

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    bool directed_ = false;
    bool labelled_ = false;
    bool has_edge_labels_ = false;
    std::vector<Label> vertex_labels_;
    std::vector<std::uint16_t> adj_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> leaves_;
};

/// Benchmark binary format: 16-bit little-endian words. Word 0 = n; if
/// labelled, n vertex-label words follow; then per vertex an edge-record
/// count and that many records (target word, plus a label word when
/// labelled). Undirected inputs list every edge in both endpoint lists.
Graph parse_binary_graph(std::span<const std::uint8_t> bytes, bool directed, bool labelled);

std::vector<std::uint8_t> serialize_binary_graph(const Graph& g);

/// Plaintext format: header "<n> <u|d>", then edge lines "<u> <v>
/// [edge_label]" and optional "label <v> <l>" lines; '#' starts a comment.
Graph parse_text_graph(std::string_view text);

std::string serialize_text_graph(const Graph& g);

enum class GraphFormat { binary, text };

Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 bool directed, bool labelled);

void save_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format);

}  // namespace mcs
