#include "mcs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mcs {

Graph::Graph(int n, bool directed, bool labelled)
    : n_(n),
      directed_(directed),
      labelled_(labelled),
      vertex_labels_(static_cast<std::size_t>(n), 0),
      adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      degrees_(static_cast<std::size_t>(n), 0),
      leaves_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::set_vertex_label(int v, Label l) {
    vertex_labels_[static_cast<std::size_t>(v)] = l;
}

void Graph::add_edge(int u, int v, Label edge_label) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("add_edge: vertex index out of range");
    if (u == v) throw ParseError("add_edge: self-loop on vertex " + std::to_string(u));
    if (edge_label > kMaxEdgeLabel)
        throw ParseError("add_edge: edge label exceeds format capacity");
    const std::uint16_t encoded = static_cast<std::uint16_t>(edge_label + 1);
    auto put = [&](int a, int b) {
        std::uint16_t& slot = adj_[static_cast<std::size_t>(a) * n_ + b];
        if (slot != 0 && slot != encoded)
            throw ParseError("add_edge: conflicting duplicate edge " + std::to_string(a) +
                             "->" + std::to_string(b));
        slot = encoded;
    };
    put(u, v);
    if (!directed_) put(v, u);
}

void Graph::finalize() {
    degrees_.assign(static_cast<std::size_t>(n_), 0);
    has_edge_labels_ = false;
    for (int u = 0; u < n_; ++u) {
        int d = 0;
        for (int v = 0; v < n_; ++v) {
            std::uint16_t out = cell(u, v);
            if (out > 1) has_edge_labels_ = true;
            if (directed_) {
                if (out) ++d;
                if (cell(v, u)) ++d;
            } else {
                if (out) ++d;
            }
        }
        degrees_[static_cast<std::size_t>(u)] = d;
    }
    leaves_.assign(static_cast<std::size_t>(n_), {});
    for (int v = 0; v < n_; ++v) {
        if (degrees_[static_cast<std::size_t>(v)] != 1) continue;
        for (int u = 0; u < n_; ++u) {
            if (u != v && adjacent(u, v)) {
                leaves_[static_cast<std::size_t>(u)].push_back(v);
                break;
            }
        }
    }
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ && labelled_ == other.labelled_ &&
           vertex_labels_ == other.vertex_labels_ && adj_ == other.adj_ &&
           degrees_ == other.degrees_ && leaves_ == other.leaves_;
}

namespace {

class WordReader {
public:
    explicit WordReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return offset_; }

    std::uint16_t next(const char* what) {
        if (offset_ + 2 > bytes_.size())
            throw ParseError(std::string("truncated input: expected ") + what +
                             " at byte offset " + std::to_string(offset_));
        std::uint16_t w = static_cast<std::uint16_t>(bytes_[offset_] |
                                                     (bytes_[offset_ + 1] << 8));
        offset_ += 2;
        return w;
    }

    bool exhausted() const { return offset_ == bytes_.size(); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t offset_ = 0;
};

}  // namespace

Graph parse_binary_graph(std::span<const std::uint8_t> bytes, bool directed, bool labelled) {
    WordReader in(bytes);
    const int n = in.next("vertex count");
    Graph g(n, directed, labelled);
    if (labelled) {
        for (int v = 0; v < n; ++v) g.set_vertex_label(v, in.next("vertex label"));
    }
    // Declared-arc set for duplicate detection; the mirror record of an
    // undirected edge is a distinct declaration and must not trip it.
    std::vector<std::uint64_t> declared;
    for (int u = 0; u < n; ++u) {
        const int count = in.next("edge record count");
        for (int i = 0; i < count; ++i) {
            const std::size_t record_at = in.offset();
            const int v = in.next("edge target");
            if (v >= n)
                throw ParseError("edge target " + std::to_string(v) + " out of range (n=" +
                                 std::to_string(n) + ") at byte offset " +
                                 std::to_string(record_at));
            Label el = 0;
            if (labelled) {
                el = in.next("edge label");
                if (el > kMaxEdgeLabel)
                    throw ParseError("edge label exceeds capacity at byte offset " +
                                     std::to_string(record_at));
            }
            declared.push_back((static_cast<std::uint64_t>(u) << 32) |
                               static_cast<std::uint32_t>(v));
            try {
                g.add_edge(u, v, el);
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()) + " at byte offset " +
                                 std::to_string(record_at));
            }
        }
    }
    std::sort(declared.begin(), declared.end());
    if (auto it = std::adjacent_find(declared.begin(), declared.end()); it != declared.end())
        throw ParseError("duplicate edge declaration " + std::to_string(*it >> 32) + "->" +
                         std::to_string(static_cast<std::uint32_t>(*it)));
    if (!in.exhausted())
        throw ParseError("trailing bytes after graph data at byte offset " +
                         std::to_string(in.offset()));
    g.finalize();
    return g;
}

std::vector<std::uint8_t> serialize_binary_graph(const Graph& g) {
    if (g.n() > 0xFFFF)
        throw std::invalid_argument("serialize_binary_graph: vertex count exceeds 16-bit capacity");
    std::vector<std::uint8_t> out;
    auto word = [&out](std::uint16_t w) {
        out.push_back(static_cast<std::uint8_t>(w & 0xFF));
        out.push_back(static_cast<std::uint8_t>(w >> 8));
    };
    word(static_cast<std::uint16_t>(g.n()));
    if (g.labelled()) {
        for (int v = 0; v < g.n(); ++v) word(g.vertex_label(v));
    }
    for (int u = 0; u < g.n(); ++u) {
        std::uint16_t count = 0;
        for (int v = 0; v < g.n(); ++v)
            if (g.cell(u, v)) ++count;
        word(count);
        for (int v = 0; v < g.n(); ++v) {
            std::uint16_t c = g.cell(u, v);
            if (!c) continue;
            word(static_cast<std::uint16_t>(v));
            if (g.labelled()) word(static_cast<std::uint16_t>(c - 1));
        }
    }
    return out;
}

Graph parse_text_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    auto fail = [&line_no](const std::string& msg) -> ParseError {
        return ParseError(msg + " at line " + std::to_string(line_no));
    };

    // Header lookup, then edge/label lines.
    bool have_header = false;
    int n = 0;
    bool directed = false;
    struct EdgeDecl {
        int u, v;
        Label label;
        bool has_label;
    };
    std::vector<EdgeDecl> edges;
    std::vector<std::pair<int, Label>> vlabels;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (!have_header) {
            long n_raw = 0;
            try {
                n_raw = std::stol(tok);
            } catch (...) {
                throw fail("malformed header: expected vertex count");
            }
            if (n_raw < 0 || n_raw > 0xFFFF) throw fail("vertex count outside format capacity");
            n = static_cast<int>(n_raw);
            std::string dir;
            if (!(ls >> dir) || (dir != "u" && dir != "d"))
                throw fail("malformed header: expected 'u' or 'd'");
            directed = (dir == "d");
            have_header = true;
            continue;
        }
        if (tok == "label") {
            long v = -1, l = -1;
            if (!(ls >> v >> l)) throw fail("malformed label line");
            if (v < 0 || v >= n) throw fail("label vertex index out of range");
            if (l < 0 || l > 0xFFFF) throw fail("vertex label outside format capacity");
            vlabels.emplace_back(static_cast<int>(v), static_cast<Label>(l));
            continue;
        }
        long u = -1, v = -1;
        try {
            u = std::stol(tok);
        } catch (...) {
            throw fail("malformed edge line");
        }
        if (!(ls >> v)) throw fail("malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) throw fail("edge endpoint out of range");
        long el = -1;
        bool has_el = static_cast<bool>(ls >> el);
        if (has_el && (el < 0 || el > kMaxEdgeLabel))
            throw fail("edge label outside format capacity");
        edges.push_back({static_cast<int>(u), static_cast<int>(v),
                         has_el ? static_cast<Label>(el) : Label{0}, has_el});
    }
    if (!have_header) throw ParseError("empty input: missing header line");

    bool labelled = !vlabels.empty() ||
                    std::any_of(edges.begin(), edges.end(),
                                [](const EdgeDecl& e) { return e.has_label; });
    Graph g(n, directed, labelled);
    for (auto [v, l] : vlabels) g.set_vertex_label(v, l);
    for (const auto& e : edges) g.add_edge(e.u, e.v, e.label);
    g.finalize();
    return g;
}

std::string serialize_text_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << (g.directed() ? 'd' : 'u') << '\n';
    if (g.labelled()) {
        for (int v = 0; v < g.n(); ++v)
            if (g.vertex_label(v) != 0) out << "label " << v << ' ' << g.vertex_label(v) << '\n';
    }
    for (int u = 0; u < g.n(); ++u) {
        for (int v = g.directed() ? 0 : u + 1; v < g.n(); ++v) {
            std::uint16_t c = g.cell(u, v);
            if (!c) continue;
            out << u << ' ' << v;
            if (g.labelled()) out << ' ' << (c - 1);
            out << '\n';
        }
    }
    return out.str();
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 bool directed, bool labelled) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        if (format == GraphFormat::binary)
            return parse_binary_graph(
                {reinterpret_cast<const std::uint8_t*>(data.data()), data.size()}, directed,
                labelled);
        return parse_text_graph(data);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph file: " + path.string());
    if (format == GraphFormat::binary) {
        auto bytes = serialize_binary_graph(g);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    } else {
        out << serialize_text_graph(g);
    }
}

}  // namespace mcs
