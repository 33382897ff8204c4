// graph.hpp - simple undirected graphs, edge-list I/O, BFS distances
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szeged/parallel.hpp"

namespace szeged {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr std::size_t kDefaultMaxVertices = 10000;
// 4 * Sz* <= n^4 / 2 must stay below 2^63.
inline constexpr std::size_t kHardMaxVertices = 50000;

/// Vertex cap for distance-matrix construction. CACTUS_MAX_N overrides the
/// default; values above kHardMaxVertices are clamped.
inline std::size_t max_vertices() {
    if (const char* env = std::getenv("CACTUS_MAX_N")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(std::min<unsigned long long>(v, kHardMaxVertices));
        }
    }
    return kDefaultMaxVertices;
}

enum class GraphErrorKind {
    SelfLoop,
    DuplicateEdge,
    MalformedLine,
    VertexOutOfRange,
    HeaderMismatch,
    Disconnected,
    TooLarge,
};

inline std::string_view to_string(GraphErrorKind kind) {
    switch (kind) {
        case GraphErrorKind::SelfLoop: return "self-loop";
        case GraphErrorKind::DuplicateEdge: return "duplicate edge";
        case GraphErrorKind::MalformedLine: return "malformed line";
        case GraphErrorKind::VertexOutOfRange: return "vertex out of range";
        case GraphErrorKind::HeaderMismatch: return "header mismatch";
        case GraphErrorKind::Disconnected: return "disconnected graph";
        case GraphErrorKind::TooLarge: return "graph too large";
    }
    return "unknown";
}

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& detail, std::size_t line = 0)
        : std::runtime_error(format(kind, detail, line)), kind_(kind), line_(line) {}

    GraphErrorKind kind() const noexcept { return kind_; }
    /// 1-based input line, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(GraphErrorKind kind, const std::string& detail, std::size_t line) {
        std::string msg(to_string(kind));
        if (line != 0) msg += " at line " + std::to_string(line);
        if (!detail.empty()) msg += ": " + detail;
        return msg;
    }

    GraphErrorKind kind_;
    std::size_t line_;
};

/// Undirected edge in canonical orientation (s < t).
struct Edge {
    Vertex s = 0;
    Vertex t = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : s(std::min(a, b)), t(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 0..n-1. May be disconnected; the
/// distance matrix is where connectivity is enforced.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicates or ids >= n.
    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        edges_.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.s == e.t) {
                throw GraphError(GraphErrorKind::SelfLoop, "vertex " + std::to_string(e.s));
            }
            if (e.t >= n) {
                throw GraphError(GraphErrorKind::VertexOutOfRange,
                                 std::to_string(e.t) + " >= " + std::to_string(n));
            }
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
            throw GraphError(GraphErrorKind::DuplicateEdge,
                             std::to_string(dup->s) + " " + std::to_string(dup->t));
        }
        for (const Edge& e : edges_) {
            adjacency_[e.s].push_back(e.t);
            adjacency_[e.t].push_back(e.s);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges sorted lexicographically; positions are stable edge ids.
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a >= vertex_count() || b >= vertex_count()) return false;
        const auto& nbrs = adjacency_[a];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    std::optional<std::size_t> edge_id(Edge e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Result of parsing an edge list: the dense graph plus original labels
/// (labels[i] is the file label of vertex i).
struct ParsedGraph {
    Graph graph;
    std::vector<std::uint64_t> labels;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view tok) {
    if (tok.empty() || tok.size() > 19) return std::nullopt;
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

}  // namespace detail

/// Parses the edge-list format: one "u v" pair per line, '#' comments and
/// blank lines skipped, optional leading "p <n> <m>" header.
///
/// With a header, ids are used verbatim and must be < n, and the edge count
/// must equal m. Without one, labels are remapped to dense ids in ascending
/// label order, so files already using 0..n-1 keep their numbering.
inline ParsedGraph parse_edge_list(std::string_view text) {
    std::optional<std::uint64_t> declared_n;
    std::optional<std::uint64_t> declared_m;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::vector<std::size_t> raw_lines;
    bool seen_content = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        const auto line = detail::trim(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        if (nl == std::string_view::npos) pos = text.size() + 1;

        if (line.empty() || line.front() == '#') continue;
        const auto toks = detail::split_ws(line);
        if (toks.size() == 3 && toks[0] == "p") {
            if (seen_content) {
                throw GraphError(GraphErrorKind::MalformedLine, "header must come first", line_no);
            }
            declared_n = detail::parse_uint(toks[1]);
            declared_m = detail::parse_uint(toks[2]);
            if (!declared_n || !declared_m) {
                throw GraphError(GraphErrorKind::MalformedLine, std::string(line), line_no);
            }
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (toks.size() != 2) {
            throw GraphError(GraphErrorKind::MalformedLine, std::string(line), line_no);
        }
        const auto a = detail::parse_uint(toks[0]);
        const auto b = detail::parse_uint(toks[1]);
        if (!a || !b) throw GraphError(GraphErrorKind::MalformedLine, std::string(line), line_no);
        if (*a == *b) {
            throw GraphError(GraphErrorKind::SelfLoop, "vertex " + std::to_string(*a), line_no);
        }
        if (declared_n && (*a >= *declared_n || *b >= *declared_n)) {
            throw GraphError(GraphErrorKind::VertexOutOfRange,
                             "declared n = " + std::to_string(*declared_n), line_no);
        }
        raw.emplace_back(*a, *b);
        raw_lines.push_back(line_no);
    }

    if (declared_m && *declared_m != raw.size()) {
        throw GraphError(GraphErrorKind::HeaderMismatch,
                         "declared m = " + std::to_string(*declared_m) + ", found " +
                             std::to_string(raw.size()));
    }

    std::vector<std::uint64_t> labels;
    if (declared_n) {
        if (*declared_n > kHardMaxVertices) {
            throw GraphError(GraphErrorKind::TooLarge, "declared n = " + std::to_string(*declared_n));
        }
        labels.resize(*declared_n);
        for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    } else {
        for (const auto& [a, b] : raw) {
            labels.push_back(a);
            labels.push_back(b);
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (labels.size() > kHardMaxVertices) {
            throw GraphError(GraphErrorKind::TooLarge, std::to_string(labels.size()) + " vertices");
        }
    }
    auto dense = [&](std::uint64_t label) {
        if (declared_n) return static_cast<Vertex>(label);
        return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), label) -
                                   labels.begin());
    };

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::vector<std::pair<Edge, std::size_t>> seen;
    seen.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Edge e(dense(raw[i].first), dense(raw[i].second));
        edges.push_back(e);
        seen.emplace_back(e, raw_lines[i]);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first) {
            throw GraphError(GraphErrorKind::DuplicateEdge,
                             std::to_string(labels[seen[i].first.s]) + " " +
                                 std::to_string(labels[seen[i].first.t]),
                             std::max(seen[i].second, seen[i - 1].second));
        }
    }
    return ParsedGraph{Graph(labels.size(), edges), std::move(labels)};
}

/// Writes the edge-list format with a "p n m" header.
inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.s << ' ' << e.t << '\n';
    return out.str();
}

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Hop distances from source; kUnreachable for vertices in other components.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    std::vector<Distance> dist(g.vertex_count(), kUnreachable);
    if (source >= g.vertex_count()) throw std::out_of_range("bfs source out of range");
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    const auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

/// Dense n x n hop-distance matrix of a connected graph. Only obtainable via
/// all_pairs_distances, so holding one implies the graph was connected.
class DistanceMatrix {
public:
    std::size_t size() const noexcept { return n_; }

    Distance operator()(Vertex u, Vertex v) const noexcept { return data_[u * n_ + v]; }

    std::span<const Distance> row(Vertex u) const noexcept {
        return std::span<const Distance>(data_).subspan(u * n_, n_);
    }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    friend DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads);

    std::size_t n_ = 0;
    std::vector<Distance> data_;
};

/// One BFS per source. Rows are independent, so any thread count yields the
/// same matrix.
inline DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 1) {
    const std::size_t n = g.vertex_count();
    if (n > max_vertices()) {
        throw GraphError(GraphErrorKind::TooLarge,
                         std::to_string(n) + " vertices exceeds cap " + std::to_string(max_vertices()));
    }
    if (!is_connected(g)) throw GraphError(GraphErrorKind::Disconnected, "");
    DistanceMatrix dm;
    dm.n_ = n;
    dm.data_.resize(n * n);
    parallel_for(n, threads, [&](std::size_t u) {
        const auto row = bfs_distances(g, static_cast<Vertex>(u));
        std::copy(row.begin(), row.end(), dm.data_.begin() + static_cast<std::ptrdiff_t>(u * n));
    });
    return dm;
}

/// Two-colouring by BFS parity; false iff some edge joins two vertices on the
/// same layer.
inline bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::queue<Vertex> q;
        q.push(start);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    q.push(w);
                } else if (colour[w] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace szeged
