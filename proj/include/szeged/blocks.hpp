// blocks.hpp - block-cut-vertex decomposition and block classification
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "szeged/graph.hpp"

namespace szeged {

enum class BlockShape { BridgeEdge, Cycle, Other };

/// Kind of a block. cycle_length is set only for Cycle and is >= 3; simple
/// graphs cannot host 2-cycles.
struct BlockKind {
    BlockShape shape = BlockShape::Other;
    std::size_t cycle_length = 0;

    static BlockKind bridge() { return {BlockShape::BridgeEdge, 0}; }
    static BlockKind cycle(std::size_t k) { return {BlockShape::Cycle, k}; }
    static BlockKind other() { return {BlockShape::Other, 0}; }

    bool is_cycle() const noexcept { return shape == BlockShape::Cycle; }
    bool is_even_cycle() const noexcept { return is_cycle() && cycle_length % 2 == 0; }
    bool is_odd_cycle() const noexcept { return is_cycle() && cycle_length % 2 == 1; }

    friend bool operator==(const BlockKind&, const BlockKind&) = default;
};

inline std::string to_string(const BlockKind& kind) {
    switch (kind.shape) {
        case BlockShape::BridgeEdge: return "edge";
        case BlockShape::Cycle: return "cycle(" + std::to_string(kind.cycle_length) + ")";
        case BlockShape::Other: return "other";
    }
    return "other";
}

struct Block {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Edge> edges;       // sorted
    BlockKind kind;

    bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
};

/// Pure function of the vertex and edge sets of b.
inline BlockKind classify_block(const Graph& /*g*/, const Block& b) {
    if (b.edges.size() == 1) return BlockKind::bridge();
    if (b.vertices.size() < 3 || b.vertices.size() != b.edges.size()) return BlockKind::other();
    std::vector<std::size_t> inner_degree(b.vertices.size(), 0);
    auto local = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) -
                                        b.vertices.begin());
    };
    for (const Edge& e : b.edges) {
        ++inner_degree[local(e.s)];
        ++inner_degree[local(e.t)];
    }
    // A 2-connected block with |V| = |E| and all degrees 2 is a single cycle.
    const bool all_two = std::all_of(inner_degree.begin(), inner_degree.end(),
                                     [](std::size_t d) { return d == 2; });
    return all_two ? BlockKind::cycle(b.vertices.size()) : BlockKind::other();
}

/// Every pair of block vertices adjacent.
inline bool is_complete_block(const Block& b) {
    const std::size_t k = b.vertices.size();
    return b.edges.size() == k * (k - 1) / 2;
}

class BlockDecomposition {
public:
    /// Blocks ordered by their smallest edge.
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    /// Sorted cut vertices.
    const std::vector<Vertex>& cut_vertices() const noexcept { return cut_vertices_; }
    /// Indexed by edge id (position in Graph::edges()).
    const std::vector<std::size_t>& block_of_edge() const noexcept { return block_of_edge_; }

    bool is_cut_vertex(Vertex v) const {
        return std::binary_search(cut_vertices_.begin(), cut_vertices_.end(), v);
    }

private:
    friend BlockDecomposition block_decomposition(const Graph& g);

    std::vector<Block> blocks_;
    std::vector<Vertex> cut_vertices_;
    std::vector<std::size_t> block_of_edge_;
};

/// Hopcroft-Tarjan biconnected components with an explicit DFS stack and an
/// edge stack. A graph with a single vertex has no blocks.
inline BlockDecomposition block_decomposition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> disc(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::vector<Edge>> components;
    std::vector<Edge> edge_stack;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;  // index into neighbors(v)
    };
    std::vector<Frame> stack;
    std::size_t timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == kUnvisited) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            stack.pop_back();
            if (stack.empty()) break;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                // parent separates the subtree at v: pop one block.
                const Edge tree_edge(parent, v);
                std::vector<Edge> comp;
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e);
                    if (e == tree_edge) break;
                }
                components.push_back(std::move(comp));
            }
        }
    }

    BlockDecomposition bd;
    for (auto& comp : components) {
        Block b;
        std::sort(comp.begin(), comp.end());
        b.edges = std::move(comp);
        for (const Edge& e : b.edges) {
            b.vertices.push_back(e.s);
            b.vertices.push_back(e.t);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        b.kind = classify_block(g, b);
        bd.blocks_.push_back(std::move(b));
    }
    std::sort(bd.blocks_.begin(), bd.blocks_.end(),
              [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });

    bd.block_of_edge_.assign(g.edge_count(), 0);
    std::vector<std::size_t> membership(n, 0);
    for (std::size_t i = 0; i < bd.blocks_.size(); ++i) {
        for (const Edge& e : bd.blocks_[i].edges) bd.block_of_edge_[*g.edge_id(e)] = i;
        for (Vertex v : bd.blocks_[i].vertices) ++membership[v];
    }
    for (Vertex v = 0; v < n; ++v) {
        if (membership[v] >= 2) bd.cut_vertices_.push_back(v);
    }
    return bd;
}

/// Every block is a bridge or a cycle (vacuously true for K1).
inline bool is_cactus(const BlockDecomposition& bd) {
    return std::all_of(bd.blocks().begin(), bd.blocks().end(),
                       [](const Block& b) { return b.kind.shape != BlockShape::Other; });
}

inline bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    return is_cactus(block_decomposition(g));
}

inline bool all_blocks_cycles(const BlockDecomposition& bd) {
    return std::all_of(bd.blocks().begin(), bd.blocks().end(),
                       [](const Block& b) { return b.kind.is_cycle(); });
}

inline bool all_blocks_cycles(const Graph& g) {
    if (!is_connected(g)) return false;
    return all_blocks_cycles(block_decomposition(g));
}

inline bool all_blocks_even_cycles(const BlockDecomposition& bd) {
    return std::all_of(bd.blocks().begin(), bd.blocks().end(),
                       [](const Block& b) { return b.kind.is_even_cycle(); });
}

inline bool all_blocks_complete(const BlockDecomposition& bd) {
    return std::all_of(bd.blocks().begin(), bd.blocks().end(), is_complete_block);
}

/// The vertex of b nearest to u. Unique whenever u lies outside b, because
/// every path into b passes a single cut vertex; a tie means the
/// decomposition is inconsistent with dm and is reported as logic_error.
inline Vertex closest_vertex_in_block(const DistanceMatrix& dm, const Block& b, Vertex u) {
    if (b.vertices.empty()) throw std::invalid_argument("empty block");
    Vertex best = b.vertices.front();
    Distance best_d = dm(u, best);
    bool tie = false;
    for (std::size_t i = 1; i < b.vertices.size(); ++i) {
        const Vertex w = b.vertices[i];
        const Distance d = dm(u, w);
        if (d < best_d) {
            best = w;
            best_d = d;
            tie = false;
        } else if (d == best_d) {
            tie = true;
        }
    }
    if (tie) {
        throw std::logic_error("closest vertex to " + std::to_string(u) + " in block is not unique");
    }
    return best;
}

/// projection[b][u] = closest_vertex_in_block(dm, blocks[b], u).
inline std::vector<std::vector<Vertex>> block_projections(const DistanceMatrix& dm,
                                                          const BlockDecomposition& bd) {
    std::vector<std::vector<Vertex>> proj(bd.blocks().size(), std::vector<Vertex>(dm.size()));
    for (std::size_t b = 0; b < bd.blocks().size(); ++b) {
        for (Vertex u = 0; u < dm.size(); ++u) proj[b][u] = closest_vertex_in_block(dm, bd.blocks()[b], u);
    }
    return proj;
}

}  // namespace szeged
