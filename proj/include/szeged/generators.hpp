// generators.hpp - named graphs, parametric families and seeded random cacti
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "szeged/graph.hpp"

namespace szeged {

/*
 * SplitMix64. Part of the reproducibility contract: a given seed yields the
 * same stream on every platform, so generated corpora are byte-stable.
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * below(k) draws uniformly from [0, k) by rejecting outputs smaller than
 * 2^64 mod k and reducing the rest mod k.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("below(0)");
        const std::uint64_t threshold = (0 - k) % k;
        while (true) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % k;
        }
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// Seed of the i-th graph in a corpus with base seed `base`: the i-th output
/// of SplitMix64(base).
inline std::uint64_t corpus_seed(std::uint64_t base, std::size_t index) {
    SplitMix64 rng(base + 0x9E3779B97F4A7C15ULL * index);
    return rng.next();
}

inline Graph path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

inline Graph complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

/// Three paths of length two between hubs 0 and 1 (midpoints 2, 3, 4),
/// pendants 5, 6, 7 on hub 0 and pendants 8, 9 on hub 1. Bipartite, not a
/// cactus, W = 96, Sz = 192.
inline Graph paper_fig2() {
    std::vector<Edge> edges;
    for (Vertex mid : {2u, 3u, 4u}) {
        edges.emplace_back(0, mid);
        edges.emplace_back(mid, 1);
    }
    for (Vertex p : {5u, 6u, 7u}) edges.emplace_back(0, p);
    for (Vertex p : {8u, 9u}) edges.emplace_back(1, p);
    return Graph(10, edges);
}

/// Hub 0 shared by the 13-cycle 0..12 and the 11-cycle 0,13..22, with
/// pendants 23..28 on the hub. A cactus with W = 1818 and Sz* = 3636.
inline Graph paper_fig3() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 13; ++i) edges.emplace_back(i, (i + 1) % 13);
    edges.emplace_back(0, 13);
    for (Vertex i = 13; i < 22; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(22, 0);
    for (Vertex p = 23; p < 29; ++p) edges.emplace_back(0, p);
    return Graph(29, edges);
}

enum class CycleParity { Any, EvenOnly, OddOnly };

inline std::string_view to_string(CycleParity p) {
    switch (p) {
        case CycleParity::Any: return "any";
        case CycleParity::EvenOnly: return "even";
        case CycleParity::OddOnly: return "odd";
    }
    return "any";
}

inline CycleParity parse_parity(std::string_view s) {
    if (s == "any") return CycleParity::Any;
    if (s == "even") return CycleParity::EvenOnly;
    if (s == "odd") return CycleParity::OddOnly;
    throw std::invalid_argument("unknown parity '" + std::string(s) + "'");
}

struct CactusParams {
    std::size_t block_count = 10;
    std::size_t min_cycle_length = 3;
    std::size_t max_cycle_length = 8;
    // Probability of a pendant-edge block, as a fraction.
    std::uint64_t edge_probability_num = 1;
    std::uint64_t edge_probability_den = 3;
    CycleParity parity = CycleParity::Any;
    std::uint64_t seed = 0;

    std::vector<std::size_t> allowed_cycle_lengths() const {
        std::vector<std::size_t> out;
        for (std::size_t k = min_cycle_length; k <= max_cycle_length; ++k) {
            if (parity == CycleParity::EvenOnly && k % 2 != 0) continue;
            if (parity == CycleParity::OddOnly && k % 2 == 0) continue;
            out.push_back(k);
        }
        return out;
    }

    void validate() const {
        if (min_cycle_length < 3) throw std::invalid_argument("cycle lengths must be >= 3");
        if (max_cycle_length < min_cycle_length) throw std::invalid_argument("empty cycle length range");
        if (edge_probability_den == 0 || edge_probability_num > edge_probability_den) {
            throw std::invalid_argument("edge block probability must lie in [0, 1]");
        }
        if (edge_probability_num < edge_probability_den && allowed_cycle_lengths().empty()) {
            throw std::invalid_argument("no cycle length in range matches the parity");
        }
    }
};

/// Starts from a single vertex and, block_count times, attaches at a
/// uniformly chosen existing vertex either a pendant edge (with the edge
/// probability) or a new cycle of uniformly chosen allowed length. The new
/// cycle runs attach -> fresh vertices in order -> attach.
inline Graph random_cactus(const CactusParams& p) {
    p.validate();
    const auto lengths = p.allowed_cycle_lengths();
    SplitMix64 rng(p.seed);
    std::size_t n = 1;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < p.block_count; ++b) {
        const auto attach = static_cast<Vertex>(rng.below(n));
        if (rng.chance(p.edge_probability_num, p.edge_probability_den)) {
            edges.emplace_back(attach, static_cast<Vertex>(n));
            ++n;
            continue;
        }
        const std::size_t k = lengths[rng.below(lengths.size())];
        Vertex prev = attach;
        for (std::size_t i = 1; i < k; ++i) {
            const auto fresh = static_cast<Vertex>(n++);
            edges.emplace_back(prev, fresh);
            prev = fresh;
        }
        edges.emplace_back(prev, attach);
    }
    return Graph(n, edges);
}

/// random_cactus with pendant edges disabled: every block is a cycle.
inline Graph random_cycle_cactus(CactusParams p) {
    p.edge_probability_num = 0;
    p.edge_probability_den = 1;
    return random_cactus(p);
}

/// Random recursive tree: vertex i > 0 hangs off a uniform earlier vertex.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(rng.below(i)), static_cast<Vertex>(i));
    }
    return Graph(n, edges);
}

/// Connected Erdos-Renyi-style graph: a random recursive spanning tree plus
/// each remaining pair independently with probability num/den.
inline Graph random_connected(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    if (den == 0 || num > den) throw std::invalid_argument("probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const auto j = static_cast<Vertex>(rng.below(i));
        adj[i][j] = adj[j][i] = true;
        edges.emplace_back(j, static_cast<Vertex>(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!adj[i][j] && rng.chance(num, den)) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(n, edges);
}

}  // namespace szeged
