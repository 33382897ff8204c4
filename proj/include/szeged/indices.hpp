// indices.hpp - Wiener, Szeged and revised Szeged indices
//
// Two independent routes are provided. The edge-sum route counts, for each
// edge {s,t}, the vertices closer to s, closer to t, and equidistant. The
// vertex-sum route sums per ordered vertex pair the number of edges whose
// endpoints the two vertices order oppositely (dis) and the number of edges
// equidistant from both (deq). Both must agree exactly.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "szeged/graph.hpp"
#include "szeged/parallel.hpp"
#include "szeged/quarter_rational.hpp"

namespace szeged {

using Count = std::int64_t;

struct EdgeSplit {
    Count closer_to_s = 0;  // n(s,t)
    Count closer_to_t = 0;  // n(t,s)
    Count equidistant = 0;  // o(s,t)

    friend bool operator==(const EdgeSplit&, const EdgeSplit&) = default;
};

inline EdgeSplit edge_split(const DistanceMatrix& dm, Edge e) {
    EdgeSplit split;
    for (Vertex v = 0; v < dm.size(); ++v) {
        const Distance ds = dm(v, e.s);
        const Distance dt = dm(v, e.t);
        if (ds < dt) {
            ++split.closer_to_s;
        } else if (ds > dt) {
            ++split.closer_to_t;
        } else {
            ++split.equidistant;
        }
    }
    return split;
}

inline Count wiener_index(const DistanceMatrix& dm) {
    Count ordered = 0;
    for (Vertex u = 0; u < dm.size(); ++u) {
        for (Distance d : dm.row(u)) ordered += d;
    }
    return exact_half(ordered);
}

inline Count szeged_index(const Graph& g, const DistanceMatrix& dm, unsigned threads = 1) {
    const auto edges = g.edges();
    return parallel_sum<Count>(edges.size(), threads, [&](std::size_t i) {
        const EdgeSplit sp = edge_split(dm, edges[i]);
        return sp.closer_to_s * sp.closer_to_t;
    });
}

inline QuarterRational revised_szeged_index(const Graph& g, const DistanceMatrix& dm, unsigned threads = 1) {
    const auto edges = g.edges();
    // 4 (a + o/2)(b + o/2) = (2a + o)(2b + o)
    const Count q = parallel_sum<Count>(edges.size(), threads, [&](std::size_t i) {
        const EdgeSplit sp = edge_split(dm, edges[i]);
        return (2 * sp.closer_to_s + sp.equidistant) * (2 * sp.closer_to_t + sp.equidistant);
    });
    return QuarterRational::from_quadrupled(q);
}

/// 1 iff u and v order the endpoints of e oppositely (e is (u,v)-distance-disparate).
inline int mu(const DistanceMatrix& dm, Vertex u, Vertex v, Edge e) {
    const Distance us = dm(u, e.s), ut = dm(u, e.t);
    const Distance vs = dm(v, e.s), vt = dm(v, e.t);
    return ((us < ut && vs > vt) || (us > ut && vs < vt)) ? 1 : 0;
}

/// 1 iff the endpoints of e are equidistant from v.
inline int nu(const DistanceMatrix& dm, Vertex v, Edge e) { return dm(v, e.s) == dm(v, e.t) ? 1 : 0; }

inline Count dis_count(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v) {
    Count c = 0;
    for (const Edge& e : g.edges()) c += mu(dm, u, v, e);
    return c;
}

inline Count deq_count(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v) {
    Count c = 0;
    for (const Edge& e : g.edges()) c += nu(dm, u, e) * nu(dm, v, e);
    return c;
}

/// Sz as half the ordered-pair sum of dis(u,v).
inline Count szeged_vertex_sum(const Graph& g, const DistanceMatrix& dm, unsigned threads = 1) {
    const std::size_t n = dm.size();
    const Count ordered = parallel_sum<Count>(n, threads, [&](std::size_t u) {
        Count row = 0;
        for (Vertex v = 0; v < n; ++v) row += dis_count(g, dm, static_cast<Vertex>(u), v);
        return row;
    });
    return exact_half(ordered);
}

/// Sz* = 1/2 sum over ordered (u,v), diagonal included, of
/// dis(u,v) + deq(u,u) - deq(u,v)/2.
inline QuarterRational revised_szeged_vertex_sum(const Graph& g, const DistanceMatrix& dm,
                                                 unsigned threads = 1) {
    const std::size_t n = dm.size();
    // Quadrupled: 2 * (dis + deq(u,u)) - deq(u,v) per ordered pair.
    const Count q = parallel_sum<Count>(n, threads, [&](std::size_t ui) {
        const auto u = static_cast<Vertex>(ui);
        const Count self = deq_count(g, dm, u, u);
        Count row = 0;
        for (Vertex v = 0; v < n; ++v) {
            row += 2 * (dis_count(g, dm, u, v) + self) - deq_count(g, dm, u, v);
        }
        return row;
    });
    return QuarterRational::from_quadrupled(q);
}

struct SzegedDifference {
    QuarterRational edge_form;
    QuarterRational vertex_form;
};

/// Sz* - Sz two ways:
///   edge form   1/2 sum_e (n o_e - o_e^2 / 2)
///   vertex form n/2 sum_u deq(u,u) - 1/4 sum_{u,v} deq(u,v)
inline SzegedDifference szeged_difference(const Graph& g, const DistanceMatrix& dm, unsigned threads = 1) {
    const auto n = static_cast<Count>(dm.size());
    const auto edges = g.edges();
    const Count edge_q = parallel_sum<Count>(edges.size(), threads, [&](std::size_t i) {
        const Count o = edge_split(dm, edges[i]).equidistant;
        return 2 * n * o - o * o;
    });
    const Count diagonal = parallel_sum<Count>(dm.size(), threads, [&](std::size_t u) {
        const auto uv = static_cast<Vertex>(u);
        return deq_count(g, dm, uv, uv);
    });
    const Count all_pairs = parallel_sum<Count>(dm.size(), threads, [&](std::size_t u) {
        Count row = 0;
        for (Vertex v = 0; v < dm.size(); ++v) row += deq_count(g, dm, static_cast<Vertex>(u), v);
        return row;
    });
    return {QuarterRational::from_quadrupled(edge_q),
            QuarterRational::from_quadrupled(2 * n * diagonal - all_pairs)};
}

/// Number of distance-disparate edges for two vertices at distance d on an
/// n-cycle: 2d for even n, 2d - 1 for odd n.
inline Count cycle_dis_closed_form(std::size_t n, std::size_t d) {
    if (n < 3) throw std::invalid_argument("cycle length must be >= 3");
    if (d < 1 || d > n / 2) {
        throw std::invalid_argument("distance " + std::to_string(d) + " out of range for C" +
                                    std::to_string(n));
    }
    const auto twice = static_cast<Count>(2 * d);
    return n % 2 == 0 ? twice : twice - 1;
}

struct IndexReport {
    Count wiener = 0;
    Count szeged = 0;
    QuarterRational revised_szeged;
    // Vertex-sum fields are empty when the cross-check was skipped.
    std::optional<Count> szeged_vertex_sum;
    std::optional<QuarterRational> revised_szeged_vertex_sum;
    std::optional<QuarterRational> difference_edge_form;
    std::optional<QuarterRational> difference_vertex_form;

    /// Every present cross-check field agrees with the edge-sum values.
    bool consistent() const {
        const QuarterRational diff = revised_szeged - QuarterRational(szeged);
        return (!szeged_vertex_sum || *szeged_vertex_sum == szeged) &&
               (!revised_szeged_vertex_sum || *revised_szeged_vertex_sum == revised_szeged) &&
               (!difference_edge_form || *difference_edge_form == diff) &&
               (!difference_vertex_form || *difference_vertex_form == diff);
    }
};

inline IndexReport compute_indices(const Graph& g, const DistanceMatrix& dm, bool cross_check,
                                   unsigned threads = 1) {
    IndexReport r;
    r.wiener = wiener_index(dm);
    r.szeged = szeged_index(g, dm, threads);
    r.revised_szeged = revised_szeged_index(g, dm, threads);
    if (cross_check) {
        r.szeged_vertex_sum = szeged_vertex_sum(g, dm, threads);
        r.revised_szeged_vertex_sum = revised_szeged_vertex_sum(g, dm, threads);
        const auto diff = szeged_difference(g, dm, threads);
        r.difference_edge_form = diff.edge_form;
        r.difference_vertex_form = diff.vertex_form;
    }
    return r;
}

}  // namespace szeged
