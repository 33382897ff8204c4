#include <gtest/gtest.h>

#include "oracle.hpp"
#include "szeged/generators.hpp"
#include "szeged/indices.hpp"

using namespace szeged;

namespace {

QuarterRational quarters(std::int64_t q) { return QuarterRational::from_quadrupled(q); }

QuarterRational from_oracle(const oracle::Rational& r) {
    EXPECT_EQ(4 % r.denominator(), 0);
    return quarters(r.numerator() * (4 / r.denominator()));
}

std::vector<Graph> mixed_corpus() {
    std::vector<Graph> out = {paper_fig2(), paper_fig3(), complete(5), cycle(3), cycle(8), path(1), path(2)};
    for (std::uint64_t seed = 0; seed < 45; ++seed) {
        const std::size_t n = 2 + seed % 23;
        out.push_back(random_tree(n, seed));
        out.push_back(random_connected(n, 1 + seed % 5, 10, seed));
        CactusParams p;
        p.block_count = seed % 9;
        p.seed = seed;
        out.push_back(random_cactus(p));
    }
    return out;
}

}  // namespace

TEST(EdgeSplit, Examples) {
    const Graph g4 = cycle(4), g5 = cycle(5);
    const auto c4 = all_pairs_distances(g4);
    for (const Edge& e : g4.edges()) { EXPECT_EQ(edge_split(c4, e), (EdgeSplit{2, 2, 0})); }
    const auto c5 = all_pairs_distances(g5);
    for (const Edge& e : g5.edges()) { EXPECT_EQ(edge_split(c5, e), (EdgeSplit{2, 2, 1})); }
    EXPECT_EQ(edge_split(all_pairs_distances(path(3)), Edge(0, 1)), (EdgeSplit{1, 2, 0}));
}

TEST(EdgeSplit, Conservation) {
    for (const Graph& g : mixed_corpus()) {
        const auto dm = all_pairs_distances(g);
        for (const Edge& e : g.edges()) {
            const auto sp = edge_split(dm, e);
            EXPECT_EQ(sp.closer_to_s + sp.closer_to_t + sp.equidistant, static_cast<Count>(g.vertex_count()));
        }
    }
}

TEST(Wiener, Examples) {
    EXPECT_EQ(wiener_index(all_pairs_distances(path(3))), 4);
    EXPECT_EQ(wiener_index(all_pairs_distances(paper_fig2())), 96);
    EXPECT_EQ(wiener_index(all_pairs_distances(paper_fig3())), 1818);
}

TEST(Szeged, Examples) {
    const Graph fig2 = paper_fig2();
    EXPECT_EQ(szeged_index(fig2, all_pairs_distances(fig2)), 192);
    EXPECT_EQ(szeged_index(cycle(5), all_pairs_distances(cycle(5))), 20);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_tree(3 + seed, seed);
        const auto dm = all_pairs_distances(t);
        EXPECT_EQ(szeged_index(t, dm), wiener_index(dm));
    }
}

TEST(RevisedSzeged, Examples) {
    const Graph fig3 = paper_fig3();
    EXPECT_EQ(revised_szeged_index(fig3, all_pairs_distances(fig3)), QuarterRational(3636));
    EXPECT_EQ(revised_szeged_index(cycle(5), all_pairs_distances(cycle(5))), quarters(125));
    for (const Graph& g : mixed_corpus()) {
        if (!is_bipartite(g)) continue;
        const auto dm = all_pairs_distances(g);
        EXPECT_EQ(revised_szeged_index(g, dm), QuarterRational(szeged_index(g, dm)));
    }
}

TEST(EdgeSums, MatchOracleDefinitions) {
    for (const Graph& g : mixed_corpus()) {
        const auto dm = all_pairs_distances(g);
        const auto ref = oracle::indices(g);
        EXPECT_EQ(wiener_index(dm), ref.wiener);
        EXPECT_EQ(szeged_index(g, dm), ref.szeged);
        EXPECT_EQ(revised_szeged_index(g, dm), from_oracle(ref.revised));
    }
}

TEST(Mu, Examples) {
    const auto c4 = all_pairs_distances(cycle(4));
    for (Vertex u = 0; u < 4; ++u)
        for (const Edge& e : cycle(4).edges()) { EXPECT_EQ(mu(c4, u, u, e), 0); }
    EXPECT_EQ(mu(c4, 0, 1, Edge(0, 1)), 1);
    EXPECT_EQ(mu(all_pairs_distances(path(3)), 0, 2, Edge(0, 1)), 1);
}

TEST(Nu, Examples) {
    EXPECT_EQ(nu(all_pairs_distances(cycle(5)), 0, Edge(2, 3)), 1);
    EXPECT_EQ(nu(all_pairs_distances(cycle(3)), 0, Edge(1, 2)), 1);
    for (const Graph& g : mixed_corpus()) {
        if (!is_bipartite(g)) continue;
        const auto dm = all_pairs_distances(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (const Edge& e : g.edges()) { EXPECT_EQ(nu(dm, v, e), 0); }
    }
}

TEST(DisCount, Examples) {
    const Graph c4 = cycle(4);
    const auto d4 = all_pairs_distances(c4);
    EXPECT_EQ(dis_count(c4, d4, 0, 1), 2);
    const Graph c5 = cycle(5);
    const auto d5 = all_pairs_distances(c5);
    EXPECT_EQ(dis_count(c5, d5, 0, 2), 3);
    EXPECT_EQ(dis_count(c5, d5, 3, 3), 0);
}

TEST(DisCount, MatchesOracleAndBounds) {
    for (const Graph& g : mixed_corpus()) {
        if (g.vertex_count() > 14) continue;
        const auto dm = all_pairs_distances(g);
        const auto fw = oracle::floyd_warshall(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                const Count d = dis_count(g, dm, u, v);
                EXPECT_EQ(d, oracle::dis(g, fw, u, v));
                EXPECT_EQ(d, dis_count(g, dm, v, u));
                EXPECT_EQ(deq_count(g, dm, u, v), deq_count(g, dm, v, u));
                if (u != v) { EXPECT_GE(d, static_cast<Count>(dm(u, v))); }
            }
        }
    }
}

TEST(DeqCount, Examples) {
    const Graph c5 = cycle(5);
    const auto d5 = all_pairs_distances(c5);
    for (Vertex u = 0; u < 5; ++u) {
        EXPECT_EQ(deq_count(c5, d5, u, u), 1);
        for (Vertex v = 0; v < 5; ++v) {
            if (u != v) { EXPECT_EQ(deq_count(c5, d5, u, v), 0); }
        }
    }
    const Graph c6 = cycle(6);
    const auto d6 = all_pairs_distances(c6);
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = 0; v < 6; ++v) { EXPECT_EQ(deq_count(c6, d6, u, v), 0); }
}

TEST(VertexSums, Examples) {
    const Graph fig2 = paper_fig2();
    EXPECT_EQ(szeged_vertex_sum(fig2, all_pairs_distances(fig2)), 192);
    EXPECT_EQ(szeged_vertex_sum(cycle(5), all_pairs_distances(cycle(5))), 20);
    EXPECT_EQ(szeged_vertex_sum(path(3), all_pairs_distances(path(3))), 4);

    EXPECT_EQ(revised_szeged_vertex_sum(cycle(5), all_pairs_distances(cycle(5))), quarters(125));
    const Graph fig3 = paper_fig3();
    EXPECT_EQ(revised_szeged_vertex_sum(fig3, all_pairs_distances(fig3)), QuarterRational(3636));
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph t = random_tree(2 + seed, seed);
        const auto dm = all_pairs_distances(t);
        EXPECT_EQ(revised_szeged_vertex_sum(t, dm), QuarterRational(wiener_index(dm)));
    }
}

TEST(VertexSums, EqualEdgeSumsOnCorpus) {
    for (const Graph& g : mixed_corpus()) {
        const auto dm = all_pairs_distances(g);
        EXPECT_EQ(szeged_vertex_sum(g, dm), szeged_index(g, dm));
        EXPECT_EQ(revised_szeged_vertex_sum(g, dm), revised_szeged_index(g, dm));
    }
}

TEST(SzegedDifference, Examples) {
    const auto c5 = szeged_difference(cycle(5), all_pairs_distances(cycle(5)));
    EXPECT_EQ(c5.edge_form, quarters(45));
    EXPECT_EQ(c5.vertex_form, quarters(45));
    const auto c3 = szeged_difference(cycle(3), all_pairs_distances(cycle(3)));
    EXPECT_EQ(c3.edge_form, quarters(15));
    EXPECT_EQ(c3.vertex_form, quarters(15));
    const auto c6 = szeged_difference(cycle(6), all_pairs_distances(cycle(6)));
    EXPECT_EQ(c6.edge_form, QuarterRational(0));
    EXPECT_EQ(c6.vertex_form, QuarterRational(0));
}

TEST(SzegedDifference, BothFormsEqualDirectDifference) {
    for (const Graph& g : mixed_corpus()) {
        const auto dm = all_pairs_distances(g);
        const auto diff = revised_szeged_index(g, dm) - QuarterRational(szeged_index(g, dm));
        const auto forms = szeged_difference(g, dm);
        EXPECT_EQ(forms.edge_form, diff);
        EXPECT_EQ(forms.vertex_form, diff);
    }
}

TEST(CycleClosedForm, Values) {
    EXPECT_EQ(cycle_dis_closed_form(4, 1), 2);
    EXPECT_EQ(cycle_dis_closed_form(5, 2), 3);
    EXPECT_EQ(cycle_dis_closed_form(13, 6), 11);
    EXPECT_THROW(cycle_dis_closed_form(5, 3), std::invalid_argument);
    EXPECT_THROW(cycle_dis_closed_form(5, 0), std::invalid_argument);
    EXPECT_THROW(cycle_dis_closed_form(2, 1), std::invalid_argument);
}

TEST(CycleClosedForm, MatchesDisCountOnCycles) {
    for (std::size_t n = 3; n <= 30; ++n) {
        const Graph c = cycle(n);
        const auto dm = all_pairs_distances(c);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) { EXPECT_EQ(dis_count(c, dm, u, v), cycle_dis_closed_form(n, dm(u, v))); }
    }
}

TEST(Indices, ThreadCountDoesNotChangeResult) {
    const Graph g = random_connected(40, 1, 6, 3);
    const auto dm = all_pairs_distances(g);
    for (unsigned k : {2u, 4u, 7u}) {
        EXPECT_EQ(szeged_index(g, dm, k), szeged_index(g, dm, 1));
        EXPECT_EQ(revised_szeged_index(g, dm, k), revised_szeged_index(g, dm, 1));
        EXPECT_EQ(revised_szeged_vertex_sum(g, dm, k), revised_szeged_vertex_sum(g, dm, 1));
        EXPECT_EQ(szeged_difference(g, dm, k).vertex_form, szeged_difference(g, dm, 1).vertex_form);
    }
}

TEST(IndexReport, CrossCheckFields) {
    const Graph g = cycle(5);
    const auto dm = all_pairs_distances(g);
    const auto full = compute_indices(g, dm, true);
    EXPECT_EQ(full.wiener, 15);
    EXPECT_EQ(full.szeged, 20);
    EXPECT_EQ(full.revised_szeged, quarters(125));
    EXPECT_TRUE(full.consistent());
    ASSERT_TRUE(full.difference_vertex_form);
    EXPECT_EQ(*full.difference_vertex_form, quarters(45));

    const auto fast = compute_indices(g, dm, false);
    EXPECT_FALSE(fast.szeged_vertex_sum);
    EXPECT_TRUE(fast.consistent());

    auto broken = full;
    broken.revised_szeged_vertex_sum = quarters(124);
    EXPECT_FALSE(broken.consistent());
}
