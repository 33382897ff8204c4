#include <gtest/gtest.h>

#include "oracle.hpp"
#include "szeged/generators.hpp"
#include "szeged/theorems.hpp"

using namespace szeged;

namespace {

QuarterRational quarters(std::int64_t q) { return QuarterRational::from_quadrupled(q); }

Graph two_five_cycles() {
    std::vector<Edge> edges = {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0),
                               Edge(0, 5), Edge(5, 6), Edge(6, 7), Edge(7, 8), Edge(8, 0)};
    return Graph(9, edges);
}

}  // namespace

TEST(CycleDisLemma, SmallCycles) {
    for (std::size_t n : {4u, 5u, 13u}) {
        const auto v = check_cycle_dis_lemma(n);
        EXPECT_EQ(v.claim, ClaimId::CycleDisLemma);
        EXPECT_EQ(v.status, VerdictStatus::HoldsWithEquality) << "C" << n;
        EXPECT_EQ(v.lhs, v.rhs);
        EXPECT_FALSE(v.witness);
    }
}

TEST(CycleDisLemma, OddSumMatchesHandCount) {
    // C5: five pairs at distance 1 (dis 1) and five at distance 2 (dis 3).
    EXPECT_EQ(check_cycle_dis_lemma(5).lhs, QuarterRational(20));
    // C4: four adjacent pairs (dis 2) and two opposite pairs (dis 4).
    EXPECT_EQ(check_cycle_dis_lemma(4).lhs, QuarterRational(16));
}

TEST(DistancePartition, SingleBlockAndFig3) {
    const auto single = check_distance_partition(GraphAnalysis(complete(6)));
    EXPECT_EQ(single.status, VerdictStatus::HoldsWithEquality);
    const auto fig3 = check_distance_partition(GraphAnalysis(paper_fig3()));
    EXPECT_EQ(fig3.status, VerdictStatus::HoldsWithEquality);
    EXPECT_EQ(fig3.lhs, QuarterRational(2 * 1818));
}

TEST(DistancePartition, RandomCactiAndGeneralGraphs) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CactusParams p;
        p.block_count = 1 + seed % 12;
        p.seed = seed;
        EXPECT_EQ(check_distance_partition(GraphAnalysis(random_cactus(p))).status,
                  VerdictStatus::HoldsWithEquality);
        EXPECT_EQ(check_distance_partition(GraphAnalysis(random_connected(4 + seed % 20, 1, 8, seed))).status,
                  VerdictStatus::HoldsWithEquality);
    }
}

TEST(SzLeq2W, Examples) {
    const auto c6 = check_sz_vs_2w(GraphAnalysis(cycle(6)));
    EXPECT_EQ(c6.status, VerdictStatus::HoldsWithEquality);
    EXPECT_TRUE(c6.predicted_equality);
    EXPECT_TRUE(c6.passed());

    const auto c5 = check_sz_vs_2w(GraphAnalysis(cycle(5)));
    EXPECT_EQ(c5.status, VerdictStatus::HoldsStrict);
    EXPECT_FALSE(c5.predicted_equality);
    EXPECT_EQ(c5.lhs, QuarterRational(20));
    EXPECT_EQ(c5.rhs, QuarterRational(30));

    const auto fig3 = check_sz_vs_2w(GraphAnalysis(paper_fig3()));
    EXPECT_EQ(fig3.status, VerdictStatus::HoldsStrict);
    EXPECT_EQ(fig3.lhs, QuarterRational(oracle::indices(paper_fig3()).szeged));
    EXPECT_EQ(fig3.rhs, QuarterRational(3636));
}

TEST(SzLeq2W, NotApplicableOffCacti) {
    const auto v = check_sz_vs_2w(GraphAnalysis(paper_fig2()));
    EXPECT_EQ(v.status, VerdictStatus::NotApplicable);
    EXPECT_TRUE(v.passed());
}

TEST(RevisedSzGeq2W, Examples) {
    const auto c4 = check_revised_sz_vs_2w(GraphAnalysis(cycle(4)));
    EXPECT_EQ(c4.status, VerdictStatus::HoldsWithEquality);
    EXPECT_EQ(c4.lhs, QuarterRational(16));

    const auto c3 = check_revised_sz_vs_2w(GraphAnalysis(cycle(3)));
    EXPECT_EQ(c3.status, VerdictStatus::HoldsStrict);
    EXPECT_EQ(c3.lhs, QuarterRational(6));
    EXPECT_EQ(c3.rhs, quarters(27));

    const auto twin = check_revised_sz_vs_2w(GraphAnalysis(two_five_cycles()));
    EXPECT_EQ(twin.status, VerdictStatus::HoldsStrict);
    EXPECT_EQ(twin.lhs, QuarterRational(156));
    EXPECT_EQ(twin.rhs, quarters(682));

    EXPECT_EQ(check_revised_sz_vs_2w(GraphAnalysis(paper_fig3())).status, VerdictStatus::NotApplicable);
}

TEST(ClassicalChain, Examples) {
    const auto k5 = check_classical_chain(GraphAnalysis(complete(5)));
    EXPECT_EQ(k5.status, VerdictStatus::HoldsStrict);
    EXPECT_EQ(k5.lhs, QuarterRational(10));
    EXPECT_EQ(k5.rhs, quarters(250));

    const auto tree = check_classical_chain(GraphAnalysis(random_tree(15, 4)));
    EXPECT_EQ(tree.status, VerdictStatus::HoldsWithEquality);
    EXPECT_TRUE(tree.predicted_equality);

    const GraphAnalysis c5(cycle(5));
    EXPECT_EQ(c5.wiener, 15);
    EXPECT_EQ(c5.szeged, 20);
    EXPECT_EQ(c5.revised_szeged, quarters(125));
    const auto chain = check_classical_chain(c5);
    EXPECT_EQ(chain.status, VerdictStatus::HoldsStrict);
    EXPECT_FALSE(chain.witness);
}

TEST(Verdicts, MismatchedPredictionFails) {
    TheoremVerdict v;
    v.status = VerdictStatus::HoldsStrict;
    v.predicted_equality = true;
    EXPECT_FALSE(v.prediction_matched());
    EXPECT_FALSE(v.passed());
    v.status = VerdictStatus::NotApplicable;
    EXPECT_TRUE(v.passed());
    v.status = VerdictStatus::Violated;
    EXPECT_FALSE(v.passed());
}

TEST(Verdicts, IdentitiesOnFig3) {
    const GraphAnalysis a(paper_fig3());
    const auto verdicts = check_all(a, true);
    ASSERT_EQ(verdicts.size(), 6u);
    for (const auto& v : verdicts) { EXPECT_TRUE(v.passed()) << to_string(v.claim); }
    EXPECT_EQ(check_all(a, false).size(), 4u);
    const auto diff = check_difference_identity(a);
    EXPECT_EQ(diff.lhs, QuarterRational(3636 - 2963));
}

TEST(Theorems, CorpusSweepNeverViolates) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        CactusParams p;
        p.block_count = seed % 10;
        p.max_cycle_length = 10;
        p.seed = seed;
        p.parity = static_cast<CycleParity>(seed % 3);
        const GraphAnalysis cactus(random_cactus(p));
        const auto sz = check_sz_vs_2w(cactus);
        EXPECT_NE(sz.status, VerdictStatus::NotApplicable);
        EXPECT_TRUE(sz.passed()) << seed;

        const GraphAnalysis cycles(random_cycle_cactus(p));
        const auto rsz = check_revised_sz_vs_2w(cycles);
        EXPECT_NE(rsz.status, VerdictStatus::NotApplicable);
        EXPECT_TRUE(rsz.passed()) << seed;
        if (p.parity == CycleParity::EvenOnly) { EXPECT_EQ(rsz.status, VerdictStatus::HoldsWithEquality); }
        if (p.parity == CycleParity::OddOnly && p.block_count > 0) { EXPECT_EQ(rsz.status, VerdictStatus::HoldsStrict); }

        EXPECT_TRUE(check_classical_chain(GraphAnalysis(random_connected(3 + seed % 15, 1, 5, seed))).passed());
    }
}

TEST(BlockSum, RebuildsRevisedSzeged) {
    EXPECT_EQ(revised_szeged_block_sum(GraphAnalysis(paper_fig3())), QuarterRational(3636));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CactusParams p;
        p.block_count = 1 + seed % 8;
        p.seed = seed;
        const GraphAnalysis cactus(random_cactus(p));
        EXPECT_EQ(revised_szeged_block_sum(cactus), cactus.revised_szeged);
        const GraphAnalysis general(random_connected(4 + seed % 14, 1, 6, seed));
        EXPECT_EQ(revised_szeged_block_sum(general), general.revised_szeged);
    }
}

TEST(BlockSum, SlackCountsOddBlockCoincidences) {
    // C5: each vertex is its own projection, 5 coincidences, slack 5/4.
    const GraphAnalysis c5(cycle(5));
    EXPECT_EQ(odd_block_coincidences(c5), 5);
    EXPECT_EQ(c5.revised_szeged - QuarterRational(2 * c5.wiener), quarters(5));
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        CactusParams p;
        p.block_count = seed % 9;
        p.seed = seed;
        const GraphAnalysis a(random_cycle_cactus(p));
        EXPECT_EQ(a.revised_szeged - QuarterRational(2 * a.wiener), quarters(odd_block_coincidences(a)));
    }
}

TEST(EqualityOutliers, PaperCounterexamples) {
    const auto fig2 = find_equality_outliers({{"fig2", paper_fig2()}});
    ASSERT_EQ(fig2.size(), 1u);
    EXPECT_TRUE(fig2[0].sz_equals_2w);
    EXPECT_NE(fig2[0].description.find("non-cactus"), std::string::npos);

    const auto fig3 = find_equality_outliers({{"fig3", paper_fig3()}});
    ASSERT_EQ(fig3.size(), 1u);
    EXPECT_FALSE(fig3[0].sz_equals_2w);
    EXPECT_TRUE(fig3[0].revised_sz_equals_2w);

    EXPECT_TRUE(find_equality_outliers({{"c6", cycle(6)}}).empty());
}
