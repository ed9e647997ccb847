#include <multituran/errors.hpp>
#include <multituran/generators.hpp>
#include <multituran/graph_io.hpp>
#include <multituran/small_graph.hpp>
#include <multituran/threshold.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace multituran;
using std::size_t;
using std::vector;

TEST(Recurrence, KnownValues)
{
    auto d = critical_density_recurrence(10, 1e-15);
    ASSERT_EQ(d.size(), 9u);
    EXPECT_EQ(d[0], 0.0);
    EXPECT_NEAR(d[1], (std::sqrt(5.0) - 1) / 2, 1e-12);
    // d_4 solves x^2 (1 - d_3) + x - 1 = 0 in closed form
    double c = 1 - d[1];
    EXPECT_NEAR(d[2], (-1 + std::sqrt(1 + 4 * c)) / (2 * c), 1e-12);
}

TEST(Recurrence, ResidualsAndMonotonicity)
{
    double tol = 1e-12;
    auto d = critical_density_recurrence(12, tol);
    for (size_t i = 1 ; i < d.size() ; ++i) {
        EXPECT_LT(std::abs(d[i] * d[i] * (1 - d[i - 1]) + d[i] - 1), 10 * tol);
        EXPECT_GT(d[i], d[i - 1]);
        EXPECT_LT(d[i], 1.0);
    }
}

TEST(Recurrence, Arguments)
{
    EXPECT_EQ(critical_density_recurrence(2, 1e-9), vector<double>{0.0});
    EXPECT_THROW(critical_density_recurrence(1, 1e-9), InvalidArgument);
    EXPECT_THROW(critical_density_recurrence(5, 0), InvalidArgument);
    // a one-step cap leaves the bracket midpoint [0, 1/2] or [1/2, 1]
    EXPECT_EQ(critical_density_recurrence(3, 1e-9, 1)[1], 0.75);
}

TEST(Certify, BondyTriangle)
{
    for (size_t l = 3 ; l <= 5 ; ++l) {
        ThresholdWitness w{complete_graph(3), l, bondy_prototype(3, l), Density(Rational(1, 2)), CopyMode::any};
        EXPECT_EQ(certify_witness(w).value(), Rational(1, 2));
        EXPECT_EQ(oracle::copies(w.host, w.pattern, false), 0u);
    }
}

TEST(Certify, PathOnThreeVertices)
{
    for (size_t l = 3 ; l <= 5 ; ++l) {
        Rational delta(1, (l - 1) * (l - 1));
        ThresholdWitness w{complete_bipartite_graph(1, 2), l, k12_extremal(l), Density(delta), CopyMode::any};
        EXPECT_EQ(certify_witness(w).value(), delta);
        EXPECT_EQ(oracle::copies(w.host, w.pattern, false), 0u);
    }
}

TEST(Certify, LowerBoundConstruction)
{
    vector<size_t> parts{1, 2, 2};
    ThresholdWitness w{complete_multipartite_graph(parts), 5, lower_bound_graph(2, 5), Density(Rational(33, 64)), CopyMode::any};
    EXPECT_EQ(certify_witness(w).value(), Rational(33, 64));
}

TEST(Certify, Rejections)
{
    ThresholdWitness wrong_density{complete_graph(3), 3, bondy_prototype(3, 3), Density(Rational(1, 3)), CopyMode::any};
    EXPECT_THROW(certify_witness(wrong_density), WitnessRejected);
    ThresholdWitness wrong_parts{complete_graph(3), 4, bondy_prototype(3, 3), Density(Rational(1, 2)), CopyMode::any};
    EXPECT_THROW(certify_witness(wrong_parts), WitnessRejected);
    ThresholdWitness has_copy{complete_graph(3), 3, bondy_prototype(4, 3), min_pairwise_density(bondy_prototype(4, 3)), CopyMode::any};
    try {
        certify_witness(has_copy);
        FAIL() << "expected a rejection";
    }
    catch (const WitnessRejected & e) {
        ASSERT_TRUE(e.copy().has_value());
        EXPECT_TRUE(is_embedding(has_copy.host, has_copy.pattern, *e.copy(), CopyMode::any));
    }
}

TEST(Certify, BlowUpKeepsTheCertificate)
{
    vector<size_t> factors{2, 2, 2, 2};
    auto g = blow_up(bondy_prototype(3, 4), factors);
    ThresholdWitness w{complete_graph(3), 4, g, Density(Rational(1, 2)), CopyMode::any};
    EXPECT_EQ(certify_witness(w).value(), Rational(1, 2));
    auto h = blow_up(k12_extremal(4), factors);
    // each matching edge becomes a K_{2,2}, which contains K_{1,2}
    ThresholdWitness path{complete_bipartite_graph(1, 2), 4, h, Density(Rational(1, 9)), CopyMode::any};
    EXPECT_THROW(certify_witness(path), WitnessRejected);
}

TEST(Search, EdgeForcesEdgeless)
{
    SearchOptions o;
    o.budget = 200;
    o.seed = 3;
    auto r = search_witness(complete_graph(2), o);
    EXPECT_TRUE(r.found);
    EXPECT_EQ(r.witness.delta.value(), Rational(0));
    EXPECT_EQ(r.witness.host.edge_count(), 0u);
    EXPECT_EQ(r.iterations, 200u);
}

TEST(Search, ZeroBudgetReturnsStart)
{
    SearchOptions o;
    o.parts = 3;
    o.part_size = 2;
    o.budget = 0;
    o.start = bondy_prototype(3, 3);
    auto r = search_witness(complete_graph(3), o);
    EXPECT_TRUE(r.found);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(save_graph(r.witness.host), save_graph(*o.start));
    EXPECT_EQ(r.witness.delta.value(), Rational(1, 2));
}

TEST(Search, PlantedPrototypeIsKept)
{
    SearchOptions o;
    o.parts = 3;
    o.part_size = 2;
    o.budget = 500;
    o.seed = 11;
    o.start = bondy_prototype(3, 3);
    auto r = search_witness(complete_graph(3), o);
    ASSERT_TRUE(r.found);
    EXPECT_GE(r.witness.delta.value(), Rational(1, 2));
    EXPECT_EQ(certify_witness(r.witness), r.witness.delta);
}

TEST(Search, ReachesHalfForTriangles)
{
    SearchOptions o;
    o.parts = 3;
    o.part_size = 3;
    o.budget = 4000;
    o.seed = 7;
    auto r = search_witness(complete_graph(3), o);
    ASSERT_TRUE(r.found);
    EXPECT_GE(r.witness.delta.value(), Rational(1, 2));
    EXPECT_EQ(certify_witness(r.witness), r.witness.delta);
}

TEST(Search, SameSeedSameResult)
{
    SearchOptions o;
    o.parts = 4;
    o.part_size = 3;
    o.budget = 1500;
    o.seed = 42;
    auto a = search_witness(complete_graph(3), o);
    auto b = search_witness(complete_graph(3), o);
    EXPECT_EQ(save_graph(a.witness.host), save_graph(b.witness.host));
    EXPECT_EQ(a.witness.delta, b.witness.delta);
    o.seed = 43;
    auto c = search_witness(complete_graph(3), o);
    EXPECT_EQ(certify_witness(c.witness), c.witness.delta);
}

TEST(Search, Arguments)
{
    SearchOptions o;
    o.part_size = 9;
    EXPECT_THROW(search_witness(complete_graph(3), o), InvalidArgument);
    o.part_size = 3;
    EXPECT_THROW(search_witness(complete_graph(6), o), ResourceLimitExceeded);
    o.start = bondy_prototype(3, 3);
    EXPECT_THROW(search_witness(complete_graph(3), o), InvalidArgument);
}
