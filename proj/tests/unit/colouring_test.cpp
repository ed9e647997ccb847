#include <multituran/colouring.hpp>
#include <multituran/corpus.hpp>
#include <multituran/errors.hpp>
#include <multituran/random.hpp>
#include <multituran/small_graph.hpp>

#include <gtest/gtest.h>

#include "instances.hpp"
#include "oracles.hpp"

using namespace multituran;
using std::size_t;
using std::vector;

namespace
{
    auto k3122() -> SmallGraph
    {
        vector<size_t> sizes{1, 2, 2};
        return complete_multipartite_graph(sizes);
    }

    auto k2_plus_2() -> SmallGraph
    {
        vector<size_t> sizes{4, 4};
        auto h = complete_multipartite_graph(sizes);
        h.add_edge(0, 1);
        h.add_edge(2, 3);
        return h;
    }

    auto petersen() -> SmallGraph
    {
        SmallGraph h(10);
        for (size_t i = 0 ; i < 5 ; ++i) {
            h.add_edge(i, (i + 1) % 5);
            h.add_edge(i, i + 5);
            h.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        return h;
    }

    auto wheel(size_t rim) -> SmallGraph
    {
        auto h = SmallGraph(rim + 1);
        for (size_t i = 0 ; i < rim ; ++i) {
            h.add_edge(i, (i + 1) % rim);
            h.add_edge(i, rim);
        }
        return h;
    }

    // Definition check written out independently of is_acc_map.
    auto valid_acc_map(const SmallGraph & h, const ColourMap & phi, size_t classes) -> bool
    {
        if (phi.colour.size() != h.order())
            return false;
        for (size_t v = 0 ; v < h.order() ; ++v) {
            if (phi.colour[v] < 1 || phi.colour[v] > classes)
                return false;
            size_t same = 0;
            for (size_t u = 0 ; u < h.order() ; ++u)
                if (h.adjacent(u, v) && phi.colour[u] == phi.colour[v])
                    ++same;
            if (phi.colour[v] == 1 ? same > 1 : same > 0)
                return false;
        }
        return true;
    }
}

TEST(Chromatic, KnownValues)
{
    EXPECT_EQ(chromatic_number(complete_graph(5)), 5u);
    EXPECT_EQ(chromatic_number(cycle_graph(5)), 3u);
    EXPECT_EQ(chromatic_number(cycle_graph(6)), 2u);
    EXPECT_EQ(chromatic_number(k2_plus_2()), 3u);
    EXPECT_EQ(chromatic_number(petersen()), 3u);
    EXPECT_EQ(chromatic_number(wheel(5)), 4u);
    EXPECT_EQ(chromatic_number(SmallGraph(4)), 1u);
    EXPECT_EQ(chromatic_number(SmallGraph(0)), 0u);
    EXPECT_THROW(chromatic_number(SmallGraph(25)), ResourceLimitExceeded);
}

TEST(Chromatic, AgreesWithIndependentCoverOracle)
{
    Rng rng(101);
    for (int trial = 0 ; trial < 150 ; ++trial) {
        auto n = 1 + rng.below(14);
        auto h = instances::random_small_graph(rng, n, 1 + rng.below(7), 8);
        EXPECT_EQ(chromatic_number(h), oracle::chromatic_number(h)) << "trial " << trial;
    }
    for (auto & f : corpus())
        if (f.graph.vertex_count() <= 14) {
            auto h = to_small_graph(f.graph);
            EXPECT_EQ(chromatic_number(h), oracle::chromatic_number(h)) << f.name;
        }
}

TEST(Chromatic, ColouringIsProper)
{
    Rng rng(7);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto h = instances::random_small_graph(rng, 2 + rng.below(12), 1, 2);
        auto chi = chromatic_number(h);
        auto c = find_colouring(h, chi);
        ASSERT_TRUE(c.has_value());
        EXPECT_LE(c->colours(), chi);
        for (auto [a, b] : h.edges())
            EXPECT_NE(c->colour[a], c->colour[b]);
        if (chi > 1) {
            EXPECT_FALSE(find_colouring(h, chi - 1).has_value());
        }
    }
}

TEST(Chromatic, CliqueBound)
{
    EXPECT_EQ(max_clique_size(complete_graph(6)), 6u);
    EXPECT_EQ(max_clique_size(petersen()), 2u);
    EXPECT_EQ(max_clique_size(wheel(6)), 3u);
}

TEST(Critical, Examples)
{
    EXPECT_TRUE(is_colour_critical(complete_graph(4)));
    EXPECT_FALSE(is_colour_critical(cycle_graph(4)));
    EXPECT_TRUE(is_colour_critical(cycle_graph(5)));
    EXPECT_FALSE(is_colour_critical(k3122()));
    EXPECT_TRUE(is_colour_critical(wheel(5)));
}

TEST(Acc, Examples)
{
    for (size_t k = 3 ; k <= 6 ; ++k)
        EXPECT_TRUE(almost_colour_critical_witness(complete_graph(k)).has_value()) << k;
    EXPECT_FALSE(almost_colour_critical_witness(k3122()).has_value());
    EXPECT_FALSE(almost_colour_critical_witness(complete_bipartite_graph(1, 2)).has_value());
    EXPECT_TRUE(almost_colour_critical_witness(cycle_graph(5)).has_value());
    EXPECT_FALSE(almost_colour_critical_witness(cycle_graph(4)).has_value());
}

TEST(Acc, BruteOracleExamples)
{
    EXPECT_TRUE(acc_brute_oracle(cycle_graph(5)));
    EXPECT_FALSE(acc_brute_oracle(cycle_graph(4)));
    EXPECT_TRUE(acc_brute_oracle(complete_graph(6)));
    EXPECT_THROW(acc_brute_oracle(SmallGraph(13)), ResourceLimitExceeded);
}

TEST(Acc, LowChromaticConventions)
{
    // chi = 1: the single class is edgeless
    EXPECT_TRUE(almost_colour_critical_witness(SmallGraph(3)).has_value());
    // chi = 2: a matching plus isolated vertices, and nothing else
    SmallGraph matching(5, {{0, 1}, {2, 3}});
    EXPECT_TRUE(almost_colour_critical_witness(matching).has_value());
    EXPECT_TRUE(acc_brute_oracle(matching));
    EXPECT_FALSE(almost_colour_critical_witness(complete_bipartite_graph(1, 2)).has_value());
    EXPECT_EQ(acc_class_count(1), 1u);
    EXPECT_EQ(acc_class_count(2), 1u);
    EXPECT_EQ(acc_class_count(5), 4u);
}

TEST(Acc, WitnessIsValidAndLexicographicallyLeast)
{
    Rng rng(17);
    for (int trial = 0 ; trial < 80 ; ++trial) {
        auto n = 2 + rng.below(7);
        auto h = instances::random_small_graph(rng, n, 1 + rng.below(6), 8);
        auto w = almost_colour_critical_witness(h);
        auto classes = acc_class_count(chromatic_number(h));
        // smallest valid map by enumerating all maps in lexicographic order
        std::optional<vector<size_t>> least;
        vector<size_t> phi(n, 1);
        for (;;) {
            if (valid_acc_map(h, ColourMap{phi}, classes)) {
                least = phi;
                break;
            }
            size_t i = n;
            while (i > 0 && phi[i - 1] == classes)
                phi[--i] = 1;
            if (i == 0)
                break;
            ++phi[i - 1];
        }
        ASSERT_EQ(w.has_value(), least.has_value()) << "trial " << trial;
        if (w) {
            EXPECT_TRUE(valid_acc_map(h, *w, classes));
            EXPECT_TRUE(is_acc_map(h, *w));
            EXPECT_EQ(w->colour, *least);
        }
    }
}

TEST(Acc, DeciderMatchesBruteOracleOnRandomGraphs)
{
    Rng rng(29);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto n = 1 + rng.below(10);
        auto h = instances::random_small_graph(rng, n, 1 + rng.below(7), 8);
        EXPECT_EQ(almost_colour_critical_witness(h).has_value(), acc_brute_oracle(h)) << "trial " << trial;
    }
}

TEST(Acc, CriticalImpliesAcc)
{
    Rng rng(31);
    vector<SmallGraph> graphs{complete_graph(3), complete_graph(5), cycle_graph(7), wheel(5), wheel(7), petersen()};
    for (int trial = 0 ; trial < 100 ; ++trial)
        graphs.push_back(instances::random_small_graph(rng, 3 + rng.below(8), 1, 2));
    for (auto & h : graphs)
        if (is_colour_critical(h)) {
            EXPECT_TRUE(almost_colour_critical_witness(h).has_value());
            EXPECT_TRUE(acc_brute_oracle(h));
        }
}

TEST(Acc, CorpusAgreesWithOracle)
{
    size_t recorded = 0, compared = 0;
    for (auto & f : corpus()) {
        if (f.graph.vertex_count() > acc_oracle_limit)
            continue;
        auto h = to_small_graph(f.graph);
        auto decided = almost_colour_critical_witness(h).has_value();
        EXPECT_EQ(decided, acc_brute_oracle(h)) << f.name;
        ++compared;
        if (f.acc) {
            EXPECT_EQ(decided, *f.acc) << f.name;
            ++recorded;
        }
        if (f.chi) {
            EXPECT_EQ(chromatic_number(h), *f.chi) << f.name;
        }
    }
    EXPECT_EQ(recorded, 13u);
    EXPECT_GE(compared, 15u);
}
