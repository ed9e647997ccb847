#include <multituran/colouring.hpp>
#include <multituran/errors.hpp>
#include <multituran/generators.hpp>
#include <multituran/graph_io.hpp>
#include <multituran/small_graph.hpp>
#include <multituran/structure.hpp>
#include <multituran/subgraph.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace multituran;
using std::size_t;
using std::vector;

namespace
{
    auto all_densities(const MultipartiteGraph & g, const Rational & expected) -> bool
    {
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t j = i + 1 ; j < g.part_count() ; ++j)
                if (oracle::density(g, i, j) != expected)
                    return false;
        return true;
    }
}

TEST(Bondy, ChiTwoIsEdgeless)
{
    auto g = bondy_prototype(2, 3);
    EXPECT_EQ(g.part_sizes(), (vector<size_t>{1, 1, 1}));
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_EQ(min_pairwise_density(g).value(), Rational(0));
}

TEST(Bondy, TriangleVersion)
{
    auto g = bondy_prototype(3, 3);
    EXPECT_TRUE(all_densities(g, Rational(1, 2)));
    EXPECT_EQ(oracle::chromatic_number(to_small_graph(g)), 2u);
}

TEST(Bondy, NoK4ForChiFour)
{
    auto g = bondy_prototype(4, 5);
    EXPECT_EQ(g.vertex_count(), 15u);
    EXPECT_EQ(oracle::embeddings(g, complete_graph(4), false), 0u);
}

TEST(Bondy, ChromaticNumberAndDensitiesAcrossParameters)
{
    for (size_t chi = 2 ; chi <= 5 ; ++chi)
        for (size_t l = 2 ; l <= 5 ; ++l) {
            if (chi - 1 > l)
                continue;
            auto g = bondy_prototype(chi, l);
            EXPECT_TRUE(all_densities(g, Rational(chi - 2, chi - 1))) << chi << " " << l;
            EXPECT_EQ(chromatic_number(g), std::min(chi - 1, l)) << chi << " " << l;
            EXPECT_EQ(load_graph(save_graph(g)), g);
        }
    EXPECT_THROW(bondy_prototype(1, 3), InvalidArgument);
    EXPECT_THROW(bondy_prototype(3, 1), InvalidArgument);
}

TEST(LowerBound, DensityFormula)
{
    EXPECT_TRUE(all_densities(lower_bound_graph(2, 4), Rational(19, 36)));
    auto r1 = lower_bound_graph(1, 3);
    EXPECT_EQ(r1.part_sizes(), (vector<size_t>{2, 2, 2}));
    EXPECT_TRUE(all_densities(r1, Rational(1, 4)));
    for (size_t r = 1 ; r <= 3 ; ++r)
        for (size_t l = 2 ; l <= 5 ; ++l) {
            auto g = lower_bound_graph(r, l);
            EXPECT_TRUE(all_densities(g, Rational(r - 1, r) + Rational(1, r * r * (l - 1) * (l - 1)))) << r << " " << l;
        }
    EXPECT_THROW(lower_bound_graph(0, 3), InvalidArgument);
}

TEST(LowerBound, TransversalTriangle)
{
    auto g = lower_bound_graph(2, 5);
    EXPECT_TRUE(find_copy(g, complete_graph(3), CopyMode::transversal).has_value());
}

TEST(LowerBound, DroppingTheMatchingLeavesRColourable)
{
    for (size_t r = 1 ; r <= 3 ; ++r)
        for (size_t l = 2 ; l <= 4 ; ++l) {
            auto g = lower_bound_graph(r, l);
            // matching edges are the only edges inside the first classes
            vector<std::pair<size_t, size_t>> matching;
            auto m = l - 1;
            for (auto [a, b] : g.edges())
                if (a.index < m && b.index < m)
                    matching.emplace_back(g.global(a), g.global(b));
            EXPECT_EQ(matching.size(), l * (l - 1) / 2);
            auto rest = without_edges(g, matching);
            if (rest.vertex_count() <= 16) {
                EXPECT_LE(oracle::chromatic_number(to_small_graph(rest)), r);
            }
            // the class index a / m is a proper r-colouring
            for (auto [a, b] : rest.edges())
                EXPECT_NE(a.index / m, b.index / m);
        }
}

TEST(Family, EqualWeightsTriangleFree)
{
    auto g = build_family_member(FamilySpec::uniform(3, 3, 2));
    EXPECT_TRUE(all_densities(g, Rational(1, 2)));
    EXPECT_EQ(oracle::triangles(g), 0u);
}

TEST(Family, MinimalPermutedInstance)
{
    FamilySpec spec;
    spec.k = 3;
    // part 0 follows the identity order, part 1 the swapped one
    spec.weights = {{2, 1}, {1, 3}};
    EXPECT_NO_THROW(validate(spec));
    auto g = build_family_member(spec);
    EXPECT_EQ(g.part_sizes(), (vector<size_t>{3, 4}));
    EXPECT_LE(chromatic_number(g), 2u);
}

TEST(Family, KFourSixParts)
{
    auto g = build_family_member(FamilySpec::uniform(4, 6, 1));
    EXPECT_EQ(g.vertex_count(), 18u);
    EXPECT_EQ(chromatic_number(g), 3u);
    EXPECT_FALSE(find_copy(g, complete_graph(4), CopyMode::any).has_value());
    EXPECT_TRUE(family_membership(g, 4));
}

TEST(Family, NamedViolations)
{
    auto kind_of = [](const FamilySpec & spec) {
        try {
            validate(spec);
        }
        catch (const FamilySpecViolation & e) {
            return e.kind();
        }
        ADD_FAILURE() << "expected a violation";
        return FamilySpecViolation::Kind::BadParameters;
    };
    FamilySpec ordering{3, {{1, 2}, {1, 1}}, {}};
    EXPECT_EQ(kind_of(ordering), FamilySpecViolation::Kind::OrderingViolated);
    FamilySpec zero{3, {{1, 0}, {0, 1}, {0, 0}}, {}};
    EXPECT_EQ(kind_of(zero), FamilySpecViolation::Kind::ZeroPart);
    FamilySpec tail{3, {{1, 1}, {1, 1}, {2, 1}}, {}};
    EXPECT_EQ(kind_of(tail), FamilySpecViolation::Kind::UnequalTailWeights);
    FamilySpec too_few{3, {{1, 1}}, {}};
    EXPECT_EQ(kind_of(too_few), FamilySpecViolation::Kind::BadParameters);

    FamilySpec removal = FamilySpec::uniform(3, 3, 1);
    removal.removals = {{{0, 0, 0}, {2, 1, 0}}};
    EXPECT_EQ(kind_of(removal), FamilySpecViolation::Kind::IllegalRemoval);
    FamilySpec non_edge = FamilySpec::uniform(3, 3, 1);
    non_edge.removals = {{{0, 0, 0}, {1, 0, 0}}};
    EXPECT_EQ(kind_of(non_edge), FamilySpecViolation::Kind::IllegalRemoval);
}

TEST(Family, RemovalIsReportedBySeparateCheck)
{
    FamilySpec spec = FamilySpec::uniform(3, 3, 1);
    spec.removals = {{{0, 0, 0}, {1, 1, 0}}};
    auto g = build_family_member(spec);
    EXPECT_EQ(g.edge_count(), build_family_member(FamilySpec::uniform(3, 3, 1)).edge_count() - 1);
    EXPECT_FALSE(satisfies_family_density(g, 3));
    EXPECT_TRUE(satisfies_family_density(build_family_member(FamilySpec::uniform(3, 3, 1)), 3));
}

TEST(Family, PermutationHelpers)
{
    EXPECT_EQ(permuted_part_count(3), 2u);
    EXPECT_EQ(permuted_part_count(4), 6u);
    auto p = permutations_of(3);
    ASSERT_EQ(p.size(), 6u);
    EXPECT_EQ(p.front(), (vector<size_t>{0, 1, 2}));
    EXPECT_EQ(p.back(), (vector<size_t>{2, 1, 0}));
}

TEST(CompleteMultipartite, SmallCases)
{
    vector<size_t> two_two{2, 2};
    auto c4 = complete_multipartite(two_two, 0);
    EXPECT_EQ(c4.edge_count(), 4u);
    EXPECT_EQ(oracle::cycle_lengths(c4), (std::set<size_t>{4}));

    vector<size_t> two_one{2, 1};
    auto k3 = complete_multipartite(two_one, 1);
    EXPECT_EQ(k3.vertex_count(), 3u);
    EXPECT_EQ(k3.edge_count(), 3u);
    EXPECT_EQ(oracle::triangles(k3), 1u);

    vector<size_t> bad{1, 3};
    EXPECT_THROW(complete_multipartite(bad, 1), InvalidArgument);
}

TEST(CompleteMultipartite, UniversalGraphIsAcc)
{
    // k = 3, q = 2: K_2(4,4) plus a 2-matching in the first class
    vector<size_t> sizes{4, 4};
    auto h = to_small_graph(complete_multipartite(sizes, 2));
    EXPECT_EQ(chromatic_number(h), 3u);
    EXPECT_TRUE(almost_colour_critical_witness(h).has_value());
    EXPECT_TRUE(acc_brute_oracle(h));
}

TEST(K12Extremal, MatchingStructure)
{
    for (size_t l = 3 ; l <= 6 ; ++l) {
        auto g = k12_extremal(l);
        EXPECT_EQ(g.edge_count(), l * (l - 1) / 2);
        for (size_t v = 0 ; v < g.vertex_count() ; ++v)
            EXPECT_EQ(g.degree(v), 1u);
        EXPECT_TRUE(all_densities(g, Rational(1, (l - 1) * (l - 1))));
        EXPECT_EQ(count_copies(g, complete_bipartite_graph(1, 2), CopyMode::any), 0u);
    }
    EXPECT_THROW(k12_extremal(2), InvalidArgument);
}

TEST(TwoClique, DensitiesAndComponents)
{
    auto g = two_clique_union(3, 30);
    EXPECT_EQ(g.part_sizes(), (vector<size_t>{10, 10, 10}));
    EXPECT_TRUE(all_densities(g, Rational(13, 25)));

    auto small = two_clique_union(2, 16);
    auto lengths = oracle::cycle_lengths(small);
    ASSERT_FALSE(lengths.empty());
    EXPECT_LE(*lengths.rbegin(), 12u);
    EXPECT_THROW(two_clique_union(3, 10), InvalidArgument);
}

TEST(TwoClique, ExactlyTwoComponents)
{
    for (auto [l, n] : {std::pair<size_t, size_t>{2, 16}, {2, 24}, {3, 18}, {3, 30}, {4, 40}}) {
        auto g = two_clique_union(l, n);
        vector<size_t> comp(g.vertex_count(), SIZE_MAX);
        size_t components = 0;
        for (size_t s = 0 ; s < g.vertex_count() ; ++s) {
            if (comp[s] != SIZE_MAX)
                continue;
            vector<size_t> stack{s};
            comp[s] = components;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (size_t u = 0 ; u < g.vertex_count() ; ++u)
                    if (g.adjacent(v, u) && comp[u] == SIZE_MAX) {
                        comp[u] = components;
                        stack.push_back(u);
                    }
            }
            ++components;
        }
        EXPECT_EQ(components, 2u) << l << " " << n;
        EXPECT_GT(min_pairwise_density(g).value(), Rational(1, 2));
    }
}

TEST(Generators, RoundTripThroughFile)
{
    vector<size_t> sizes{3, 2, 2};
    for (auto & g : {bondy_prototype(3, 5), lower_bound_graph(2, 3), build_family_member(FamilySpec::uniform(3, 4, 2)),
                     complete_multipartite(sizes, 1), k12_extremal(5), two_clique_union(3, 18)}) {
        EXPECT_EQ(load_graph(save_graph(g)), g);
        EXPECT_EQ(load_dot(save_dot(g)), g);
    }
}
