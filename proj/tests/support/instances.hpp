#pragma once

// Seeded random instances for the property suites.

#include <multituran/embedding.hpp>
#include <multituran/graph.hpp>
#include <multituran/random.hpp>
#include <multituran/small_graph.hpp>
#include <multituran/structure.hpp>

#include <cstdint>
#include <vector>

namespace instances
{
    using namespace multituran;

    /// Each cross pair present with probability num/den.
    auto random_multipartite(Rng & rng, std::vector<std::size_t> sizes, std::uint64_t num, std::uint64_t den) -> MultipartiteGraph;
    auto random_small_graph(Rng & rng, std::size_t n, std::uint64_t num, std::uint64_t den) -> SmallGraph;

    /// A structure passing verify_infracolourable, with part sizes in
    /// [1, max_part]. Roughly a third are built to reach equality.
    auto random_infra_structure(Rng & rng, std::size_t k, std::size_t parts, std::size_t max_part) -> InfraStructure;

    struct ExtensionInstance
    {
        MultipartiteGraph host;
        SubdividedClasses w;
        std::size_t q = 1;
    };

    /// Host parts are the block indices; part i holds W^(s)_i for every s.
    /// Cross-class pairs are deleted at random within the degree budget.
    auto random_extension_instance(Rng & rng, std::size_t r, std::size_t q, std::size_t max_class) -> ExtensionInstance;

    /// Every good embedding of some K_r(a_1..a_r) with a_s <= q, in a fixed
    /// order, stopping after limit.
    auto good_embeddings(const MultipartiteGraph & g, const SubdividedClasses & w, std::size_t q, std::size_t limit)
        -> std::vector<GoodEmbedding>;

    struct SelectInstance
    {
        MultipartiteGraph host;
        Bitset u;
        std::vector<Bitset> w;
        std::size_t q = 1;
        Rational d;
    };

    /// Part 0 is U with |U| = ceil(q d^(-r)); parts 1..r are the W_(s). Every
    /// u gets at least ceil(d |W_(s)|) neighbours in each W_(s).
    auto random_select_instance(Rng & rng, std::size_t r, std::size_t q, const Rational & d, std::size_t max_class) -> SelectInstance;

    /// K_r(h) minus random edges, keeping every cross degree >= (1 - 1/r^2) h.
    auto random_dense_classes(Rng & rng, std::size_t r, std::size_t h) -> MultipartiteGraph;

    auto part_sets(const MultipartiteGraph & g) -> std::vector<Bitset>;
}
