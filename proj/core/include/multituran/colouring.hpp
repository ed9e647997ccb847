#pragma once

#include <multituran/graph.hpp>
#include <multituran/small_graph.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace multituran
{
    /// colour[v] in 1..colours for every vertex.
    struct ColourMap
    {
        std::vector<std::size_t> colour;

        auto colours() const -> std::size_t;
        /// Vertex mask of one colour class.
        auto class_mask(std::size_t c) const -> SmallGraph::Mask;

        friend auto operator==(const ColourMap &, const ColourMap &) -> bool = default;
    };

    inline constexpr std::size_t chromatic_limit = 24;
    inline constexpr std::size_t critical_limit = 20;
    inline constexpr std::size_t acc_oracle_limit = 12;

    /// Exact chromatic number by branch and bound: a maximum clique gives the
    /// lower bound, a greedy colouring the upper bound, and DSatur-ordered
    /// backtracking closes the gap. At most 24 vertices.
    auto chromatic_number(const SmallGraph & h) -> std::size_t;
    auto chromatic_number(const MultipartiteGraph & g) -> std::size_t;

    /// A proper colouring with at most k colours, if one exists.
    auto find_colouring(const SmallGraph & h, std::size_t k) -> std::optional<ColourMap>;

    auto max_clique_size(const SmallGraph & h) -> std::size_t;

    /// Some edge whose deletion lowers the chromatic number. At most 20 vertices.
    auto is_colour_critical(const SmallGraph & h) -> bool;

    /// Number of colours an almost-colour-critical map uses: chi(H) - 1, with
    /// chi(H) <= 2 collapsing onto the single class 1.
    auto acc_class_count(std::size_t chi) -> std::size_t;

    /// Whether phi uses colours 1..acc_class_count(chi(h)), class 1 induces
    /// maximum degree at most one, and every other class is independent.
    auto is_acc_map(const SmallGraph & h, const ColourMap & phi) -> bool;

    /// The lexicographically least map witnessing that h is almost colour
    /// critical, or nullopt. Vertices are coloured in index order; colours
    /// 2.. are interchangeable, so a new one is opened only after all smaller
    /// ones are in use. At most 20 vertices.
    auto almost_colour_critical_witness(const SmallGraph & h) -> std::optional<ColourMap>;

    /// The same predicate by enumerating every map V(H) -> [c] without any
    /// pruning. At most 12 vertices.
    auto acc_brute_oracle(const SmallGraph & h) -> bool;
}
