#pragma once

#include <multituran/graph.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace multituran
{
    /// A general simple graph on at most 64 vertices with one machine word of
    /// adjacency per vertex. Patterns and colouring inputs live here.
    class SmallGraph
    {
        public:
            using Mask = std::uint64_t;
            static constexpr std::size_t max_order = 64;

            SmallGraph() = default;
            explicit SmallGraph(std::size_t order);
            SmallGraph(std::size_t order, std::initializer_list<std::pair<std::size_t, std::size_t>> edges);

            auto order() const -> std::size_t { return _rows.size(); }
            auto edge_count() const -> std::size_t;

            /// Throws InvalidGraph on a self loop or out-of-range endpoint.
            /// Adding an existing edge is a no-op.
            auto add_edge(std::size_t a, std::size_t b) -> void;
            auto remove_edge(std::size_t a, std::size_t b) -> void;

            auto adjacent(std::size_t a, std::size_t b) const -> bool { return (_rows[a] >> b) & 1; }
            auto neighbours(std::size_t v) const -> Mask { return _rows[v]; }
            auto degree(std::size_t v) const -> std::size_t { return std::popcount(_rows[v]); }
            auto max_degree() const -> std::size_t;

            /// Every edge once as (smaller, larger), sorted.
            auto edges() const -> std::vector<std::pair<std::size_t, std::size_t>>;

            /// Induced subgraph on the vertices of mask, relabelled in increasing order.
            auto induced(Mask vertices) const -> SmallGraph;

            friend auto operator==(const SmallGraph &, const SmallGraph &) -> bool = default;

        private:
            std::vector<Mask> _rows;
    };

    auto complete_graph(std::size_t n) -> SmallGraph;
    auto cycle_graph(std::size_t n) -> SmallGraph;
    /// K_{a,b}; K_{1,2} is the path on three vertices.
    auto complete_bipartite_graph(std::size_t a, std::size_t b) -> SmallGraph;
    /// K_r(t_1..t_r) with vertices laid out class by class.
    auto complete_multipartite_graph(std::span<const std::size_t> sizes) -> SmallGraph;

    /// Forgets the partition. Throws ResourceLimitExceeded beyond 64 vertices.
    auto to_small_graph(const MultipartiteGraph & g) -> SmallGraph;

    /// Each vertex becomes its own part, so any simple graph can be stored in
    /// the multipartite file format.
    auto to_multipartite(const SmallGraph & h) -> MultipartiteGraph;
}
