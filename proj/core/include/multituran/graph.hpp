#pragma once

#include <multituran/bitset.hpp>
#include <multituran/rational.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace multituran
{
    /// A vertex named by its part and its position inside that part, both
    /// zero-indexed.
    struct VertexId
    {
        std::size_t part = 0;
        std::size_t index = 0;

        friend auto operator<=>(const VertexId &, const VertexId &) = default;
    };

    auto to_string(const VertexId & v) -> std::string;

    using Edge = std::pair<VertexId, VertexId>;

    class GraphBuilder;

    /// An l-partite graph with labelled parts V_1..V_l. Every edge joins two
    /// distinct parts; this is enforced at construction. Vertices also carry a
    /// global id (parts laid out consecutively) which indexes the adjacency
    /// bitsets. Immutable once built, so concurrent reads are safe.
    class MultipartiteGraph
    {
        public:
            /// Throws InvalidGraph on an empty part list, an empty part, an
            /// out-of-range endpoint, a self loop, an edge inside a part, or a
            /// duplicated edge.
            MultipartiteGraph(std::vector<std::size_t> part_sizes, std::span<const Edge> edges);

            auto part_count() const -> std::size_t { return _part_sizes.size(); }
            auto part_size(std::size_t part) const -> std::size_t { return _part_sizes.at(part); }
            auto part_sizes() const -> const std::vector<std::size_t> & { return _part_sizes; }
            auto part_offset(std::size_t part) const -> std::size_t { return _part_offsets.at(part); }

            auto vertex_count() const -> std::size_t { return _part_of.size(); }
            auto edge_count() const -> std::size_t { return _edge_count; }

            auto global(const VertexId & v) const -> std::size_t;
            auto vertex(std::size_t global_id) const -> VertexId;
            auto part_of(std::size_t global_id) const -> std::size_t { return _part_of[global_id]; }

            auto adjacent(std::size_t a, std::size_t b) const -> bool { return _rows[a].test(b); }
            auto adjacent(const VertexId & a, const VertexId & b) const -> bool { return adjacent(global(a), global(b)); }
            auto neighbours(std::size_t v) const -> const Bitset & { return _rows[v]; }
            auto degree(std::size_t v) const -> std::size_t { return _rows[v].count(); }
            auto rows() const -> std::span<const Bitset> { return _rows; }

            /// Global ids of part i as a bitset.
            auto part_mask(std::size_t part) const -> const Bitset & { return _part_masks.at(part); }

            /// Number of edges between parts i and j.
            auto cross_edge_count(std::size_t i, std::size_t j) const -> std::size_t;

            /// Every edge once, each written (smaller, larger) and sorted.
            auto edges() const -> std::vector<Edge>;

            friend auto operator==(const MultipartiteGraph & a, const MultipartiteGraph & b) -> bool
            {
                return a._part_sizes == b._part_sizes && a._rows == b._rows;
            }

        private:
            friend class GraphBuilder;
            MultipartiteGraph(std::vector<std::size_t> part_sizes, std::vector<Bitset> rows);
            auto init_layout() -> void;

            std::vector<std::size_t> _part_sizes;
            std::vector<std::size_t> _part_offsets;
            std::vector<std::size_t> _part_of;
            std::vector<Bitset> _part_masks;
            std::vector<Bitset> _rows;
            std::size_t _edge_count = 0;
    };

    /// Mutable staging area for graphs assembled edge by edge.
    class GraphBuilder
    {
        public:
            explicit GraphBuilder(std::vector<std::size_t> part_sizes);

            auto vertex_count() const -> std::size_t { return _part_of.size(); }
            auto global(const VertexId & v) const -> std::size_t;

            /// Throws InvalidGraph on a duplicate, a self loop or a same-part pair.
            auto add_edge(const VertexId & a, const VertexId & b) -> void;
            auto add_edge(std::size_t a, std::size_t b) -> void;
            /// Throws InvalidGraph if the edge is absent.
            auto remove_edge(const VertexId & a, const VertexId & b) -> void;
            auto has_edge(const VertexId & a, const VertexId & b) const -> bool;

            auto build() const -> MultipartiteGraph;

        private:
            std::vector<std::size_t> _part_sizes;
            std::vector<std::size_t> _part_offsets;
            std::vector<std::size_t> _part_of;
            std::vector<Bitset> _rows;
    };

    /// e(V_i, V_j) / (|V_i| |V_j|). Throws InvalidArgument for i == j or an
    /// index out of range.
    auto density(const MultipartiteGraph & g, std::size_t i, std::size_t j) -> Density;

    /// Minimum of density over all unordered part pairs. Needs at least two parts.
    auto min_pairwise_density(const MultipartiteGraph & g) -> Density;

    /// Exact density between two disjoint vertex sets given as global-id
    /// bitsets; e(A, B) / (|A| |B|). Both sets must be non-empty.
    auto set_density(const MultipartiteGraph & g, const Bitset & a, const Bitset & b) -> Rational;

    /// Replaces each vertex of part i by factors[i] clones; clones of adjacent
    /// vertices are adjacent. Vertex (i, a) becomes (i, a * factors[i] + c).
    auto blow_up(const MultipartiteGraph & g, std::span<const std::size_t> factors) -> MultipartiteGraph;

    auto is_balanced(const MultipartiteGraph & g) -> bool;

    /// The graph on the same vertices with one edge toggled. Throws
    /// InvalidGraph if the pair lies inside a part.
    auto with_edge_toggled(const MultipartiteGraph & g, std::size_t a, std::size_t b) -> MultipartiteGraph;

    /// Same graph with every edge between the given global-id pairs removed.
    auto without_edges(const MultipartiteGraph & g, std::span<const std::pair<std::size_t, std::size_t>> removals) -> MultipartiteGraph;
}
