#pragma once

#include <multituran/graph.hpp>
#include <multituran/small_graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace multituran
{
    enum class CopyMode
    {
        any,
        /// No two pattern vertices in one host part, adjacent or not.
        transversal
    };

    /// image[p] is the host global id of pattern vertex p.
    struct EmbeddingMap
    {
        std::vector<std::size_t> image;

        friend auto operator==(const EmbeddingMap &, const EmbeddingMap &) -> bool = default;
    };

    inline constexpr std::size_t find_pattern_limit = 10;
    inline constexpr std::size_t count_pattern_limit = 6;
    inline constexpr std::size_t cycle_host_limit = 40;

    /// Checks injectivity, edge preservation and, in transversal mode, that
    /// every image lies in a different part.
    auto is_embedding(const MultipartiteGraph & g, const SmallGraph & h, const EmbeddingMap & f, CopyMode mode) -> bool;

    /// One embedding of h into g, or nullopt. Backtracks over the pattern
    /// vertices, each next vertex chosen to have the most already-placed
    /// neighbours; candidates are the common neighbourhood of the placed
    /// neighbours' images, filtered by degree and by used parts in transversal
    /// mode. The first embedding in candidate order is returned. v(h) <= 10,
    /// and transversal mode needs at least v(h) parts.
    auto find_copy(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode) -> std::optional<EmbeddingMap>;

    /// Number of labelled embeddings. Root branches are split across threads
    /// when threads > 1; the total does not depend on the split. v(h) <= 6.
    auto count_embeddings(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode, unsigned threads = 1) -> std::uint64_t;

    /// |Aut(h)| by trying every vertex permutation. v(h) <= 8.
    auto automorphism_count(const SmallGraph & h) -> std::uint64_t;

    /// Unlabelled copies: count_embeddings / |Aut(h)|. v(h) <= 6.
    auto count_copies(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode, unsigned threads = 1) -> std::uint64_t;

    struct Book
    {
        /// Global ids, smaller first; absent only for an edgeless host.
        std::optional<std::pair<std::size_t, std::size_t>> edge;
        std::uint64_t count = 0;
    };

    /// The edge lying in the most copies of K_r, with that count; ties go to
    /// the lexicographically smallest edge. For r = 3 the count is b(G).
    /// 3 <= r <= 5.
    auto max_book(const MultipartiteGraph & g, std::size_t r) -> Book;

    /// Number of r-cliques inside a vertex set.
    auto count_cliques_in(const MultipartiteGraph & g, const Bitset & within, std::size_t r) -> std::uint64_t;

    /// Every h in [3, max_length] for which g has a cycle of length exactly h,
    /// ascending. Each cycle is rooted at its smallest vertex and walked in
    /// the direction whose second vertex is the smaller root neighbour.
    /// Lengths are skipped once found or once ruled out by parity
    /// (bipartite components) or by the per-part count (a cycle of length h
    /// has at most h/2 vertices in any part). v(g) <= 40.
    auto cycle_spectrum(const MultipartiteGraph & g, std::size_t max_length) -> std::vector<std::size_t>;
}
