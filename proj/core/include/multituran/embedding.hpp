#pragma once

#include <multituran/graph.hpp>
#include <multituran/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multituran
{
    /// Classes W^(1..r), each cut into blocks W^(s)_i over a shared block index
    /// set. Every set is a bitset over the host's global ids.
    struct SubdividedClasses
    {
        std::vector<std::vector<Bitset>> blocks; // [class][block]

        auto classes() const -> std::size_t { return blocks.size(); }
        auto block_count() const -> std::size_t { return blocks.empty() ? 0 : blocks.front().size(); }
        auto class_set(std::size_t s) const -> Bitset;
    };

    /// Throws InvalidArgument unless blocks are disjoint, share one index set
    /// and fit the host.
    auto check_subdivided(const MultipartiteGraph & g, const SubdividedClasses & w) -> void;

    /// Images of K_r(a_1..a_r): images[s] lists the host vertices of class s,
    /// so a_s = images[s].size().
    struct GoodEmbedding
    {
        std::vector<std::vector<std::size_t>> images;

        friend auto operator==(const GoodEmbedding &, const GoodEmbedding &) -> bool = default;
    };

    /// Class s maps into W^(s), images are distinct, no two land in the same
    /// block index, and all edges between different classes are present.
    auto is_good_embedding(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f) -> bool;

    /// Throws HypothesisViolation with a witness unless every block has
    /// |W^(s)_i| < |W^(s)|/(2rq) and every v outside W^(s) but inside another
    /// class has deg(v, W^(s)) > (1 - 1/(2rq))|W^(s)|, both strictly.
    auto check_extension_hypotheses(const MultipartiteGraph & g, const SubdividedClasses & w, std::size_t q) -> void;

    /// Grows f one vertex at a time to a good embedding of K_r(q). The class
    /// filled next is the smallest one still short of q; its image is the
    /// smallest vertex of W^(s) adjacent to every image of the other classes
    /// whose block index is still unused. Hypotheses are checked first.
    auto extend_good_embedding(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f, std::size_t q)
        -> GoodEmbedding;

    /// The same greedy extension without the hypothesis check; nullopt when
    /// it gets stuck.
    auto try_extend_good_embedding(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f, std::size_t q)
        -> std::optional<GoodEmbedding>;

    /// Counting identities behind the common neighbourhood selection, exact.
    struct CommonNeighbourCounts
    {
        /// sum over q-subsets A of U of prod_s |N(A) cap W_(s)|.
        BigInt subset_side;
        /// sum over tuples (w_1..w_r) of binom(|N(w_1..w_r) cap U|, q).
        BigInt tuple_side;
        /// binom(d^r |U|, q) * prod_s |W_(s)|, with binom(x, q) = 0 for x < q-1.
        Rational jensen_bound;
        /// sum over tuples of |N(w_1..w_r) cap U|.
        BigInt degree_side;
        /// d^r |U| prod_s |W_(s)|.
        Rational degree_bound;

        auto holds() const -> bool
        {
            return subset_side == tuple_side && Rational(tuple_side) >= jensen_bound && Rational(degree_side) >= degree_bound;
        }
    };

    struct SelectResult
    {
        /// The first q-subset in lexicographic order meeting every class bound.
        std::optional<std::vector<std::size_t>> A;
        /// Subset with the largest minimum ratio, reported when A is absent.
        std::vector<std::size_t> best;
        /// |N(subset) cap W_(s)| for A, or for best.
        std::vector<std::size_t> common;
        /// e^(-q) d^(rq), rounded for display only; comparisons are exact.
        double rho = 0;
        CommonNeighbourCounts counts;
    };

    inline constexpr std::size_t select_u_limit = 12;
    inline constexpr std::size_t select_q_limit = 3;

    /// Scans all q-subsets of U for |N(A) cap W_(s)| >= e^(-q) d^(rq) |W_(s)|.
    /// Needs |U| >= q d^(-r) and deg(u, W_(s)) >= d|W_(s)| for every u and s;
    /// |U| <= 12 and q <= 3.
    auto common_neighbour_select(const MultipartiteGraph & g, const Bitset & u, const std::vector<Bitset> & w, std::size_t q,
            const Rational & d) -> SelectResult;

    /// Whether count >= e^(-q) d^(rq) size. e is bracketed by rationals, with
    /// a long double fallback only inside the bracket.
    auto meets_rho(std::uint64_t count, std::uint64_t size, std::size_t q, std::size_t r, const Rational & d) -> bool;

    struct CliqueCount
    {
        std::uint64_t count = 0;
        Rational bound;
        bool holds = false;
    };

    /// Exact number of K_r with one vertex in each W_(s), against h^r / 2.
    /// Every |W_(s)| must equal h and every cross-class vertex must have
    /// deg(w, W_(s)) >= (1 - 1/r^2) h. 2 <= r <= 4, h <= 12.
    auto count_kr_lower(const MultipartiteGraph & g, const std::vector<Bitset> & w, std::size_t r, std::size_t h) -> CliqueCount;

    /// Bipartite graph with left vertices 0..left-1 and right vertices
    /// 0..right-1; rows[u] is the right neighbourhood of u.
    struct BipartiteGraph
    {
        std::size_t right = 0;
        std::vector<Bitset> rows;

        auto left() const -> std::size_t { return rows.size(); }
        auto edge_count() const -> std::uint64_t;
    };

    struct BipartiteWitness
    {
        std::size_t a = 0, b = 0;
        /// Target sizes floored to zero; the witness is empty and not found.
        bool degenerate = false;
        bool found = false;
        std::vector<std::size_t> left, right;
        /// Largest common neighbourhood over all a-subsets.
        std::size_t best_common = 0;
    };

    /// a = floor(alpha^r L), b = floor(q^(1 - alpha^(r-1))) with q = right
    /// size and L = ln q unless a surrogate is injected. Surrogate values are
    /// for exercising the pipeline at small sizes and are not the lemma's
    /// parameters.
    auto bipartite_targets(std::size_t right, const Rational & alpha, std::size_t r, std::optional<Rational> log_surrogate)
        -> std::pair<std::size_t, std::size_t>;

    /// A complete K(a,b) in b: the a-subset of the left side with the largest
    /// common neighbourhood (first in lexicographic order), plus the first b of
    /// those neighbours. Needs 0 < alpha < 1/4, r >= 2, left >= 4a and
    /// e >= left * right / 2; a <= 3. The witness is checked edge by edge.
    auto dense_bipartite_complete(const BipartiteGraph & b, const Rational & alpha, std::size_t r,
            std::optional<Rational> log_surrogate = std::nullopt) -> BipartiteWitness;

    struct LogCompleteEmbedding
    {
        /// Host vertices per class, in the order of the given classes.
        std::vector<std::vector<std::size_t>> classes;
        std::size_t a = 0, b = 0;
        bool degenerate = false;
        bool found = false;
    };

    /// K_r(a..a, b) with its large class inside W_(s), built by induction: a
    /// K_{r-1}(m) on the other classes, its m column cliques joined to W_(s)
    /// as a bipartite graph, then dense_bipartite_complete. Needs equal class
    /// sizes h and deg(w, W_(t)) >= (1 - 1/r^2) h across classes.
    auto embed_log_complete(const MultipartiteGraph & g, const std::vector<Bitset> & w, const Rational & alpha, std::size_t r,
            std::size_t s, std::optional<Rational> log_surrogate = std::nullopt) -> LogCompleteEmbedding;
}
