#pragma once

#include <multituran/graph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace multituran
{
    /// Splits each of l points into chi-1 vertices; x_i ~ y_j iff x != y and
    /// i != j. Every pair of parts has density (chi-2)/(chi-1) and the graph is
    /// (chi-1)-colourable by the split index.
    auto bondy_prototype(std::size_t chi, std::size_t parts) -> MultipartiteGraph;

    /// Parts of size (l-1)r, each cut into r classes of l-1 vertices. Classes
    /// s != t of distinct parts are completely joined, and the first classes
    /// carry a perfect matching with exactly one edge per pair of parts: slot
    /// j of part i is matched with slot i of part j, where slot j of part i is
    /// local index j (j < i) or j-1 (j > i). Every density is
    /// (r-1)/r + 1/(r^2 (l-1)^2).
    auto lower_bound_graph(std::size_t r, std::size_t parts) -> MultipartiteGraph;

    /// Weights, permutation order and removals of a member of the family
    /// G_l^k. Indices are zero-based throughout: part i < l, class s < k-1,
    /// copy t < weights[i][s]. Part i < (k-1)! is ordered by the i-th
    /// permutation of {0..k-2} in lexicographic order.
    struct FamilySpec
    {
        struct Vertex
        {
            std::size_t part = 0, cls = 0, copy = 0;
            friend auto operator<=>(const Vertex &, const Vertex &) = default;
        };

        std::size_t k = 3;
        std::vector<std::vector<std::size_t>> weights;
        std::vector<std::pair<Vertex, Vertex>> removals;

        auto parts() const -> std::size_t { return weights.size(); }

        /// Every weight equal to w, no removals.
        static auto uniform(std::size_t k, std::size_t parts, std::size_t w) -> FamilySpec;
    };

    class FamilySpecViolation : public std::invalid_argument
    {
        public:
            enum class Kind
            {
                BadParameters,
                OrderingViolated,
                UnequalTailWeights,
                ZeroPart,
                IllegalRemoval
            };

            FamilySpecViolation(Kind kind, const std::string & message) :
                std::invalid_argument(message),
                _kind(kind)
            {
            }

            auto kind() const -> Kind { return _kind; }

        private:
            Kind _kind;
    };

    /// (k-1)!, the number of permuted parts in a family member.
    auto permuted_part_count(std::size_t k) -> std::size_t;

    /// All permutations of {0..n-1} in lexicographic order.
    auto permutations_of(std::size_t n) -> std::vector<std::vector<std::size_t>>;

    /// Throws FamilySpecViolation naming the first broken rule.
    auto validate(const FamilySpec & spec) -> void;

    /// Vertices (i,s,t) with (i,s,t) ~ (i',s',t') iff i != i' and s != s',
    /// minus the removals. Part i lists class 0 copies first, then class 1, ...
    auto build_family_member(const FamilySpec & spec) -> MultipartiteGraph;

    /// Local index of (part, cls, copy) inside its part in build_family_member's layout.
    auto family_local_index(const FamilySpec & spec, const FamilySpec::Vertex & v) -> std::size_t;

    /// Whether every pairwise density reaches (k-2)/(k-1). Removals are only
    /// validated for legality, so a member built with removals may fail this.
    auto satisfies_family_density(const MultipartiteGraph & g, std::size_t k) -> bool;

    /// K_r(t_1..t_r) plus a matching of the given size inside the first class.
    /// When the matching is non-empty the first class is stored as two parts
    /// (left endpoints and unmatched vertices, then right endpoints) so that
    /// the result stays partite; classes 2..r follow as one part each.
    auto complete_multipartite(std::span<const std::size_t> sizes, std::size_t matching_size) -> MultipartiteGraph;

    /// Parts of size l-1 made of singletons v_{i,j} (j != i, same slot rule as
    /// lower_bound_graph) with edges v_{i,j} v_{j,i}: a perfect matching of
    /// degree-one vertices, density 1/(l-1)^2 everywhere, no K_{1,2}.
    auto k12_extremal(std::size_t parts) -> MultipartiteGraph;

    /// Disjoint union of K_l(floor(n/2l) - 1) and K_l(ceil(n/2l) + 1); part i
    /// holds the smaller factor's class first.
    auto two_clique_union(std::size_t parts, std::size_t n) -> MultipartiteGraph;
}
