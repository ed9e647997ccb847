#pragma once

#include <multituran/graph.hpp>
#include <multituran/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace multituran
{
    /// Sets F_i^(s) for every part i and class s, each stored as a bitset over
    /// global vertex ids. Classes are 0-based.
    struct ClassFamily
    {
        std::vector<std::vector<Bitset>> sets; // [part][class]

        /// All sets empty.
        static auto empty(const MultipartiteGraph & g, std::size_t classes) -> ClassFamily;
        /// label[v] is the class of global vertex v, or no_class to leave it out.
        static auto from_labels(const MultipartiteGraph & g, std::size_t classes, std::span<const std::size_t> label) -> ClassFamily;

        static constexpr std::size_t no_class = static_cast<std::size_t>(-1);

        auto parts() const -> std::size_t { return sets.size(); }
        auto classes() const -> std::size_t { return sets.empty() ? 0 : sets.front().size(); }
        auto at(std::size_t part, std::size_t cls) const -> const Bitset & { return sets.at(part).at(cls); }
        /// Union over all parts of class s.
        auto class_union(std::size_t cls) const -> Bitset;

        friend auto operator==(const ClassFamily &, const ClassFamily &) -> bool = default;
    };

    /// Throws InvalidArgument unless f has one row per part, the given number
    /// of classes, bitsets of size v(g), and F_i^(s) inside V_i.
    auto check_family(const MultipartiteGraph & g, const ClassFamily & f, std::size_t classes, const std::string & name) -> void;

    struct InfraStructure
    {
        MultipartiteGraph base;
        std::size_t k = 3;
        Rational eta;
        ClassFamily Y;
        ClassFamily D;
    };

    struct ConditionResult
    {
        bool pass = true;
        /// Empty on pass; otherwise the offending vertex or edge (global ids).
        std::vector<std::size_t> witness;
        std::string message;
    };

    struct InfraReport
    {
        ConditionResult partition;    // (i)
        ConditionResult independence; // (ii)
        ConditionResult degrees;      // (iii)

        auto ok() const -> bool { return partition.pass && independence.pass && degrees.pass; }
    };

    /// Checks the three defining conditions and reports the first violation of
    /// each. The non-neighbour floor in (iii) counts only vertices of other
    /// parts, since vertices of the own part are never neighbours.
    auto verify_infracolourable(const InfraStructure & s) -> InfraReport;

    struct EdgeBound
    {
        std::uint64_t lhs = 0;
        Rational rhs;
        bool holds = false;
        bool equality = false;
        /// On equality with a valid certificate: 0 for no exceptional part,
        /// otherwise the 1-based exceptional part.
        std::optional<std::size_t> i0;
        /// On equality without a valid certificate: the broken clause.
        std::string violated_clause;
        /// Edge count implied by the certificate.
        std::optional<std::uint64_t> reconstructed;
    };

    /// e(G) against (k-2)/(k-1) * sum |V_i||V_j|, both exact. Throws
    /// HypothesisViolation when s is not infracolourable.
    auto infra_edge_bound(const InfraStructure & s) -> EdgeBound;

    /// Checks the equality characterization for one candidate i0 (0 or a
    /// 1-based part); returns the broken clause or nullopt.
    auto check_equality_certificate(const InfraStructure & s, std::size_t i0) -> std::optional<std::string>;

    /// sum over i<j and s!=t of |Y_i^(s)||Y_j^(t)|.
    auto cross_class_pairs(const MultipartiteGraph & g, const ClassFamily & y) -> std::uint64_t;

    struct OutlierReport
    {
        /// Per class s, the parts i with |X_i^(s)|/|V_i| > 1/(k-1) + sqrt(eps).
        std::vector<std::vector<std::size_t>> outliers;
        bool hypothesis_ok = false;
        /// First failed hypothesis, or the pair of parts breaking the density.
        std::string hypothesis_failure;
        std::optional<std::pair<std::size_t, std::size_t>> sparse_pair;
        /// Every outlier set has at most one part.
        bool at_most_one = false;
        /// Union of the outlier sets, when the hypotheses hold and at_most_one.
        std::optional<std::vector<std::size_t>> I0;
        /// | |X_i^(s)|/|V_i| - 1/(k-1) | <= k sqrt(eps) for every s and every i outside I0.
        std::optional<bool> conclusion_ok;
    };

    /// Square roots are avoided by comparing squares exactly. 0 < eps < 1/4.
    auto balanced_outliers(const MultipartiteGraph & g, const ClassFamily & x, std::span<const Bitset> t, const Rational & eps,
            std::size_t k) -> OutlierReport;

    /// chi(G) <= k-1 and every pairwise density at least (k-2)/(k-1), which
    /// is equivalent to isomorphism with a member of G_l^k. Needs l >= (k-1)!
    /// and v(G) <= 24.
    auto family_membership(const MultipartiteGraph & g, std::size_t k) -> bool;

    struct ExceptionalSets
    {
        ClassFamily B;
        ClassFamily D;
    };

    /// B_i^(s): vertices of Y_i^(s) with fewer than inner * v(G) neighbours in
    /// the union of X^(t) for some t != s. D_i^(s): the same against the
    /// unions of Y^(t) with outer * v(G).
    auto exceptional_sets(const MultipartiteGraph & g, const ClassFamily & x, const ClassFamily & y, const Rational & inner,
            const Rational & outer) -> ExceptionalSets;

    /// Assigns every vertex of the parts in scope to a class s minimising its
    /// degree into the union of X^(s). A vertex of X_i^(s) stays in s when s
    /// is a minimiser; other ties go to the smallest s. Parts outside scope
    /// get empty sets.
    auto min_degree_partition(const MultipartiteGraph & g, const ClassFamily & x, std::span<const std::size_t> scope) -> ClassFamily;
}
