#pragma once

#include <multituran/errors.hpp>
#include <multituran/graph.hpp>
#include <multituran/rational.hpp>
#include <multituran/small_graph.hpp>
#include <multituran/subgraph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace multituran
{
    /// d_2 = 0 and, for k >= 3, d_k the root in (0,1) of
    /// x^2 (1 - d_{k-1}) + x - 1, by bisection until the bracket is narrower
    /// than tol or the iteration cap is hit. Element k-2 holds d_k.
    auto critical_density_recurrence(std::size_t k_max, double tol, std::size_t iterations = 200) -> std::vector<double>;

    /// An l-partite host G claimed to be H-free (in the given mode) with
    /// minimum pairwise density delta. Certifies d_l(H) >= delta.
    struct ThresholdWitness
    {
        SmallGraph pattern;
        std::size_t parts = 0;
        MultipartiteGraph host;
        Density delta;
        CopyMode mode = CopyMode::any;
    };

    /// Thrown when a witness fails; carries the copy of H when one was found.
    class WitnessRejected : public HypothesisViolation
    {
        public:
            WitnessRejected(const std::string & message, std::optional<EmbeddingMap> copy = std::nullopt) :
                HypothesisViolation(message),
                _copy(std::move(copy))
            {
            }

            auto copy() const -> const std::optional<EmbeddingMap> & { return _copy; }

        private:
            std::optional<EmbeddingMap> _copy;
    };

    /// Re-checks the part count, the exact minimum density and H-freeness by
    /// exhaustive search, then returns delta. v(H) <= 6.
    auto certify_witness(const ThresholdWitness & w) -> Density;

    struct SearchOutcome
    {
        ThresholdWitness witness;
        /// False when no H-free state was seen; the witness is then edgeless.
        bool found = false;
        std::uint64_t iterations = 0;
    };

    struct SearchOptions
    {
        std::size_t parts = 3;
        std::size_t part_size = 3;
        std::uint64_t budget = 10000;
        std::uint64_t seed = 0;
        CopyMode mode = CopyMode::any;
        /// Start state; the edgeless graph when absent.
        std::optional<MultipartiteGraph> start;
    };

    /// Hill climbing over balanced l-partite graphs. Each move toggles one
    /// uniformly chosen cross pair; the objective is (H-free, minimum pairwise
    /// density), compared lexicographically. Better moves are kept, equal ones
    /// with probability 1/2, worse ones undone. Returns the best H-free state
    /// seen. part_size <= 8, v(H) <= 5.
    auto search_witness(const SmallGraph & h, const SearchOptions & options) -> SearchOutcome;
}
