#pragma once

#include <multituran/graph.hpp>
#include <multituran/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace multituran
{
    /// A named graph with the properties it is known to have. Patterns are
    /// stored with one vertex per part.
    struct Fixture
    {
        std::string name;
        std::string description;
        MultipartiteGraph graph;
        bool pattern = false;
        std::optional<bool> acc;
        std::optional<std::size_t> chi;
        std::optional<Density> min_density;
        /// Upper bound on the longest cycle.
        std::optional<std::size_t> max_cycle;
        /// Pattern whose absence is recorded, by fixture name.
        std::optional<std::string> free_of;
    };

    /// Every shipped fixture in a fixed order.
    auto corpus() -> const std::vector<Fixture> &;

    /// Throws InvalidArgument for an unknown name.
    auto fixture(const std::string & name) -> const Fixture &;
}
