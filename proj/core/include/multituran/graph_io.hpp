#pragma once

#include <multituran/graph.hpp>

#include <string>
#include <string_view>

namespace multituran
{
    /// Canonical graph document:
    ///
    ///     {
    ///       "parts": [3, 3],
    ///       "edges": [
    ///         [[0, 0], [1, 2]]
    ///       ]
    ///     }
    ///
    /// Vertices are [part, index] pairs, zero-indexed. Fields and edges may
    /// appear in any order and edges in either orientation when loading;
    /// saving writes edges sorted with the smaller endpoint first, so
    /// save(load(save(g))) == save(g) byte for byte. Duplicate edges, unknown
    /// fields and out-of-range vertices raise ParseError with the position of
    /// the offending element.
    auto save_graph(const MultipartiteGraph & g) -> std::string;
    auto load_graph(std::string_view text) -> MultipartiteGraph;

    /// Graphviz rendering with one cluster per part; vertices are named
    /// "part:index". load_dot reads back exactly what save_dot writes.
    auto save_dot(const MultipartiteGraph & g) -> std::string;
    auto load_dot(std::string_view text) -> MultipartiteGraph;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, std::string_view contents) -> void;

    /// 1-based line and column of a byte offset.
    auto line_and_column(std::string_view text, std::size_t offset) -> std::pair<std::size_t, std::size_t>;
}
