#include <multituran/errors.hpp>
#include <multituran/graph.hpp>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::vector;

namespace multituran
{
    auto to_string(const VertexId & v) -> std::string
    {
        return "(" + std::to_string(v.part) + "," + std::to_string(v.index) + ")";
    }

    namespace
    {
        auto check_part_sizes(const vector<size_t> & part_sizes) -> void
        {
            if (part_sizes.empty())
                throw InvalidGraph("a multipartite graph needs at least one part");
            for (size_t i = 0 ; i < part_sizes.size() ; ++i)
                if (part_sizes[i] == 0)
                    throw InvalidGraph("part " + std::to_string(i) + " is empty");
        }

        auto offsets_of(const vector<size_t> & part_sizes) -> vector<size_t>
        {
            vector<size_t> offsets(part_sizes.size(), 0);
            std::exclusive_scan(part_sizes.begin(), part_sizes.end(), offsets.begin(), size_t{0});
            return offsets;
        }

        auto part_index_of(const vector<size_t> & part_sizes) -> vector<size_t>
        {
            vector<size_t> result;
            for (size_t i = 0 ; i < part_sizes.size() ; ++i)
                result.insert(result.end(), part_sizes[i], i);
            return result;
        }

        auto global_of(const vector<size_t> & part_sizes, const vector<size_t> & offsets, const VertexId & v) -> size_t
        {
            if (v.part >= part_sizes.size())
                throw InvalidGraph("vertex " + to_string(v) + " names part " + std::to_string(v.part) + " of a "
                        + std::to_string(part_sizes.size()) + "-part graph");
            if (v.index >= part_sizes[v.part])
                throw InvalidGraph("vertex " + to_string(v) + " is beyond part size " + std::to_string(part_sizes[v.part]));
            return offsets[v.part] + v.index;
        }
    }

    MultipartiteGraph::MultipartiteGraph(vector<size_t> part_sizes, std::span<const Edge> edges) :
        _part_sizes(std::move(part_sizes))
    {
        check_part_sizes(_part_sizes);
        init_layout();
        _rows.assign(vertex_count(), Bitset(vertex_count()));
        for (auto & [a, b] : edges) {
            auto ga = global(a), gb = global(b);
            if (a.part == b.part)
                throw InvalidGraph("edge " + to_string(a) + "-" + to_string(b) + " lies inside part " + std::to_string(a.part));
            if (_rows[ga].test(gb))
                throw InvalidGraph("duplicate edge " + to_string(a) + "-" + to_string(b));
            _rows[ga].set(gb);
            _rows[gb].set(ga);
            ++_edge_count;
        }
    }

    MultipartiteGraph::MultipartiteGraph(vector<size_t> part_sizes, vector<Bitset> rows) :
        _part_sizes(std::move(part_sizes)),
        _rows(std::move(rows))
    {
        init_layout();
        size_t degree_sum = 0;
        for (auto & r : _rows)
            degree_sum += r.count();
        _edge_count = degree_sum / 2;
    }

    auto MultipartiteGraph::init_layout() -> void
    {
        _part_offsets = offsets_of(_part_sizes);
        _part_of = part_index_of(_part_sizes);
        _part_masks.assign(_part_sizes.size(), Bitset(_part_of.size()));
        for (size_t v = 0 ; v < _part_of.size() ; ++v)
            _part_masks[_part_of[v]].set(v);
    }

    auto MultipartiteGraph::global(const VertexId & v) const -> size_t
    {
        return global_of(_part_sizes, _part_offsets, v);
    }

    auto MultipartiteGraph::vertex(size_t global_id) const -> VertexId
    {
        auto part = _part_of.at(global_id);
        return VertexId{part, global_id - _part_offsets[part]};
    }

    auto MultipartiteGraph::cross_edge_count(size_t i, size_t j) const -> size_t
    {
        auto & pj = part_mask(j);
        size_t result = 0;
        for (size_t v = _part_offsets.at(i), end = v + _part_sizes[i] ; v < end ; ++v)
            result += _rows[v].intersection_count(pj);
        return result;
    }

    auto MultipartiteGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (size_t a = 0 ; a < vertex_count() ; ++a)
            for (auto b = _rows[a].find_next(a + 1) ; b != Bitset::npos ; b = _rows[a].find_next(b + 1))
                result.emplace_back(vertex(a), vertex(b));
        return result;
    }

    GraphBuilder::GraphBuilder(vector<size_t> part_sizes) :
        _part_sizes(std::move(part_sizes))
    {
        check_part_sizes(_part_sizes);
        _part_offsets = offsets_of(_part_sizes);
        _part_of = part_index_of(_part_sizes);
        _rows.assign(_part_of.size(), Bitset(_part_of.size()));
    }

    auto GraphBuilder::global(const VertexId & v) const -> size_t
    {
        return global_of(_part_sizes, _part_offsets, v);
    }

    auto GraphBuilder::add_edge(const VertexId & a, const VertexId & b) -> void
    {
        add_edge(global(a), global(b));
    }

    auto GraphBuilder::add_edge(size_t a, size_t b) -> void
    {
        if (a >= _rows.size() || b >= _rows.size())
            throw InvalidGraph("edge endpoint out of range");
        if (_part_of[a] == _part_of[b])
            throw InvalidGraph("edge between global vertices " + std::to_string(a) + " and " + std::to_string(b)
                    + " lies inside part " + std::to_string(_part_of[a]));
        if (_rows[a].test(b))
            throw InvalidGraph("duplicate edge between global vertices " + std::to_string(a) + " and " + std::to_string(b));
        _rows[a].set(b);
        _rows[b].set(a);
    }

    auto GraphBuilder::remove_edge(const VertexId & a, const VertexId & b) -> void
    {
        auto ga = global(a), gb = global(b);
        if (! _rows[ga].test(gb))
            throw InvalidGraph("no edge " + to_string(a) + "-" + to_string(b) + " to remove");
        _rows[ga].reset(gb);
        _rows[gb].reset(ga);
    }

    auto GraphBuilder::has_edge(const VertexId & a, const VertexId & b) const -> bool
    {
        return _rows[global(a)].test(global(b));
    }

    auto GraphBuilder::build() const -> MultipartiteGraph
    {
        return MultipartiteGraph(_part_sizes, _rows);
    }

    auto density(const MultipartiteGraph & g, size_t i, size_t j) -> Density
    {
        if (i >= g.part_count() || j >= g.part_count())
            throw InvalidArgument("part index out of range: (" + std::to_string(i) + ", " + std::to_string(j)
                    + ") with " + std::to_string(g.part_count()) + " parts");
        if (i == j)
            throw InvalidArgument("density needs two distinct parts, got " + std::to_string(i) + " twice");
        return Density::ratio(g.cross_edge_count(i, j), g.part_size(i) * g.part_size(j));
    }

    auto min_pairwise_density(const MultipartiteGraph & g) -> Density
    {
        if (g.part_count() < 2)
            throw InvalidArgument("minimum pairwise density needs at least two parts");
        Density best(1);
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t j = i + 1 ; j < g.part_count() ; ++j)
                best = std::min(best, density(g, i, j));
        return best;
    }

    auto set_density(const MultipartiteGraph & g, const Bitset & a, const Bitset & b) -> Rational
    {
        auto na = a.count(), nb = b.count();
        if (na == 0 || nb == 0)
            throw InvalidArgument("density between empty vertex sets");
        if (a.intersects(b))
            throw InvalidArgument("density between overlapping vertex sets");
        size_t edges = 0;
        for (auto v = a.find_first() ; v != Bitset::npos ; v = a.find_next(v + 1))
            edges += g.neighbours(v).intersection_count(b);
        return Rational(BigInt(edges), BigInt(na) * nb);
    }

    auto blow_up(const MultipartiteGraph & g, std::span<const size_t> factors) -> MultipartiteGraph
    {
        if (factors.size() != g.part_count())
            throw InvalidArgument("blow_up needs one factor per part: got " + std::to_string(factors.size())
                    + " for " + std::to_string(g.part_count()) + " parts");
        for (size_t i = 0 ; i < factors.size() ; ++i)
            if (factors[i] == 0)
                throw InvalidArgument("blow_up factor for part " + std::to_string(i) + " must be positive");

        vector<size_t> sizes;
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            sizes.push_back(g.part_size(i) * factors[i]);

        GraphBuilder builder(sizes);
        for (auto & [a, b] : g.edges())
            for (size_t ca = 0 ; ca < factors[a.part] ; ++ca)
                for (size_t cb = 0 ; cb < factors[b.part] ; ++cb)
                    builder.add_edge(
                            VertexId{a.part, a.index * factors[a.part] + ca},
                            VertexId{b.part, b.index * factors[b.part] + cb});
        return builder.build();
    }

    auto is_balanced(const MultipartiteGraph & g) -> bool
    {
        auto & sizes = g.part_sizes();
        return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
    }

    auto with_edge_toggled(const MultipartiteGraph & g, size_t a, size_t b) -> MultipartiteGraph
    {
        if (g.part_of(a) == g.part_of(b))
            throw InvalidGraph("cannot toggle a pair inside part " + std::to_string(g.part_of(a)));
        vector<Bitset> rows(g.rows().begin(), g.rows().end());
        rows[a].flip(b);
        rows[b].flip(a);
        GraphBuilder builder(g.part_sizes());
        for (size_t u = 0 ; u < rows.size() ; ++u)
            for (auto v = rows[u].find_next(u + 1) ; v != Bitset::npos ; v = rows[u].find_next(v + 1))
                builder.add_edge(u, v);
        return builder.build();
    }

    auto without_edges(const MultipartiteGraph & g, std::span<const std::pair<size_t, size_t>> removals) -> MultipartiteGraph
    {
        vector<Bitset> rows(g.rows().begin(), g.rows().end());
        for (auto & [a, b] : removals) {
            rows.at(a).reset(b);
            rows.at(b).reset(a);
        }
        GraphBuilder builder(g.part_sizes());
        for (size_t u = 0 ; u < rows.size() ; ++u)
            for (auto v = rows[u].find_next(u + 1) ; v != Bitset::npos ; v = rows[u].find_next(v + 1))
                builder.add_edge(u, v);
        return builder.build();
    }
}
