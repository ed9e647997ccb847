#include <multituran/errors.hpp>
#include <multituran/small_graph.hpp>

#include <algorithm>

using std::size_t;

namespace multituran
{
    SmallGraph::SmallGraph(size_t order) :
        _rows(order, 0)
    {
        if (order > max_order)
            throw ResourceLimitExceeded("small graphs hold at most 64 vertices, got " + std::to_string(order));
    }

    SmallGraph::SmallGraph(size_t order, std::initializer_list<std::pair<size_t, size_t>> edges) :
        SmallGraph(order)
    {
        for (auto & [a, b] : edges)
            add_edge(a, b);
    }

    auto SmallGraph::edge_count() const -> size_t
    {
        size_t total = 0;
        for (auto r : _rows)
            total += std::popcount(r);
        return total / 2;
    }

    auto SmallGraph::add_edge(size_t a, size_t b) -> void
    {
        if (a >= order() || b >= order())
            throw InvalidGraph("edge endpoint out of range");
        if (a == b)
            throw InvalidGraph("self loop at vertex " + std::to_string(a));
        _rows[a] |= Mask{1} << b;
        _rows[b] |= Mask{1} << a;
    }

    auto SmallGraph::remove_edge(size_t a, size_t b) -> void
    {
        _rows.at(a) &= ~(Mask{1} << b);
        _rows.at(b) &= ~(Mask{1} << a);
    }

    auto SmallGraph::max_degree() const -> size_t
    {
        size_t best = 0;
        for (size_t v = 0 ; v < order() ; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    auto SmallGraph::edges() const -> std::vector<std::pair<size_t, size_t>>
    {
        std::vector<std::pair<size_t, size_t>> result;
        for (size_t a = 0 ; a < order() ; ++a)
            for (size_t b = a + 1 ; b < order() ; ++b)
                if (adjacent(a, b))
                    result.emplace_back(a, b);
        return result;
    }

    auto SmallGraph::induced(Mask vertices) const -> SmallGraph
    {
        std::vector<size_t> keep;
        for (size_t v = 0 ; v < order() ; ++v)
            if ((vertices >> v) & 1)
                keep.push_back(v);
        SmallGraph result(keep.size());
        for (size_t i = 0 ; i < keep.size() ; ++i)
            for (size_t j = i + 1 ; j < keep.size() ; ++j)
                if (adjacent(keep[i], keep[j]))
                    result.add_edge(i, j);
        return result;
    }

    auto complete_graph(size_t n) -> SmallGraph
    {
        SmallGraph g(n);
        for (size_t a = 0 ; a < n ; ++a)
            for (size_t b = a + 1 ; b < n ; ++b)
                g.add_edge(a, b);
        return g;
    }

    auto cycle_graph(size_t n) -> SmallGraph
    {
        if (n < 3)
            throw InvalidArgument("a cycle needs at least 3 vertices");
        SmallGraph g(n);
        for (size_t v = 0 ; v < n ; ++v)
            g.add_edge(v, (v + 1) % n);
        return g;
    }

    auto complete_bipartite_graph(size_t a, size_t b) -> SmallGraph
    {
        size_t sizes[] = {a, b};
        return complete_multipartite_graph(sizes);
    }

    auto complete_multipartite_graph(std::span<const size_t> sizes) -> SmallGraph
    {
        size_t n = 0;
        std::vector<size_t> cls;
        for (size_t c = 0 ; c < sizes.size() ; ++c) {
            n += sizes[c];
            cls.insert(cls.end(), sizes[c], c);
        }
        SmallGraph g(n);
        for (size_t a = 0 ; a < n ; ++a)
            for (size_t b = a + 1 ; b < n ; ++b)
                if (cls[a] != cls[b])
                    g.add_edge(a, b);
        return g;
    }

    auto to_small_graph(const MultipartiteGraph & g) -> SmallGraph
    {
        SmallGraph h(g.vertex_count());
        for (size_t a = 0 ; a < g.vertex_count() ; ++a)
            for (auto b = g.neighbours(a).find_next(a + 1) ; b != Bitset::npos ; b = g.neighbours(a).find_next(b + 1))
                h.add_edge(a, b);
        return h;
    }

    auto to_multipartite(const SmallGraph & h) -> MultipartiteGraph
    {
        if (h.order() == 0)
            throw InvalidGraph("cannot store the empty graph as a multipartite graph");
        std::vector<Edge> edges;
        for (auto & [a, b] : h.edges())
            edges.emplace_back(VertexId{a, 0}, VertexId{b, 0});
        return MultipartiteGraph(std::vector<size_t>(h.order(), 1), edges);
    }
}
