#include <multituran/deadline.hpp>
#include <multituran/errors.hpp>
#include <multituran/subgraph.hpp>

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <thread>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace multituran
{
    namespace
    {
        auto require_pattern(const SmallGraph & h, size_t limit, const char * what) -> void
        {
            if (h.order() > limit)
                throw ResourceLimitExceeded(std::string(what) + " handles patterns of at most " + std::to_string(limit)
                        + " vertices, got " + std::to_string(h.order()));
        }

        // Pattern vertices ordered greedily: most neighbours already placed,
        // then highest degree, then smallest index.
        auto placement_order(const SmallGraph & h) -> vector<size_t>
        {
            vector<size_t> order;
            SmallGraph::Mask placed = 0;
            while (order.size() < h.order()) {
                size_t best = h.order();
                int best_back = -1;
                size_t best_deg = 0;
                for (size_t v = 0 ; v < h.order() ; ++v) {
                    if ((placed >> v) & 1)
                        continue;
                    int back = std::popcount(h.neighbours(v) & placed);
                    if (back > best_back || (back == best_back && h.degree(v) > best_deg)) {
                        best = v;
                        best_back = back;
                        best_deg = h.degree(v);
                    }
                }
                order.push_back(best);
                placed |= SmallGraph::Mask{1} << best;
            }
            return order;
        }

        class Matcher
        {
            public:
                Matcher(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode) :
                    _g(g),
                    _h(h),
                    _mode(mode),
                    _order(placement_order(h)),
                    _image(h.order(), npos)
                {
                    auto n = g.vertex_count();
                    for (size_t p = 0 ; p < h.order() ; ++p) {
                        Bitset ok(n);
                        for (size_t v = 0 ; v < n ; ++v)
                            if (g.degree(v) >= h.degree(p))
                                ok.set(v);
                        _degree_ok.push_back(std::move(ok));
                    }
                    _blocked.assign(h.order() + 1, Bitset(n));
                }

                auto pattern_fits() const -> bool
                {
                    if (_h.order() > _g.vertex_count())
                        return false;
                    return _mode != CopyMode::transversal || _h.order() <= _g.part_count();
                }

                // Candidates for the pattern vertex at the given depth.
                auto candidates(size_t depth) const -> Bitset
                {
                    auto p = _order[depth];
                    Bitset c = _degree_ok[p];
                    for (size_t d = 0 ; d < depth ; ++d)
                        if (_h.adjacent(p, _order[d]))
                            c &= _g.neighbours(_image[_order[d]]);
                    c.subtract(_blocked[depth]);
                    return c;
                }

                auto assign(size_t depth, size_t v) -> void
                {
                    _image[_order[depth]] = v;
                    _blocked[depth + 1] = _blocked[depth];
                    if (_mode == CopyMode::transversal)
                        _blocked[depth + 1] |= _g.part_mask(_g.part_of(v));
                    else
                        _blocked[depth + 1].set(v);
                }

                auto find(size_t depth) -> bool
                {
                    check_deadline();
                    if (depth == _h.order())
                        return true;
                    auto c = candidates(depth);
                    for (auto v = c.find_first() ; v != Bitset::npos ; v = c.find_next(v + 1)) {
                        assign(depth, v);
                        if (find(depth + 1))
                            return true;
                    }
                    _image[_order[depth]] = npos;
                    return false;
                }

                auto count(size_t depth) -> uint64_t
                {
                    check_deadline();
                    if (depth == _h.order())
                        return 1;
                    auto c = candidates(depth);
                    if (depth + 1 == _h.order())
                        return c.count();
                    uint64_t total = 0;
                    for (auto v = c.find_first() ; v != Bitset::npos ; v = c.find_next(v + 1)) {
                        assign(depth, v);
                        total += count(depth + 1);
                    }
                    return total;
                }

                auto image() const -> const vector<size_t> & { return _image; }

            private:
                static constexpr size_t npos = Bitset::npos;

                const MultipartiteGraph & _g;
                const SmallGraph & _h;
                CopyMode _mode;
                vector<size_t> _order;
                vector<size_t> _image;
                vector<Bitset> _degree_ok;
                vector<Bitset> _blocked; // per depth: vertices no longer available
        };
    }

    auto is_embedding(const MultipartiteGraph & g, const SmallGraph & h, const EmbeddingMap & f, CopyMode mode) -> bool
    {
        if (f.image.size() != h.order())
            return false;
        for (auto v : f.image)
            if (v >= g.vertex_count())
                return false;
        for (size_t a = 0 ; a < h.order() ; ++a)
            for (size_t b = a + 1 ; b < h.order() ; ++b) {
                if (f.image[a] == f.image[b])
                    return false;
                if (mode == CopyMode::transversal && g.part_of(f.image[a]) == g.part_of(f.image[b]))
                    return false;
                if (h.adjacent(a, b) && ! g.adjacent(f.image[a], f.image[b]))
                    return false;
            }
        return true;
    }

    auto find_copy(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode) -> std::optional<EmbeddingMap>
    {
        require_pattern(h, find_pattern_limit, "find_copy");
        if (mode == CopyMode::transversal && h.order() > g.part_count())
            throw InvalidArgument("a transversal copy of a " + std::to_string(h.order()) + "-vertex pattern needs at least that many parts, got "
                    + std::to_string(g.part_count()));
        Matcher m(g, h, mode);
        if (! m.pattern_fits())
            return std::nullopt;
        if (h.order() == 0)
            return EmbeddingMap{};
        if (! m.find(0))
            return std::nullopt;
        return EmbeddingMap{m.image()};
    }

    auto count_embeddings(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode, unsigned threads) -> uint64_t
    {
        require_pattern(h, count_pattern_limit, "count_embeddings");
        Matcher root(g, h, mode);
        if (! root.pattern_fits())
            return 0;
        if (h.order() == 0)
            return 1;
        auto first = root.candidates(0).to_indices();
        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(first.size())));

        vector<uint64_t> partial(threads, 0);
        vector<std::exception_ptr> failure(threads);
        auto work = [&](unsigned t) {
            try {
                Matcher m(g, h, mode);
                for (size_t i = t ; i < first.size() ; i += threads) {
                    m.assign(0, first[i]);
                    partial[t] += m.count(1);
                }
            }
            catch (...) {
                failure[t] = std::current_exception();
            }
        };
        if (threads == 1)
            work(0);
        else {
            // the deadline is process-wide, so workers observe it too
            vector<std::thread> pool;
            for (unsigned t = 0 ; t < threads ; ++t)
                pool.emplace_back(work, t);
            for (auto & th : pool)
                th.join();
        }
        for (auto & f : failure)
            if (f)
                std::rethrow_exception(f);
        return std::accumulate(partial.begin(), partial.end(), uint64_t{0});
    }

    auto automorphism_count(const SmallGraph & h) -> uint64_t
    {
        if (h.order() > 8)
            throw ResourceLimitExceeded("automorphism_count handles at most 8 vertices");
        vector<size_t> p(h.order());
        std::iota(p.begin(), p.end(), 0);
        auto edges = h.edges();
        uint64_t count = 0;
        do {
            bool ok = true;
            for (auto & [a, b] : edges)
                if (! h.adjacent(p[a], p[b])) {
                    ok = false;
                    break;
                }
            count += ok;
        } while (std::next_permutation(p.begin(), p.end()));
        return count;
    }

    auto count_copies(const MultipartiteGraph & g, const SmallGraph & h, CopyMode mode, unsigned threads) -> uint64_t
    {
        return count_embeddings(g, h, mode, threads) / automorphism_count(h);
    }

    namespace
    {
        auto cliques_from(const MultipartiteGraph & g, const Bitset & candidates, size_t r) -> uint64_t
        {
            if (r == 0)
                return 1;
            if (r == 1)
                return candidates.count();
            uint64_t total = 0;
            for (auto v = candidates.find_first() ; v != Bitset::npos ; v = candidates.find_next(v + 1)) {
                check_deadline();
                // only later vertices, so each clique is counted once
                Bitset next = candidates & g.neighbours(v);
                for (auto u = next.find_first() ; u != Bitset::npos && u <= v ; u = next.find_next(u + 1))
                    next.reset(u);
                total += cliques_from(g, next, r - 1);
            }
            return total;
        }
    }

    auto count_cliques_in(const MultipartiteGraph & g, const Bitset & within, size_t r) -> uint64_t
    {
        if (within.size() != g.vertex_count())
            throw InvalidArgument("vertex set has the wrong size");
        return cliques_from(g, within, r);
    }

    auto max_book(const MultipartiteGraph & g, size_t r) -> Book
    {
        if (r < 3 || r > 5)
            throw InvalidArgument("max_book needs 3 <= r <= 5, got " + std::to_string(r));
        Book best;
        for (size_t u = 0 ; u < g.vertex_count() ; ++u) {
            auto & nu = g.neighbours(u);
            for (auto v = nu.find_next(u + 1) ; v != Bitset::npos ; v = nu.find_next(v + 1)) {
                auto count = cliques_from(g, nu & g.neighbours(v), r - 2);
                if (! best.edge || count > best.count) {
                    best.edge = std::pair{u, v};
                    best.count = count;
                }
            }
        }
        return best;
    }

    namespace
    {
        class CycleSearch
        {
            public:
                CycleSearch(const MultipartiteGraph & g, size_t max_length) :
                    _g(g),
                    _found(max_length + 1, false),
                    _max_length(max_length)
                {
                }

                auto run() -> vector<size_t>
                {
                    auto n = _g.vertex_count();
                    for (size_t root = 0 ; root < n ; ++root) {
                        Bitset allowed(n);
                        for (auto v = root + 1 ; v < n ; ++v)
                            allowed.set(v);
                        auto comp = component(root, allowed);
                        comp.reset(root);
                        _root = root;
                        _allowed = comp;
                        if (! plan(root, comp))
                            continue;
                        _path.assign(1, root);
                        _visited = Bitset(n);
                        _visited.set(root);
                        extend();
                    }
                    vector<size_t> result;
                    for (size_t h = 3 ; h <= _max_length ; ++h)
                        if (_found[h])
                            result.push_back(h);
                    return result;
                }

            private:
                const MultipartiteGraph & _g;
                vector<bool> _found;
                size_t _max_length;
                vector<bool> _wanted; // lengths still worth looking for from this root
                size_t _root = 0;
                Bitset _allowed;
                Bitset _visited;
                vector<size_t> _path;

                auto component(size_t root, const Bitset & allowed) const -> Bitset
                {
                    Bitset seen(_g.vertex_count());
                    seen.set(root);
                    vector<size_t> stack{root};
                    while (! stack.empty()) {
                        auto v = stack.back();
                        stack.pop_back();
                        Bitset next = _g.neighbours(v) & allowed;
                        next.subtract(seen);
                        for (auto u = next.find_first() ; u != Bitset::npos ; u = next.find_next(u + 1)) {
                            seen.set(u);
                            stack.push_back(u);
                        }
                    }
                    return seen;
                }

                auto bipartite(size_t root, const Bitset & comp) const -> bool
                {
                    vector<int> side(_g.vertex_count(), -1);
                    side[root] = 0;
                    vector<size_t> stack{root};
                    while (! stack.empty()) {
                        auto v = stack.back();
                        stack.pop_back();
                        Bitset next = _g.neighbours(v) & comp;
                        for (auto u = next.find_first() ; u != Bitset::npos ; u = next.find_next(u + 1)) {
                            if (side[u] == -1) {
                                side[u] = 1 - side[v];
                                stack.push_back(u);
                            }
                            else if (side[u] == side[v])
                                return false;
                        }
                    }
                    return true;
                }

                // Marks the lengths that a cycle through root inside comp could
                // still contribute; false when there is nothing left to find.
                auto plan(size_t root, const Bitset & comp) -> bool
                {
                    Bitset with_root = comp;
                    with_root.set(root);
                    vector<size_t> per_part(_g.part_count(), 0);
                    for (auto v = with_root.find_first() ; v != Bitset::npos ; v = with_root.find_next(v + 1))
                        ++per_part[_g.part_of(v)];
                    auto odd_ok = ! bipartite(root, with_root);
                    _wanted.assign(_max_length + 1, false);
                    bool any = false;
                    for (size_t h = 3 ; h <= std::min(_max_length, with_root.count()) ; ++h) {
                        if (_found[h] || (h % 2 == 1 && ! odd_ok))
                            continue;
                        size_t room = 0;
                        for (auto c : per_part)
                            room += std::min(c, h / 2);
                        if (room >= h)
                            any = _wanted[h] = true;
                    }
                    return any;
                }

                auto smallest_wanted_above(size_t len) const -> size_t
                {
                    for (auto h = len + 1 ; h <= _max_length ; ++h)
                        if (_wanted[h] && ! _found[h])
                            return h;
                    return 0;
                }

                auto reachable_count(size_t from) const -> size_t
                {
                    Bitset free = _allowed;
                    free.subtract(_visited);
                    Bitset seen(_g.vertex_count());
                    vector<size_t> stack{from};
                    size_t count = 0;
                    while (! stack.empty()) {
                        auto v = stack.back();
                        stack.pop_back();
                        Bitset next = _g.neighbours(v) & free;
                        next.subtract(seen);
                        for (auto u = next.find_first() ; u != Bitset::npos ; u = next.find_next(u + 1)) {
                            seen.set(u);
                            ++count;
                            stack.push_back(u);
                        }
                    }
                    return count;
                }

                // Returns true once nothing is left to find from this root.
                auto extend() -> bool
                {
                    check_deadline();
                    auto len = _path.size();
                    auto last = _path.back();
                    if (len >= 3 && last > _path[1] && _g.adjacent(last, _root) && _wanted[len] && ! _found[len]) {
                        _found[len] = true;
                        if (smallest_wanted_above(2) == 0)
                            return true;
                    }
                    auto target = smallest_wanted_above(len);
                    if (target == 0)
                        return false;
                    if (len > 1 && len + reachable_count(last) < target)
                        return false;
                    Bitset next = _g.neighbours(last) & _allowed;
                    next.subtract(_visited);
                    for (auto u = next.find_first() ; u != Bitset::npos ; u = next.find_next(u + 1)) {
                        _path.push_back(u);
                        _visited.set(u);
                        auto done = extend();
                        _visited.reset(u);
                        _path.pop_back();
                        if (done)
                            return true;
                    }
                    return false;
                }
        };
    }

    auto cycle_spectrum(const MultipartiteGraph & g, size_t max_length) -> vector<size_t>
    {
        if (g.vertex_count() > cycle_host_limit)
            throw ResourceLimitExceeded("cycle_spectrum handles hosts of at most " + std::to_string(cycle_host_limit)
                    + " vertices, got " + std::to_string(g.vertex_count()));
        return CycleSearch(g, max_length).run();
    }
}
