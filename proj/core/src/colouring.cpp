#include <multituran/colouring.hpp>
#include <multituran/deadline.hpp>
#include <multituran/errors.hpp>

#include <algorithm>
#include <bit>

using std::size_t;
using std::vector;
using Mask = multituran::SmallGraph::Mask;

namespace multituran
{
    auto ColourMap::colours() const -> size_t
    {
        return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end());
    }

    auto ColourMap::class_mask(size_t c) const -> Mask
    {
        Mask m = 0;
        for (size_t v = 0 ; v < colour.size() ; ++v)
            if (colour[v] == c)
                m |= Mask{1} << v;
        return m;
    }

    namespace
    {
        auto require_order(const SmallGraph & h, size_t limit, const char * what) -> void
        {
            if (h.order() > limit)
                throw ResourceLimitExceeded(std::string(what) + " is exact only up to " + std::to_string(limit)
                        + " vertices, got " + std::to_string(h.order()));
        }

        auto all_vertices(size_t n) -> Mask
        {
            return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        }

        auto clique_search(const SmallGraph & h, Mask candidates, size_t size, size_t & best) -> void
        {
            check_deadline();
            if (candidates == 0) {
                best = std::max(best, size);
                return;
            }
            while (candidates) {
                if (size + std::popcount(candidates) <= best)
                    return;
                auto v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                clique_search(h, candidates & h.neighbours(v), size + 1, best);
            }
        }

        auto greedy_colour_count(const SmallGraph & h) -> size_t
        {
            vector<size_t> order(h.order());
            for (size_t v = 0 ; v < h.order() ; ++v)
                order[v] = v;
            std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return h.degree(a) > h.degree(b); });
            vector<size_t> colour(h.order(), 0);
            size_t used = 0;
            for (auto v : order) {
                Mask forbidden = 0;
                for (size_t u = 0 ; u < h.order() ; ++u)
                    if (colour[u] && h.adjacent(u, v))
                        forbidden |= Mask{1} << colour[u];
                size_t c = 1;
                while ((forbidden >> c) & 1)
                    ++c;
                colour[v] = c;
                used = std::max(used, c);
            }
            return used;
        }

        struct DSatur
        {
            const SmallGraph & h;
            size_t k;
            vector<size_t> colour;

            auto saturation(size_t v) const -> size_t
            {
                Mask seen = 0;
                for (auto n = h.neighbours(v) ; n ; n &= n - 1) {
                    auto u = std::countr_zero(n);
                    if (colour[u])
                        seen |= Mask{1} << colour[u];
                }
                return std::popcount(seen);
            }

            auto search(size_t coloured, size_t used) -> bool
            {
                check_deadline();
                if (coloured == h.order())
                    return true;
                size_t pick = h.order(), pick_sat = 0, pick_deg = 0;
                for (size_t v = 0 ; v < h.order() ; ++v) {
                    if (colour[v])
                        continue;
                    auto s = saturation(v);
                    auto d = h.degree(v);
                    if (pick == h.order() || s > pick_sat || (s == pick_sat && d > pick_deg)) {
                        pick = v;
                        pick_sat = s;
                        pick_deg = d;
                    }
                }
                Mask forbidden = 0;
                for (auto n = h.neighbours(pick) ; n ; n &= n - 1) {
                    auto u = std::countr_zero(n);
                    if (colour[u])
                        forbidden |= Mask{1} << colour[u];
                }
                for (size_t c = 1 ; c <= std::min(k, used + 1) ; ++c) {
                    if ((forbidden >> c) & 1)
                        continue;
                    colour[pick] = c;
                    if (search(coloured + 1, std::max(used, c)))
                        return true;
                    colour[pick] = 0;
                }
                return false;
            }
        };
    }

    auto max_clique_size(const SmallGraph & h) -> size_t
    {
        size_t best = 0;
        clique_search(h, all_vertices(h.order()), 0, best);
        return best;
    }

    auto find_colouring(const SmallGraph & h, size_t k) -> std::optional<ColourMap>
    {
        if (h.order() == 0)
            return ColourMap{};
        if (k == 0)
            return std::nullopt;
        DSatur d{h, k, vector<size_t>(h.order(), 0)};
        if (! d.search(0, 0))
            return std::nullopt;
        return ColourMap{std::move(d.colour)};
    }

    auto chromatic_number(const SmallGraph & h) -> size_t
    {
        require_order(h, chromatic_limit, "chromatic_number");
        if (h.order() == 0)
            return 0;
        auto lower = max_clique_size(h);
        auto upper = greedy_colour_count(h);
        for (auto c = lower ; c < upper ; ++c)
            if (find_colouring(h, c))
                return c;
        return upper;
    }

    auto chromatic_number(const MultipartiteGraph & g) -> size_t
    {
        if (g.vertex_count() > chromatic_limit)
            throw ResourceLimitExceeded("chromatic_number is exact only up to " + std::to_string(chromatic_limit)
                    + " vertices, got " + std::to_string(g.vertex_count()));
        return chromatic_number(to_small_graph(g));
    }

    auto is_colour_critical(const SmallGraph & h) -> bool
    {
        require_order(h, critical_limit, "is_colour_critical");
        auto chi = chromatic_number(h);
        for (auto & [a, b] : h.edges()) {
            auto reduced = h;
            reduced.remove_edge(a, b);
            if (find_colouring(reduced, chi - 1))
                return true;
        }
        return false;
    }

    auto acc_class_count(size_t chi) -> size_t
    {
        return chi <= 2 ? 1 : chi - 1;
    }

    auto is_acc_map(const SmallGraph & h, const ColourMap & phi) -> bool
    {
        if (phi.colour.size() != h.order())
            return false;
        auto c = acc_class_count(chromatic_number(h));
        for (auto col : phi.colour)
            if (col < 1 || col > c)
                return false;
        for (size_t v = 0 ; v < h.order() ; ++v) {
            auto same = h.neighbours(v) & phi.class_mask(phi.colour[v]);
            if (phi.colour[v] == 1 ? std::popcount(same) > 1 : same != 0)
                return false;
        }
        return true;
    }

    namespace
    {
        struct AccSearch
        {
            const SmallGraph & h;
            size_t classes;
            vector<size_t> colour;
            vector<size_t> first_degree; // neighbours already in class 1

            auto admissible(size_t v, size_t c) const -> bool
            {
                if (c == 1) {
                    size_t count = 0;
                    for (auto n = h.neighbours(v) ; n ; n &= n - 1) {
                        auto u = std::countr_zero(n);
                        if (colour[u] == 1) {
                            if (++count > 1 || first_degree[u] >= 1)
                                return false;
                        }
                    }
                    return true;
                }
                for (auto n = h.neighbours(v) ; n ; n &= n - 1)
                    if (colour[std::countr_zero(n)] == c)
                        return false;
                return true;
            }

            auto place(size_t v, size_t c, int sign) -> void
            {
                if (c != 1)
                    return;
                for (auto n = h.neighbours(v) ; n ; n &= n - 1) {
                    auto u = std::countr_zero(n);
                    if (colour[u] == 1 && static_cast<size_t>(u) != v) {
                        first_degree[u] += sign;
                        first_degree[v] += sign;
                    }
                }
            }

            auto future_ok(size_t from) const -> bool
            {
                for (auto v = from ; v < h.order() ; ++v) {
                    bool any = false;
                    for (size_t c = 1 ; c <= classes && ! any ; ++c)
                        any = admissible(v, c);
                    if (! any)
                        return false;
                }
                return true;
            }

            // highest colour >= 2 opened so far, or 1 if none
            auto search(size_t v, size_t opened) -> bool
            {
                check_deadline();
                if (v == h.order())
                    return true;
                auto limit = std::min(classes, opened + 1);
                for (size_t c = 1 ; c <= limit ; ++c) {
                    if (! admissible(v, c))
                        continue;
                    colour[v] = c;
                    place(v, c, +1);
                    if (future_ok(v + 1) && search(v + 1, std::max(opened, c)))
                        return true;
                    place(v, c, -1);
                    colour[v] = 0;
                }
                return false;
            }
        };
    }

    auto almost_colour_critical_witness(const SmallGraph & h) -> std::optional<ColourMap>
    {
        require_order(h, critical_limit, "almost_colour_critical_witness");
        auto classes = acc_class_count(chromatic_number(h));
        AccSearch s{h, classes, vector<size_t>(h.order(), 0), vector<size_t>(h.order(), 0)};
        if (! s.search(0, 1))
            return std::nullopt;
        return ColourMap{std::move(s.colour)};
    }

    auto acc_brute_oracle(const SmallGraph & h) -> bool
    {
        require_order(h, acc_oracle_limit, "acc_brute_oracle");
        auto c = acc_class_count(chromatic_number(h));
        auto n = h.order();
        vector<size_t> phi(n, 1);
        while (true) {
            check_deadline();
            bool ok = true;
            for (size_t v = 0 ; v < n && ok ; ++v) {
                size_t same = 0;
                for (size_t u = 0 ; u < n ; ++u)
                    if (h.adjacent(u, v) && phi[u] == phi[v])
                        ++same;
                ok = phi[v] == 1 ? same <= 1 : same == 0;
            }
            if (ok)
                return true;
            // odometer increment
            size_t pos = 0;
            while (pos < n && phi[pos] == c)
                phi[pos++] = 1;
            if (pos == n)
                return false;
            ++phi[pos];
        }
    }
}
