#include <multituran/deadline.hpp>
#include <multituran/embedding.hpp>
#include <multituran/errors.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace multituran
{
    auto SubdividedClasses::class_set(size_t s) const -> Bitset
    {
        auto & row = blocks.at(s);
        if (row.empty())
            throw InvalidArgument("class " + to_string(s) + " has no blocks");
        Bitset u = row.front();
        for (auto & b : row)
            u |= b;
        return u;
    }

    auto check_subdivided(const MultipartiteGraph & g, const SubdividedClasses & w) -> void
    {
        if (w.classes() == 0)
            throw InvalidArgument("need at least one class");
        Bitset seen(g.vertex_count());
        for (size_t s = 0 ; s < w.classes() ; ++s) {
            if (w.blocks[s].size() != w.block_count())
                throw InvalidArgument("class " + to_string(s) + " has " + to_string(w.blocks[s].size()) + " blocks, expected "
                        + to_string(w.block_count()));
            for (size_t i = 0 ; i < w.blocks[s].size() ; ++i) {
                auto & b = w.blocks[s][i];
                if (b.size() != g.vertex_count())
                    throw InvalidArgument("block (" + to_string(s) + "," + to_string(i) + ") has the wrong universe");
                if (seen.intersects(b))
                    throw InvalidArgument("vertex " + to_string((seen & b).find_first()) + " lies in two blocks");
                seen |= b;
            }
        }
    }

    namespace
    {
        auto block_index_of(const MultipartiteGraph & g, const SubdividedClasses & w) -> vector<size_t>
        {
            vector<size_t> index(g.vertex_count(), Bitset::npos);
            for (auto & row : w.blocks)
                for (size_t i = 0 ; i < row.size() ; ++i)
                    for (auto v = row[i].find_first() ; v != Bitset::npos ; v = row[i].find_next(v + 1))
                        index[v] = i;
            return index;
        }
    }

    auto is_good_embedding(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f) -> bool
    {
        check_subdivided(g, w);
        if (f.images.size() != w.classes())
            return false;
        auto index = block_index_of(g, w);
        vector<bool> used(w.block_count(), false);
        for (size_t s = 0 ; s < w.classes() ; ++s) {
            auto cls = w.class_set(s);
            for (auto v : f.images[s]) {
                if (v >= g.vertex_count() || ! cls.test(v) || used[index[v]])
                    return false;
                used[index[v]] = true;
            }
        }
        for (size_t s = 0 ; s < w.classes() ; ++s)
            for (size_t t = s + 1 ; t < w.classes() ; ++t)
                for (auto a : f.images[s])
                    for (auto b : f.images[t])
                        if (! g.adjacent(a, b))
                            return false;
        return true;
    }

    auto check_extension_hypotheses(const MultipartiteGraph & g, const SubdividedClasses & w, size_t q) -> void
    {
        check_subdivided(g, w);
        auto r = w.classes();
        if (r < 2)
            throw InvalidArgument("need r >= 2 classes, got " + to_string(r));
        if (q < 1)
            throw InvalidArgument("need q >= 1");
        auto scale = 2 * r * q;
        vector<Bitset> cls;
        for (size_t s = 0 ; s < r ; ++s)
            cls.push_back(w.class_set(s));
        for (size_t s = 0 ; s < r ; ++s) {
            auto size = cls[s].count();
            for (size_t i = 0 ; i < w.block_count() ; ++i)
                if (w.blocks[s][i].count() * scale >= size)
                    throw HypothesisViolation("block W^(" + to_string(s) + ")_" + to_string(i) + " has "
                            + to_string(w.blocks[s][i].count()) + " vertices, not below |W^(" + to_string(s) + ")|/(2rq) = "
                            + to_string(size) + "/" + to_string(scale));
            for (size_t t = 0 ; t < r ; ++t) {
                if (t == s)
                    continue;
                for (auto v = cls[t].find_first() ; v != Bitset::npos ; v = cls[t].find_next(v + 1)) {
                    auto deg = g.neighbours(v).intersection_count(cls[s]);
                    if (deg * scale <= (scale - 1) * size)
                        throw HypothesisViolation("vertex " + to_string(v) + " has degree " + to_string(deg) + " into W^("
                                + to_string(s) + "), not above (1 - 1/" + to_string(scale) + ")*" + to_string(size));
                }
            }
        }
    }

    auto try_extend_good_embedding(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f, size_t q)
        -> std::optional<GoodEmbedding>
    {
        if (! is_good_embedding(g, w, f))
            throw HypothesisViolation("the partial embedding is not good");
        auto r = w.classes();
        for (size_t s = 0 ; s < r ; ++s)
            if (f.images[s].size() > q)
                throw HypothesisViolation("class " + to_string(s) + " already has " + to_string(f.images[s].size())
                        + " images, more than q = " + to_string(q));
        auto index = block_index_of(g, w);
        Bitset blocked(g.vertex_count());
        auto block_vertices = [&](size_t i) {
            for (size_t s = 0 ; s < r ; ++s)
                blocked |= w.blocks[s][i];
        };
        for (auto & row : f.images)
            for (auto v : row)
                block_vertices(index[v]);

        auto result = f;
        while (true) {
            check_deadline();
            size_t s = 0;
            while (s < r && result.images[s].size() >= q)
                ++s;
            if (s == r)
                return result;
            Bitset candidates = w.class_set(s);
            candidates.subtract(blocked);
            for (size_t t = 0 ; t < r ; ++t)
                if (t != s)
                    for (auto v : result.images[t])
                        candidates &= g.neighbours(v);
            auto pick = candidates.find_first();
            if (pick == Bitset::npos)
                return std::nullopt;
            result.images[s].push_back(pick);
            block_vertices(index[pick]);
        }
    }

    auto extend_good_embedding(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f, size_t q)
        -> GoodEmbedding
    {
        check_extension_hypotheses(g, w, q);
        auto result = try_extend_good_embedding(g, w, f, q);
        if (! result)
            throw Error("greedy extension got stuck although the hypotheses hold");
        return *result;
    }

    auto meets_rho(uint64_t count, uint64_t size, size_t q, size_t r, const Rational & d) -> bool
    {
        // count * e^q >= d^(rq) * size, with e in (e_low, e_high)
        static const Rational e_low(BigInt(2718281828459045), BigInt(1000000000000000));
        static const Rational e_high(BigInt(2718281828459046), BigInt(1000000000000000));
        Rational rhs = Rational(size);
        for (size_t i = 0 ; i < r * q ; ++i)
            rhs *= d;
        Rational low = Rational(count), high = Rational(count);
        for (size_t i = 0 ; i < q ; ++i) {
            low *= e_low;
            high *= e_high;
        }
        if (low >= rhs)
            return true;
        if (high < rhs)
            return false;
        return static_cast<long double>(count) * std::exp(static_cast<long double>(q)) >= static_cast<long double>(to_double(rhs));
    }

    namespace
    {
        // binom(x, q) for rational x, zero below q - 1.
        auto general_binomial(const Rational & x, size_t q) -> Rational
        {
            if (x < Rational(q) - 1)
                return 0;
            Rational result = 1;
            for (size_t i = 0 ; i < q ; ++i)
                result *= (x - Rational(i)) / Rational(i + 1);
            return result;
        }

        auto binomial(uint64_t n, size_t q) -> BigInt
        {
            if (n < q)
                return 0;
            BigInt result = 1;
            for (size_t i = 0 ; i < q ; ++i)
                result = result * (n - i) / (i + 1);
            return result;
        }

        // Calls visit(subset) for every k-subset of items in lexicographic order.
        auto for_each_subset(const vector<size_t> & items, size_t k, const std::function<void(const vector<size_t> &)> & visit) -> void
        {
            if (k > items.size())
                return;
            vector<size_t> pick(k);
            for (size_t i = 0 ; i < k ; ++i)
                pick[i] = i;
            vector<size_t> subset(k);
            while (true) {
                check_deadline();
                for (size_t i = 0 ; i < k ; ++i)
                    subset[i] = items[pick[i]];
                visit(subset);
                size_t i = k;
                while (i > 0 && pick[i - 1] == items.size() - k + i - 1)
                    --i;
                if (i == 0)
                    return;
                ++pick[i - 1];
                for (auto j = i ; j < k ; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }

        auto common_neighbourhood(const MultipartiteGraph & g, const vector<size_t> & vertices) -> Bitset
        {
            Bitset c(g.vertex_count());
            c.set_all();
            for (auto v : vertices)
                c &= g.neighbours(v);
            return c;
        }
    }

    auto common_neighbour_select(const MultipartiteGraph & g, const Bitset & u, const vector<Bitset> & w, size_t q, const Rational & d)
        -> SelectResult
    {
        auto r = w.size();
        if (r < 1)
            throw InvalidArgument("need at least one class W");
        if (q < 1 || q > select_q_limit)
            throw InvalidArgument("q must lie in [1, " + to_string(select_q_limit) + "], got " + to_string(q));
        if (d <= 0 || d >= 1)
            throw InvalidArgument("d must lie in (0, 1), got " + to_string(d));
        if (u.size() != g.vertex_count())
            throw InvalidArgument("U has the wrong universe");
        for (auto & ws : w)
            if (ws.size() != g.vertex_count())
                throw InvalidArgument("a class W has the wrong universe");
        auto u_size = u.count();
        if (u_size > select_u_limit)
            throw ResourceLimitExceeded("common_neighbour_select scans |U| <= " + to_string(select_u_limit) + ", got "
                    + to_string(u_size));

        Rational d_r = 1;
        for (size_t i = 0 ; i < r ; ++i)
            d_r *= d;
        if (Rational(u_size) * d_r < Rational(q))
            throw HypothesisViolation("|U| = " + to_string(u_size) + " is below D = q d^(-r) = " + to_string(Rational(q) / d_r));
        auto units = u.to_indices();
        for (auto x : units)
            for (size_t s = 0 ; s < r ; ++s)
                if (Rational(g.neighbours(x).intersection_count(w[s])) < d * Rational(w[s].count()))
                    throw HypothesisViolation("vertex " + to_string(x) + " has degree "
                            + to_string(g.neighbours(x).intersection_count(w[s])) + " into W_(" + to_string(s) + "), below d|W_("
                            + to_string(s) + ")|");

        SelectResult result;
        result.rho = std::exp(-static_cast<double>(q)) * std::pow(to_double(d), static_cast<double>(r * q));
        std::optional<Rational> best_ratio;
        vector<size_t> best_common;
        BigInt subset_side = 0;
        for_each_subset(units, q, [&](const vector<size_t> & a) {
            auto common = common_neighbourhood(g, a);
            vector<size_t> counts(r);
            BigInt product = 1;
            bool ok = true;
            std::optional<Rational> ratio;
            for (size_t s = 0 ; s < r ; ++s) {
                counts[s] = common.intersection_count(w[s]);
                product *= counts[s];
                ok = ok && meets_rho(counts[s], w[s].count(), q, r, d);
                auto here = w[s].count() == 0 ? Rational(1) : Rational(counts[s], w[s].count());
                if (! ratio || here < *ratio)
                    ratio = here;
            }
            subset_side += product;
            if (ok && ! result.A) {
                result.A = a;
                result.common = counts;
            }
            if (! best_ratio || *ratio > *best_ratio) {
                best_ratio = ratio;
                result.best = a;
                best_common = counts;
            }
        });
        if (! result.A)
            result.common = best_common;

        uint64_t tuples = 1;
        for (auto & ws : w) {
            tuples *= std::max<uint64_t>(ws.count(), 1);
            if (tuples > (uint64_t{1} << 22))
                throw ResourceLimitExceeded("too many class tuples for the counting check");
        }
        BigInt tuple_side = 0, degree_side = 0;
        vector<vector<size_t>> members;
        for (auto & ws : w)
            members.push_back(ws.to_indices());
        std::function<void(size_t, const Bitset &)> walk = [&](size_t s, const Bitset & within) {
            if (s == r) {
                auto n = within.count();
                tuple_side += binomial(n, q);
                degree_side += n;
                return;
            }
            check_deadline();
            for (auto x : members[s])
                walk(s + 1, within & g.neighbours(x));
        };
        walk(0, u);

        Rational size_product = 1;
        for (auto & ws : w)
            size_product *= Rational(ws.count());
        result.counts = CommonNeighbourCounts{
            subset_side,
            tuple_side,
            general_binomial(d_r * Rational(u_size), q) * size_product,
            degree_side,
            d_r * Rational(u_size) * size_product,
        };
        return result;
    }

    auto count_kr_lower(const MultipartiteGraph & g, const vector<Bitset> & w, size_t r, size_t h) -> CliqueCount
    {
        if (r < 2 || r > 4)
            throw InvalidArgument("count_kr_lower needs 2 <= r <= 4, got " + to_string(r));
        if (h > 12)
            throw ResourceLimitExceeded("count_kr_lower counts by brute force only up to h = 12, got " + to_string(h));
        if (w.size() != r)
            throw InvalidArgument("expected " + to_string(r) + " classes, got " + to_string(w.size()));
        for (size_t s = 0 ; s < r ; ++s) {
            if (w[s].size() != g.vertex_count())
                throw InvalidArgument("class " + to_string(s) + " has the wrong universe");
            if (w[s].count() != h)
                throw InvalidArgument("class " + to_string(s) + " has " + to_string(w[s].count()) + " vertices, expected h = "
                        + to_string(h));
            for (size_t t = s + 1 ; t < r ; ++t)
                if (w[s].intersects(w[t]))
                    throw InvalidArgument("classes " + to_string(s) + " and " + to_string(t) + " overlap");
        }
        for (size_t s = 0 ; s < r ; ++s)
            for (size_t t = 0 ; t < r ; ++t) {
                if (s == t)
                    continue;
                for (auto v = w[t].find_first() ; v != Bitset::npos ; v = w[t].find_next(v + 1)) {
                    auto deg = g.neighbours(v).intersection_count(w[s]);
                    if (r * r * deg < (r * r - 1) * h)
                        throw HypothesisViolation("vertex " + to_string(v) + " has degree " + to_string(deg) + " into W_("
                                + to_string(s) + "), below (1 - 1/" + to_string(r * r) + ")*" + to_string(h));
                }
            }

        std::function<uint64_t(size_t, const Bitset &)> count = [&](size_t s, const Bitset & allowed) -> uint64_t {
            Bitset here = allowed & w[s];
            if (s + 1 == r)
                return here.count();
            uint64_t total = 0;
            for (auto v = here.find_first() ; v != Bitset::npos ; v = here.find_next(v + 1))
                total += count(s + 1, allowed & g.neighbours(v));
            return total;
        };
        Bitset all(g.vertex_count());
        all.set_all();
        CliqueCount result;
        result.count = count(0, all);
        Rational power = 1;
        for (size_t i = 0 ; i < r ; ++i)
            power *= Rational(h);
        result.bound = power / 2;
        result.holds = Rational(result.count) >= result.bound;
        return result;
    }

    auto BipartiteGraph::edge_count() const -> uint64_t
    {
        uint64_t total = 0;
        for (auto & row : rows)
            total += row.count();
        return total;
    }

    namespace
    {
        auto check_alpha(const Rational & alpha, size_t r) -> void
        {
            if (alpha <= 0 || alpha >= Rational(1, 4))
                throw InvalidArgument("alpha must lie in (0, 1/4), got " + to_string(alpha));
            if (r < 2)
                throw InvalidArgument("r must be at least 2, got " + to_string(r));
        }

        auto power(const Rational & x, size_t n) -> Rational
        {
            Rational p = 1;
            for (size_t i = 0 ; i < n ; ++i)
                p *= x;
            return p;
        }

        auto floor_of(const Rational & x) -> size_t
        {
            BigInt f = numerator(x) / denominator(x);
            return f < 0 ? 0 : static_cast<size_t>(f);
        }

        // Largest b with b^den <= base^num, for 0 <= num/den <= 1.
        auto floor_root_power(size_t base, const BigInt & num, const BigInt & den) -> size_t
        {
            if (base == 0)
                return 0;
            auto guess = std::pow(static_cast<long double>(base), static_cast<long double>(num.convert_to<double>() / den.convert_to<double>()));
            auto b = static_cast<size_t>(std::max<long double>(0, std::floor(guess)));
            auto n = static_cast<unsigned>(num), m = static_cast<unsigned>(den);
            BigInt target = boost::multiprecision::pow(BigInt(base), n);
            auto fits = [&](size_t c) { return boost::multiprecision::pow(BigInt(c), m) <= target; };
            while (b > 0 && ! fits(b))
                --b;
            while (fits(b + 1))
                ++b;
            return b;
        }
    }

    auto bipartite_targets(size_t right, const Rational & alpha, size_t r, std::optional<Rational> log_surrogate)
        -> std::pair<size_t, size_t>
    {
        check_alpha(alpha, r);
        size_t a = 0;
        if (log_surrogate) {
            if (*log_surrogate < 0)
                throw InvalidArgument("the logarithm surrogate must be non-negative");
            a = floor_of(power(alpha, r) * *log_surrogate);
        }
        else if (right > 0) {
            // alpha^r ln q is irrational; long double is ample at these sizes
            auto value = static_cast<long double>(to_double(power(alpha, r))) * std::log(static_cast<long double>(right));
            a = static_cast<size_t>(std::max<long double>(0, std::floor(value)));
        }
        Rational exponent = 1 - power(alpha, r - 1);
        auto b = floor_root_power(right, numerator(exponent), denominator(exponent));
        return {a, b};
    }

    auto dense_bipartite_complete(const BipartiteGraph & graph, const Rational & alpha, size_t r, std::optional<Rational> log_surrogate)
        -> BipartiteWitness
    {
        auto [a, b] = bipartite_targets(graph.right, alpha, r, log_surrogate);
        for (auto & row : graph.rows)
            if (row.size() != graph.right)
                throw InvalidArgument("bipartite row has the wrong width");
        auto p = graph.left(), q = graph.right;
        if (p < 4 * a)
            throw HypothesisViolation("|U| = " + to_string(p) + " is below 4a = " + to_string(4 * a));
        if (2 * graph.edge_count() < static_cast<uint64_t>(p) * q)
            throw HypothesisViolation("e(B) = " + to_string(graph.edge_count()) + " is below pq/2 = " + to_string(Rational(p * q, 2)));

        BipartiteWitness witness;
        witness.a = a;
        witness.b = b;
        if (a == 0 || b == 0) {
            witness.degenerate = true;
            witness.found = false;
            return witness;
        }
        if (a > 3)
            throw ResourceLimitExceeded("dense_bipartite_complete scans subsets of size a <= 3, got " + to_string(a));

        vector<size_t> left(p);
        for (size_t i = 0 ; i < p ; ++i)
            left[i] = i;
        std::optional<size_t> best;
        vector<size_t> best_subset;
        Bitset best_common(q);
        for_each_subset(left, a, [&](const vector<size_t> & subset) {
            Bitset common(q);
            common.set_all();
            for (auto x : subset)
                common &= graph.rows[x];
            auto c = common.count();
            if (! best || c > *best) {
                best = c;
                best_subset = subset;
                best_common = common;
            }
        });
        witness.best_common = best.value_or(0);
        if (witness.best_common < b)
            return witness;
        witness.left = best_subset;
        for (auto y = best_common.find_first() ; y != Bitset::npos && witness.right.size() < b ; y = best_common.find_next(y + 1))
            witness.right.push_back(y);
        for (auto x : witness.left)
            for (auto y : witness.right)
                if (! graph.rows[x].test(y))
                    throw Error("bipartite witness misses edge " + to_string(x) + "-" + to_string(y));
        witness.found = true;
        return witness;
    }

    namespace
    {
        struct Level
        {
            vector<vector<size_t>> classes; // in induction order, large class last
            size_t a = 0, b = 0;
            bool degenerate = false;
            bool found = false;
        };

        // K_j(m..m, b) on the first j classes of order.
        auto build_level(const MultipartiteGraph & g, const vector<Bitset> & w, const vector<size_t> & order, size_t j,
                const Rational & alpha, const std::optional<Rational> & surrogate) -> Level
        {
            Level level;
            auto target = w[order[j - 1]].to_indices();
            vector<vector<size_t>> cliques;
            if (j == 2) {
                for (auto x : w[order[0]].to_indices())
                    cliques.push_back({x});
            }
            else {
                auto below = build_level(g, w, order, j - 1, alpha, surrogate);
                if (below.degenerate || ! below.found) {
                    level.degenerate = below.degenerate;
                    return level;
                }
                size_t m = below.a;
                for (auto & cls : below.classes)
                    m = std::min(m, cls.size());
                for (size_t x = 0 ; x < m ; ++x) {
                    vector<size_t> column;
                    for (auto & cls : below.classes)
                        column.push_back(cls[x]);
                    cliques.push_back(std::move(column));
                }
            }

            BipartiteGraph aux;
            aux.right = target.size();
            for (auto & clique : cliques) {
                Bitset row(target.size());
                for (size_t y = 0 ; y < target.size() ; ++y) {
                    bool all = true;
                    for (auto x : clique)
                        all = all && g.adjacent(x, target[y]);
                    if (all)
                        row.set(y);
                }
                aux.rows.push_back(std::move(row));
            }
            auto witness = dense_bipartite_complete(aux, alpha, j, surrogate);
            level.a = witness.a;
            level.b = witness.b;
            level.degenerate = witness.degenerate;
            level.found = witness.found && ! witness.degenerate;
            if (! level.found)
                return level;
            level.classes.assign(j, {});
            for (auto x : witness.left)
                for (size_t t = 0 ; t + 1 < j ; ++t)
                    level.classes[t].push_back(cliques[x][t]);
            for (auto y : witness.right)
                level.classes[j - 1].push_back(target[y]);
            return level;
        }
    }

    auto embed_log_complete(const MultipartiteGraph & g, const vector<Bitset> & w, const Rational & alpha, size_t r, size_t s,
            std::optional<Rational> log_surrogate) -> LogCompleteEmbedding
    {
        check_alpha(alpha, r);
        if (w.size() != r)
            throw InvalidArgument("expected " + to_string(r) + " classes, got " + to_string(w.size()));
        if (s >= r)
            throw InvalidArgument("class index " + to_string(s) + " out of range");
        auto h = w[0].count();
        for (size_t t = 0 ; t < r ; ++t) {
            if (w[t].size() != g.vertex_count())
                throw InvalidArgument("class " + to_string(t) + " has the wrong universe");
            if (w[t].count() != h)
                throw InvalidArgument("classes must all have size h = " + to_string(h));
            for (size_t u = t + 1 ; u < r ; ++u)
                if (w[t].intersects(w[u]))
                    throw InvalidArgument("classes " + to_string(t) + " and " + to_string(u) + " overlap");
        }
        for (size_t t = 0 ; t < r ; ++t)
            for (size_t u = 0 ; u < r ; ++u) {
                if (t == u)
                    continue;
                for (auto v = w[u].find_first() ; v != Bitset::npos ; v = w[u].find_next(v + 1)) {
                    auto deg = g.neighbours(v).intersection_count(w[t]);
                    if (r * r * deg < (r * r - 1) * h)
                        throw HypothesisViolation("vertex " + to_string(v) + " has degree " + to_string(deg) + " into W_("
                                + to_string(t) + "), below (1 - 1/" + to_string(r * r) + ")*" + to_string(h));
                }
            }

        vector<size_t> order;
        for (size_t t = 0 ; t < r ; ++t)
            if (t != s)
                order.push_back(t);
        order.push_back(s);

        auto top = bipartite_targets(h, alpha, r, log_surrogate);
        LogCompleteEmbedding result;
        result.a = top.first;
        result.b = top.second;
        if (result.a == 0 || result.b == 0) {
            result.degenerate = true;
            return result;
        }
        auto level = build_level(g, w, order, r, alpha, log_surrogate);
        result.degenerate = level.degenerate;
        if (! level.found)
            return result;
        result.classes.assign(r, {});
        for (size_t t = 0 ; t < r ; ++t)
            result.classes[order[t]] = level.classes[t];
        for (size_t t = 0 ; t < r ; ++t)
            for (auto x : result.classes[t]) {
                if (! w[t].test(x))
                    throw Error("embedded vertex " + to_string(x) + " left its class");
                for (size_t u = t + 1 ; u < r ; ++u)
                    for (auto y : result.classes[u])
                        if (! g.adjacent(x, y))
                            throw Error("embedding misses edge " + to_string(x) + "-" + to_string(y));
            }
        result.found = true;
        return result;
    }
}
