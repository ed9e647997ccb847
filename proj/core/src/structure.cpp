#include <multituran/colouring.hpp>
#include <multituran/errors.hpp>
#include <multituran/generators.hpp>
#include <multituran/structure.hpp>

#include <algorithm>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace multituran
{
    auto ClassFamily::empty(const MultipartiteGraph & g, size_t classes) -> ClassFamily
    {
        ClassFamily f;
        f.sets.assign(g.part_count(), vector<Bitset>(classes, Bitset(g.vertex_count())));
        return f;
    }

    auto ClassFamily::from_labels(const MultipartiteGraph & g, size_t classes, std::span<const size_t> label) -> ClassFamily
    {
        if (label.size() != g.vertex_count())
            throw InvalidArgument("expected " + to_string(g.vertex_count()) + " labels, got " + to_string(label.size()));
        auto f = empty(g, classes);
        for (size_t v = 0 ; v < label.size() ; ++v) {
            if (label[v] == no_class)
                continue;
            if (label[v] >= classes)
                throw InvalidArgument("vertex " + to_string(v) + " has class " + to_string(label[v]) + ", expected < "
                        + to_string(classes));
            f.sets[g.part_of(v)][label[v]].set(v);
        }
        return f;
    }

    auto ClassFamily::class_union(size_t cls) const -> Bitset
    {
        Bitset u = sets.at(0).at(cls);
        for (size_t i = 1 ; i < sets.size() ; ++i)
            u |= sets[i].at(cls);
        return u;
    }

    auto check_family(const MultipartiteGraph & g, const ClassFamily & f, size_t classes, const string & name) -> void
    {
        if (f.parts() != g.part_count())
            throw InvalidArgument(name + " has " + to_string(f.parts()) + " parts, graph has " + to_string(g.part_count()));
        for (size_t i = 0 ; i < f.parts() ; ++i) {
            if (f.sets[i].size() != classes)
                throw InvalidArgument(name + " part " + to_string(i) + " has " + to_string(f.sets[i].size())
                        + " classes, expected " + to_string(classes));
            for (size_t s = 0 ; s < classes ; ++s) {
                if (f.sets[i][s].size() != g.vertex_count())
                    throw InvalidArgument(name + " set (" + to_string(i) + "," + to_string(s) + ") has the wrong universe");
                if (! f.sets[i][s].is_subset_of(g.part_mask(i)))
                    throw InvalidArgument(name + " set (" + to_string(i) + "," + to_string(s) + ") leaves part " + to_string(i));
            }
        }
    }

    namespace
    {
        auto fail(vector<size_t> witness, string message) -> ConditionResult
        {
            return ConditionResult{false, std::move(witness), std::move(message)};
        }

        auto first_edge_inside(const MultipartiteGraph & g, const Bitset & set) -> std::optional<std::pair<size_t, size_t>>
        {
            for (auto u = set.find_first() ; u != Bitset::npos ; u = set.find_next(u + 1)) {
                Bitset n = g.neighbours(u) & set;
                auto v = n.find_next(u + 1);
                if (v != Bitset::npos)
                    return std::pair{u, v};
            }
            return std::nullopt;
        }

        auto check_partition(const InfraStructure & s) -> ConditionResult
        {
            auto & g = s.base;
            auto classes = s.k - 1;
            for (size_t i = 0 ; i < g.part_count() ; ++i) {
                Bitset covered(g.vertex_count());
                for (size_t c = 0 ; c < classes ; ++c) {
                    auto & y = s.Y.at(i, c);
                    if (covered.intersects(y)) {
                        auto v = (covered & y).find_first();
                        return fail({v}, "vertex " + to_string(v) + " lies in two classes of part " + to_string(i));
                    }
                    covered |= y;
                }
                if (covered != g.part_mask(i)) {
                    Bitset missing = g.part_mask(i);
                    missing.subtract(covered);
                    auto v = missing.find_first();
                    return fail({v}, "vertex " + to_string(v) + " of part " + to_string(i) + " is in no class");
                }
                for (size_t c = 0 ; c + 1 < classes ; ++c)
                    if (s.Y.at(i, c).count() < s.Y.at(i, c + 1).count())
                        return fail({}, "part " + to_string(i) + ": class " + to_string(c) + " is smaller than class "
                                + to_string(c + 1));
            }
            return {};
        }

        auto check_independence(const InfraStructure & s) -> ConditionResult
        {
            auto & g = s.base;
            for (size_t c = 0 ; c + 1 < s.k ; ++c) {
                Bitset clean(g.vertex_count());
                for (size_t i = 0 ; i < g.part_count() ; ++i) {
                    if (! s.D.at(i, c).is_subset_of(s.Y.at(i, c))) {
                        Bitset stray = s.D.at(i, c);
                        stray.subtract(s.Y.at(i, c));
                        auto v = stray.find_first();
                        return fail({v}, "vertex " + to_string(v) + " is in D but not in Y for class " + to_string(c));
                    }
                    Bitset part = s.Y.at(i, c);
                    part.subtract(s.D.at(i, c));
                    clean |= part;
                }
                if (auto e = first_edge_inside(g, clean))
                    return fail({e->first, e->second}, "edge " + to_string(e->first) + "-" + to_string(e->second)
                            + " inside class " + to_string(c) + " outside D");
            }
            return {};
        }

        auto check_degrees(const InfraStructure & s) -> ConditionResult
        {
            auto & g = s.base;
            auto classes = s.k - 1;
            // compare count * (k-1) against eta * v(G) to stay in integers and rationals
            Rational scale = s.eta * Rational(g.vertex_count());
            for (size_t c = 0 ; c < classes ; ++c) {
                auto y_union = s.Y.class_union(c);
                auto d_union = s.D.class_union(c);
                for (auto v = d_union.find_first() ; v != Bitset::npos ; v = d_union.find_next(v + 1)) {
                    auto inside = g.neighbours(v).intersection_count(y_union);
                    if (Rational(inside * classes) > scale)
                        return fail({v}, "vertex " + to_string(v) + " has " + to_string(inside) + " neighbours in class "
                                + to_string(c) + ", above eta*v(G)/(k-1)");
                    Bitset outside(g.vertex_count());
                    outside.set_all();
                    outside.subtract(y_union);
                    outside.subtract(g.part_mask(g.part_of(v)));
                    auto non = outside.count() - g.neighbours(v).intersection_count(outside);
                    if (Rational(non * classes) < 3 * scale)
                        return fail({v}, "vertex " + to_string(v) + " has " + to_string(non) + " non-neighbours outside class "
                                + to_string(c) + ", below 3*eta*v(G)/(k-1)");
                }
            }
            return {};
        }
    }

    auto verify_infracolourable(const InfraStructure & s) -> InfraReport
    {
        if (s.k < 3)
            throw InvalidArgument("k must be at least 3, got " + to_string(s.k));
        if (s.eta < 0)
            throw InvalidArgument("eta must be non-negative");
        check_family(s.base, s.Y, s.k - 1, "Y");
        check_family(s.base, s.D, s.k - 1, "D");
        return InfraReport{check_partition(s), check_independence(s), check_degrees(s)};
    }

    auto cross_class_pairs(const MultipartiteGraph & g, const ClassFamily & y) -> uint64_t
    {
        uint64_t total = 0;
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t j = i + 1 ; j < g.part_count() ; ++j)
                for (size_t s = 0 ; s < y.classes() ; ++s)
                    for (size_t t = 0 ; t < y.classes() ; ++t)
                        if (s != t)
                            total += static_cast<uint64_t>(y.at(i, s).count()) * y.at(j, t).count();
        return total;
    }

    auto check_equality_certificate(const InfraStructure & s, size_t i0) -> std::optional<string>
    {
        auto & g = s.base;
        auto classes = s.k - 1;
        if (i0 > g.part_count())
            throw InvalidArgument("i0 must lie in [0, " + to_string(g.part_count()) + "]");
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t c = 0 ; c < classes ; ++c)
                if (s.D.at(i, c).any())
                    return "D_" + to_string(i + 1) + "^(" + to_string(c + 1) + ") is not empty";
        for (size_t i = 0 ; i < g.part_count() ; ++i) {
            if (i + 1 == i0)
                continue;
            for (size_t c = 0 ; c < classes ; ++c)
                if (s.Y.at(i, c).count() * classes != g.part_size(i))
                    return "|Y_" + to_string(i + 1) + "^(" + to_string(c + 1) + ")| != |V_" + to_string(i + 1) + "|/(k-1)";
        }
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t c = 0 ; c < classes ; ++c) {
                Bitset others(g.vertex_count());
                for (size_t j = 0 ; j < g.part_count() ; ++j)
                    for (size_t t = 0 ; t < classes ; ++t)
                        if (j != i && t != c)
                            others |= s.Y.at(j, t);
                auto & y = s.Y.at(i, c);
                for (auto v = y.find_first() ; v != Bitset::npos ; v = y.find_next(v + 1))
                    if (! others.is_subset_of(g.neighbours(v))) {
                        Bitset missing = others;
                        missing.subtract(g.neighbours(v));
                        return "missing edge " + to_string(v) + "-" + to_string(missing.find_first())
                            + " between different classes of different parts";
                    }
            }
        return std::nullopt;
    }

    auto infra_edge_bound(const InfraStructure & s) -> EdgeBound
    {
        auto report = verify_infracolourable(s);
        if (! report.ok()) {
            auto & bad = ! report.partition.pass ? report.partition
                : ! report.independence.pass ? report.independence : report.degrees;
            throw HypothesisViolation("structure is not infracolourable: " + bad.message);
        }
        auto & g = s.base;
        uint64_t pairs = 0;
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t j = i + 1 ; j < g.part_count() ; ++j)
                pairs += static_cast<uint64_t>(g.part_size(i)) * g.part_size(j);

        EdgeBound result;
        result.lhs = g.edge_count();
        result.rhs = Rational(pairs) * Rational(s.k - 2) / Rational(s.k - 1);
        result.holds = Rational(result.lhs) <= result.rhs;
        result.equality = Rational(result.lhs) == result.rhs;
        if (! result.equality)
            return result;
        std::optional<string> first_failure;
        for (size_t i0 = 0 ; i0 <= g.part_count() ; ++i0) {
            auto broken = check_equality_certificate(s, i0);
            if (! broken) {
                result.i0 = i0;
                result.reconstructed = cross_class_pairs(g, s.Y);
                return result;
            }
            if (! first_failure)
                first_failure = broken;
        }
        result.violated_clause = *first_failure;
        return result;
    }

    auto balanced_outliers(const MultipartiteGraph & g, const ClassFamily & x, std::span<const Bitset> t, const Rational & eps,
            size_t k) -> OutlierReport
    {
        if (k < 3)
            throw InvalidArgument("k must be at least 3, got " + to_string(k));
        if (eps <= 0 || eps >= Rational(1, 4))
            throw InvalidArgument("epsilon must lie in (0, 1/4), got " + to_string(eps));
        auto classes = k - 1;
        check_family(g, x, classes, "X");
        if (t.size() != g.part_count())
            throw InvalidArgument("T has " + to_string(t.size()) + " parts, graph has " + to_string(g.part_count()));
        for (size_t i = 0 ; i < t.size() ; ++i)
            if (t[i].size() != g.vertex_count() || ! t[i].is_subset_of(g.part_mask(i)))
                throw InvalidArgument("T_" + to_string(i) + " is not a subset of part " + to_string(i));

        OutlierReport r;
        auto failure = [&](string why) {
            if (r.hypothesis_failure.empty())
                r.hypothesis_failure = std::move(why);
        };

        for (size_t i = 0 ; i < g.part_count() ; ++i) {
            Bitset covered = t[i];
            size_t total = t[i].count();
            for (size_t c = 0 ; c < classes ; ++c) {
                covered |= x.at(i, c);
                total += x.at(i, c).count();
            }
            if (covered != g.part_mask(i) || total != g.part_size(i))
                failure("(i): part " + to_string(i) + " is not the disjoint union of its X classes and T");
            for (size_t c = 0 ; c + 1 < classes ; ++c)
                if (x.at(i, c).count() < x.at(i, c + 1).count())
                    failure("(ii): part " + to_string(i) + " classes are not in non-increasing order");
            if (Rational(t[i].count()) > eps * Rational(g.part_size(i)))
                failure("(ii): |T_" + to_string(i) + "| exceeds eps*|V_" + to_string(i) + "|");
        }
        for (size_t c = 0 ; c < classes ; ++c)
            if (auto e = first_edge_inside(g, x.class_union(c)))
                failure("(iii): edge " + to_string(e->first) + "-" + to_string(e->second) + " inside class " + to_string(c));
        auto floor = Rational(k - 2, k - 1);
        for (size_t i = 0 ; i < g.part_count() && ! r.sparse_pair ; ++i)
            for (size_t j = i + 1 ; j < g.part_count() ; ++j) {
                auto d = density(g, i, j);
                if (d.value() < floor) {
                    r.sparse_pair = std::pair{i, j};
                    failure("density d(V_" + to_string(i) + ",V_" + to_string(j) + ") = " + d.to_string() + " < "
                            + to_string(floor));
                    break;
                }
            }
        r.hypothesis_ok = r.hypothesis_failure.empty();

        auto share = Rational(1, k - 1);
        r.outliers.assign(classes, {});
        r.at_most_one = true;
        for (size_t c = 0 ; c < classes ; ++c) {
            for (size_t i = 0 ; i < g.part_count() ; ++i) {
                auto excess = Rational(x.at(i, c).count(), g.part_size(i)) - share;
                if (excess > 0 && excess * excess > eps)
                    r.outliers[c].push_back(i);
            }
            r.at_most_one = r.at_most_one && r.outliers[c].size() <= 1;
        }
        if (! r.hypothesis_ok || ! r.at_most_one)
            return r;

        vector<size_t> i0;
        for (auto & o : r.outliers)
            i0.insert(i0.end(), o.begin(), o.end());
        std::sort(i0.begin(), i0.end());
        i0.erase(std::unique(i0.begin(), i0.end()), i0.end());
        auto bound = Rational(k * k) * eps;
        bool ok = true;
        for (size_t i = 0 ; i < g.part_count() && ok ; ++i) {
            if (std::binary_search(i0.begin(), i0.end(), i))
                continue;
            for (size_t c = 0 ; c < classes && ok ; ++c) {
                auto dev = Rational(x.at(i, c).count(), g.part_size(i)) - share;
                ok = dev * dev <= bound;
            }
        }
        r.I0 = std::move(i0);
        r.conclusion_ok = ok;
        return r;
    }

    auto family_membership(const MultipartiteGraph & g, size_t k) -> bool
    {
        auto needed = permuted_part_count(k);
        if (g.part_count() < needed)
            throw InvalidArgument("family membership needs l >= (k-1)! = " + to_string(needed) + ", got "
                    + to_string(g.part_count()));
        if (! satisfies_family_density(g, k))
            return false;
        return chromatic_number(g) <= k - 1;
    }

    namespace
    {
        auto low_degree_sets(const MultipartiteGraph & g, const ClassFamily & against, const ClassFamily & y, const Rational & threshold)
            -> ClassFamily
        {
            auto classes = y.classes();
            auto out = ClassFamily::empty(g, classes);
            auto limit = threshold * Rational(g.vertex_count());
            vector<Bitset> unions;
            for (size_t c = 0 ; c < classes ; ++c)
                unions.push_back(against.class_union(c));
            for (size_t i = 0 ; i < g.part_count() ; ++i)
                for (size_t s = 0 ; s < classes ; ++s) {
                    auto & ys = y.at(i, s);
                    for (auto v = ys.find_first() ; v != Bitset::npos ; v = ys.find_next(v + 1))
                        for (size_t c = 0 ; c < classes ; ++c)
                            if (c != s && Rational(g.neighbours(v).intersection_count(unions[c])) < limit) {
                                out.sets[i][s].set(v);
                                break;
                            }
                }
            return out;
        }
    }

    auto exceptional_sets(const MultipartiteGraph & g, const ClassFamily & x, const ClassFamily & y, const Rational & inner,
            const Rational & outer) -> ExceptionalSets
    {
        auto classes = y.classes();
        check_family(g, y, classes, "Y");
        check_family(g, x, classes, "X");
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t c = 0 ; c < classes ; ++c)
                if (! x.at(i, c).is_subset_of(y.at(i, c)))
                    throw InvalidArgument("X_" + to_string(i) + "^(" + to_string(c) + ") is not inside Y");
        return ExceptionalSets{low_degree_sets(g, x, y, inner), low_degree_sets(g, y, y, outer)};
    }

    auto min_degree_partition(const MultipartiteGraph & g, const ClassFamily & x, std::span<const size_t> scope) -> ClassFamily
    {
        auto classes = x.classes();
        check_family(g, x, classes, "X");
        if (classes == 0)
            throw InvalidArgument("X needs at least one class");
        vector<Bitset> unions;
        for (size_t c = 0 ; c < classes ; ++c)
            unions.push_back(x.class_union(c));
        auto y = ClassFamily::empty(g, classes);
        for (auto i : scope) {
            if (i >= g.part_count())
                throw InvalidArgument("scope names part " + to_string(i) + " of " + to_string(g.part_count()));
            auto & part = g.part_mask(i);
            for (auto v = part.find_first() ; v != Bitset::npos ; v = part.find_next(v + 1)) {
                vector<size_t> deg(classes);
                for (size_t c = 0 ; c < classes ; ++c)
                    deg[c] = g.neighbours(v).intersection_count(unions[c]);
                auto low = *std::min_element(deg.begin(), deg.end());
                size_t pick = std::find(deg.begin(), deg.end(), low) - deg.begin();
                for (size_t c = 0 ; c < classes ; ++c)
                    if (x.at(i, c).test(v) && deg[c] == low)
                        pick = c;
                y.sets[i][pick].set(v);
            }
        }
        return y;
    }
}
