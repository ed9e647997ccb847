#include <multituran/corpus.hpp>
#include <multituran/errors.hpp>
#include <multituran/generators.hpp>
#include <multituran/small_graph.hpp>

using std::size_t;
using std::to_string;
using std::vector;

namespace multituran
{
    namespace
    {
        auto pattern(std::string name, std::string description, const SmallGraph & h, bool acc, size_t chi) -> Fixture
        {
            return Fixture{std::move(name), std::move(description), to_multipartite(h), true, acc, chi, std::nullopt, std::nullopt,
                std::nullopt};
        }

        auto host(std::string name, std::string description, MultipartiteGraph g, std::optional<size_t> chi, Rational density)
            -> Fixture
        {
            return Fixture{std::move(name), std::move(description), std::move(g), false, std::nullopt, chi, Density(density),
                std::nullopt, std::nullopt};
        }

        // K_2(4,4) plus two disjoint edges inside the first class
        auto k2_plus_2() -> SmallGraph
        {
            vector<size_t> sizes{4, 4};
            auto h = complete_multipartite_graph(sizes);
            h.add_edge(0, 1);
            h.add_edge(2, 3);
            return h;
        }

        auto build() -> vector<Fixture>
        {
            vector<Fixture> all;
            for (size_t n = 2 ; n <= 6 ; ++n)
                all.push_back(pattern("K" + to_string(n), "complete graph", complete_graph(n), true, n));
            for (size_t n = 3 ; n <= 7 ; ++n)
                all.push_back(pattern("C" + to_string(n), "cycle", cycle_graph(n), n % 2 == 1, n % 2 == 1 ? 3 : 2));
            all.push_back(pattern("K12", "path on three vertices", complete_bipartite_graph(1, 2), false, 2));
            vector<size_t> k3122{1, 2, 2};
            all.push_back(pattern("K3122", "complete tripartite K_3(1,2,2)", complete_multipartite_graph(k3122), false, 3));
            all.push_back(pattern("K2p2_4", "K_2(4,4) plus a 2-edge matching in the first class", k2_plus_2(), true, 3));

            for (size_t chi = 3 ; chi <= 4 ; ++chi)
                for (size_t l = 3 ; l <= 5 ; ++l)
                    all.push_back(host("bondy_" + to_string(chi) + "_" + to_string(l), "prototype with all densities (chi-2)/(chi-1)",
                                bondy_prototype(chi, l), chi - 1, Rational(chi - 2, chi - 1)));
            for (size_t l = 3 ; l <= 5 ; ++l)
                for (size_t w = 1 ; w <= 2 ; ++w) {
                    auto f = host("family_3_" + to_string(l) + "_w" + to_string(w), "family member k=3, equal weights",
                            build_family_member(FamilySpec::uniform(3, l, w)), 2, Rational(1, 2));
                    f.free_of = "K3";
                    all.push_back(std::move(f));
                }
            for (size_t r = 1 ; r <= 2 ; ++r)
                for (size_t l = 3 ; l <= 5 ; ++l) {
                    auto g = lower_bound_graph(r, l);
                    std::optional<size_t> chi = r == 1 ? std::optional<size_t>(2) : g.vertex_count() <= 24 ? std::optional<size_t>(3) : std::nullopt;
                    auto f = host("lower_bound_" + to_string(r) + "_" + to_string(l),
                            "l parts of r classes of size l-1, one matching edge per pair", std::move(g), chi,
                            Rational(r - 1, r) + Rational(1, r * r * (l - 1) * (l - 1)));
                    if (r == 1)
                        f.free_of = "K12";
                    if (r == 2)
                        f.free_of = "K3122";
                    all.push_back(std::move(f));
                }
            for (size_t l = 3 ; l <= 5 ; ++l) {
                auto f = host("k12ex_" + to_string(l), "perfect matching with one edge per pair of parts", k12_extremal(l), 2,
                        Rational(1, (l - 1) * (l - 1)));
                f.free_of = "K12";
                all.push_back(std::move(f));
            }
            for (auto [l, n] : {std::pair<size_t, size_t>{2, 16}, {2, 24}, {3, 18}, {3, 30}}) {
                auto g = two_clique_union(l, n);
                auto density = min_pairwise_density(g).value();
                auto f = host("two_clique_" + to_string(l) + "_" + to_string(n), "disjoint union of two balanced complete l-partite graphs",
                        std::move(g), std::nullopt, density);
                if (f.graph.vertex_count() <= 24)
                    f.chi = l;
                f.max_cycle = n / 2 + 2 * l;
                all.push_back(std::move(f));
            }
            return all;
        }
    }

    auto corpus() -> const vector<Fixture> &
    {
        static const vector<Fixture> all = build();
        return all;
    }

    auto fixture(const std::string & name) -> const Fixture &
    {
        for (auto & f : corpus())
            if (f.name == name)
                return f;
        throw InvalidArgument("unknown fixture '" + name + "'");
    }
}
