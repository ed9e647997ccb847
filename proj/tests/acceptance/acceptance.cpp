// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check compares the library against the brute-force oracles
// in tests/support or against exact closed forms.

#include <cli.hpp>

#include <multituran/colouring.hpp>
#include <multituran/corpus.hpp>
#include <multituran/embedding.hpp>
#include <multituran/generators.hpp>
#include <multituran/graph_io.hpp>
#include <multituran/random.hpp>
#include <multituran/structure.hpp>
#include <multituran/subgraph.hpp>
#include <multituran/threshold.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "instances.hpp"
#include "oracles.hpp"

using namespace multituran;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    // First failed expectation, as the criterion's reason.
    struct Failed
    {
        string what;
    };

    void expect(bool ok, const string & what)
    {
        if (! ok)
            throw Failed{what};
    }

    struct Criterion
    {
        int id;
        string name;
        double limit_seconds;
        std::function<string()> run;
    };

    auto rat(const Rational & r) -> string { return multituran::to_string(r); }

    auto pattern(const string & name) -> SmallGraph { return to_small_graph(fixture(name).graph); }

    // Colour classes of an equal-weight family member.
    auto family_structure(size_t k, size_t l, size_t w) -> InfraStructure
    {
        auto g = build_family_member(FamilySpec::uniform(k, l, w));
        vector<size_t> labels;
        for (size_t i = 0 ; i < l ; ++i)
            for (size_t s = 0 ; s + 1 < k ; ++s)
                labels.insert(labels.end(), w, s);
        return InfraStructure{g, k, 0, ClassFamily::from_labels(g, k - 1, labels), ClassFamily::empty(g, k - 1)};
    }

    auto label_of(const ClassFamily & y, size_t v, size_t part) -> size_t
    {
        for (size_t s = 0 ; s < y.classes() ; ++s)
            if (y.at(part, s).test(v))
                return s;
        return ClassFamily::no_class;
    }

    // Equality characterisation checked from scratch: D empty, parts other
    // than i0 (1-based, 0 for none) split evenly, and exactly the cross-class
    // pairs of different parts are edges. Returns the implied edge count.
    auto certificate_oracle(const InfraStructure & s, size_t i0) -> std::optional<std::uint64_t>
    {
        auto & g = s.base;
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            for (size_t c = 0 ; c + 1 < s.k ; ++c) {
                if (s.D.at(i, c).any())
                    return std::nullopt;
                if (i + 1 != i0 && s.Y.at(i, c).count() * (s.k - 1) != g.part_size(i))
                    return std::nullopt;
            }
        std::uint64_t edges = 0;
        for (size_t u = 0 ; u < g.vertex_count() ; ++u)
            for (size_t v = u + 1 ; v < g.vertex_count() ; ++v) {
                auto pu = g.part_of(u), pv = g.part_of(v);
                if (pu == pv)
                    continue;
                bool cross = label_of(s.Y, u, pu) != label_of(s.Y, v, pv);
                if (cross != g.adjacent(u, v))
                    return std::nullopt;
                edges += cross;
            }
        return edges;
    }

    auto criterion_bondy() -> string
    {
        for (size_t chi = 3 ; chi <= 4 ; ++chi)
            for (size_t l = 3 ; l <= 5 ; ++l) {
                auto g = bondy_prototype(chi, l);
                auto tag = "bondy(" + std::to_string(chi) + "," + std::to_string(l) + ")";
                Rational want(chi - 2, chi - 1);
                for (size_t i = 0 ; i < l ; ++i)
                    for (size_t j = i + 1 ; j < l ; ++j) {
                        expect(oracle::density(g, i, j) == want, tag + " oracle density");
                        expect(density(g, i, j).value() == want, tag + " density");
                    }
                expect(chromatic_number(g) == chi - 1, tag + " chromatic number");
                expect(oracle::chromatic_number(to_small_graph(g)) == chi - 1, tag + " oracle chromatic number");
                // no K_chi at all, which covers the transversal case
                expect(! find_copy(g, complete_graph(chi), CopyMode::any), tag + " clique found");
                expect(oracle::copies(g, complete_graph(chi), false) == 0, tag + " oracle clique");
                if (l >= chi)
                    expect(! find_copy(g, complete_graph(chi), CopyMode::transversal), tag + " transversal clique found");
            }
        return "6 prototypes";
    }

    auto criterion_family() -> string
    {
        size_t checked = 0;
        for (size_t l = 3 ; l <= 5 ; ++l)
            for (size_t w = 1 ; w <= 2 ; ++w) {
                auto s = family_structure(3, l, w);
                auto tag = "family(3," + std::to_string(l) + ",w" + std::to_string(w) + ")";
                expect(family_membership(s.base, 3), tag + " membership");
                expect(oracle::triangles(s.base) == 0, tag + " triangle");
                expect(verify_infracolourable(s).ok(), tag + " structure");
                auto b = infra_edge_bound(s);
                expect(b.equality && b.i0.has_value(), tag + " equality");
                expect(! check_equality_certificate(s, *b.i0).has_value(), tag + " certificate");
                auto implied = certificate_oracle(s, *b.i0);
                expect(implied.has_value() && *implied == b.lhs, tag + " certificate oracle");
                expect(b.reconstructed == std::optional<std::uint64_t>(b.lhs), tag + " reconstruction");
                ++checked;
            }
        return std::to_string(checked) + " members";
    }

    auto criterion_lower_bound() -> string
    {
        string detail;
        for (size_t l = 4 ; l <= 5 ; ++l) {
            auto g = lower_bound_graph(2, l);
            Rational want = Rational(1, 2) + Rational(1, 4 * (l - 1) * (l - 1));
            expect(min_pairwise_density(g).value() == want, "min density at l=" + std::to_string(l));
            expect(oracle::min_density(g) == want, "oracle min density at l=" + std::to_string(l));
            auto t = find_copy(g, complete_graph(3), CopyMode::transversal);
            expect(t && is_embedding(g, complete_graph(3), *t, CopyMode::transversal), "transversal triangle at l=" + std::to_string(l));
            detail += "l=" + std::to_string(l) + " density " + rat(want) + "; ";
        }
        auto g = lower_bound_graph(2, 5);
        expect(g.vertex_count() == 40, "host size");
        auto copies = count_copies(g, pattern("K3122"), CopyMode::any, 4);
        expect(copies == 0, "K3(1,2,2) copies: " + std::to_string(copies));
        expect(! find_copy(g, pattern("K3122"), CopyMode::any), "K3(1,2,2) found");
        expect(oracle::copies(g, pattern("K3122"), false) == 0, "oracle found K3(1,2,2)");
        return detail + "0 copies of K3(1,2,2) in 40 vertices";
    }

    auto criterion_acc() -> string
    {
        size_t compared = 0;
        for (auto & f : corpus()) {
            if (f.graph.vertex_count() > acc_oracle_limit)
                continue;
            auto h = to_small_graph(f.graph);
            auto decided = almost_colour_critical_witness(h);
            expect(decided.has_value() == acc_brute_oracle(h), f.name + " disagrees with the oracle");
            if (decided)
                expect(is_acc_map(h, *decided), f.name + " witness invalid");
            if (f.acc)
                expect(decided.has_value() == *f.acc, f.name + " recorded value");
            ++compared;
        }
        expect(compared >= 15, "only " + std::to_string(compared) + " fixtures");
        std::map<string, bool> named{{"K2", true}, {"K3", true}, {"K4", true}, {"K5", true}, {"K6", true}, {"C5", true},
            {"C7", true}, {"C4", false}, {"K12", false}, {"K3122", false}, {"K2p2_4", true}};
        for (auto & [name, want] : named) {
            auto h = pattern(name);
            expect(almost_colour_critical_witness(h).has_value() == want, name);
            expect(acc_brute_oracle(h) == want, name + " oracle");
        }
        expect(chromatic_number(pattern("K2p2_4")) == 3, "chi of K2p2_4");
        expect(oracle::chromatic_number(pattern("K2p2_4")) == 3, "oracle chi of K2p2_4");
        return std::to_string(compared) + " fixtures agree";
    }

    auto criterion_k12() -> string
    {
        auto path = pattern("K12");
        for (size_t l = 3 ; l <= 5 ; ++l) {
            auto g = k12_extremal(l);
            Rational want(1, (l - 1) * (l - 1));
            auto tag = "l=" + std::to_string(l);
            expect(oracle::copies(g, path, false) == 0, tag + " contains K_{1,2}");
            expect(oracle::min_density(g) == want, tag + " oracle density");
            ThresholdWitness w{path, l, g, Density(want), CopyMode::any};
            expect(certify_witness(w).value() == want, tag + " certificate");
        }
        return "densities 1/4, 1/9, 1/16 certified";
    }

    auto criterion_recurrence() -> string
    {
        auto d = critical_density_recurrence(10, 1e-15);
        expect(d.size() == 9, "length");
        expect(d[0] == 0, "d_2");
        expect(std::abs(d[1] - (std::sqrt(5.0) - 1) / 2) < 1e-9, "d_3");
        for (size_t i = 1 ; i < d.size() ; ++i) {
            expect(std::abs(d[i] * d[i] * (1 - d[i - 1]) + d[i] - 1) < 1e-9, "residual at k=" + std::to_string(i + 2));
            expect(d[i] > d[i - 1] && d[i] < 1, "monotone at k=" + std::to_string(i + 2));
        }
        std::ostringstream s;
        s.precision(10);
        s << "d_3 = " << d[1] << ", d_10 = " << d.back();
        return s.str();
    }

    auto criterion_infra() -> string
    {
        Rng rng(20240101);
        size_t total = 0, equalities = 0;
        for (size_t k = 3 ; k <= 4 ; ++k)
            for (size_t l = 3 ; l <= 5 ; ++l)
                for (int trial = 0 ; trial < 100 ; ++trial) {
                    auto s = instances::random_infra_structure(rng, k, l, 8);
                    auto tag = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " trial " + std::to_string(trial);
                    expect(verify_infracolourable(s).ok(), tag + " generator produced an invalid structure");
                    std::uint64_t pairs = 0, edges = 0;
                    for (size_t i = 0 ; i < l ; ++i)
                        for (size_t j = i + 1 ; j < l ; ++j)
                            pairs += s.base.part_size(i) * s.base.part_size(j);
                    for (size_t u = 0 ; u < s.base.vertex_count() ; ++u)
                        for (size_t v = u + 1 ; v < s.base.vertex_count() ; ++v)
                            edges += s.base.adjacent(u, v);
                    Rational rhs = Rational(k - 2, k - 1) * Rational(pairs);
                    auto b = infra_edge_bound(s);
                    expect(b.lhs == edges && b.rhs == rhs, tag + " sides");
                    expect(Rational(edges) <= rhs && b.holds, tag + " bound violated");
                    if (Rational(edges) == rhs) {
                        ++equalities;
                        expect(b.equality && b.i0.has_value(), tag + " equality without certificate: " + b.violated_clause);
                        auto implied = certificate_oracle(s, *b.i0);
                        expect(implied.has_value() && *implied == edges, tag + " certificate fails the oracle");
                        expect(b.reconstructed == std::optional<std::uint64_t>(edges), tag + " reconstruction");
                    }
                    ++total;
                }
        expect(equalities > 0, "no equality instance generated");
        return std::to_string(total) + " structures, " + std::to_string(equalities) + " at equality";
    }

    auto block_of(const SubdividedClasses & w, size_t s, size_t v) -> size_t
    {
        for (size_t i = 0 ; i < w.blocks[s].size() ; ++i)
            if (w.blocks[s][i].test(v))
                return i;
        return SIZE_MAX;
    }

    auto good(const MultipartiteGraph & g, const SubdividedClasses & w, const GoodEmbedding & f) -> bool
    {
        std::set<size_t> blocks;
        for (size_t s = 0 ; s < f.images.size() ; ++s)
            for (auto v : f.images[s]) {
                auto b = block_of(w, s, v);
                if (b == SIZE_MAX || ! blocks.insert(b).second)
                    return false;
            }
        for (size_t s = 0 ; s < f.images.size() ; ++s)
            for (size_t t = s + 1 ; t < f.images.size() ; ++t)
                for (auto x : f.images[s])
                    for (auto y : f.images[t])
                        if (! g.adjacent(x, y))
                            return false;
        return true;
    }

    auto extension_hypotheses(const MultipartiteGraph & g, const SubdividedClasses & w, size_t q) -> bool
    {
        auto r = w.blocks.size(), scale = 2 * r * q;
        for (size_t s = 0 ; s < r ; ++s) {
            size_t size = 0;
            for (auto & b : w.blocks[s])
                size += b.count();
            for (auto & b : w.blocks[s])
                if (b.count() * scale >= size)
                    return false;
            for (size_t t = 0 ; t < r ; ++t)
                if (t != s)
                    for (auto & b : w.blocks[t])
                        for (auto v : b.to_indices()) {
                            size_t deg = 0;
                            for (auto & c : w.blocks[s])
                                for (auto x : c.to_indices())
                                    deg += g.adjacent(v, x);
                            if (deg * scale <= (scale - 1) * size)
                                return false;
                        }
        }
        return true;
    }

    auto criterion_extension() -> string
    {
        Rng rng(33);
        size_t extended = 0;
        for (int trial = 0 ; trial < 200 ; ++trial) {
            size_t r = 2 + trial % 2, q = 1 + (trial / 2) % 3;
            auto inst = instances::random_extension_instance(rng, r, q, 30);
            auto tag = "host " + std::to_string(trial);
            expect(extension_hypotheses(inst.host, inst.w, q), tag + " misses the hypotheses");
            auto partial = instances::good_embeddings(inst.host, inst.w, q, 50);
            expect(! partial.empty(), tag + " has no good embedding");
            for (auto & f : partial) {
                auto e = extend_good_embedding(inst.host, inst.w, f, q);
                expect(good(inst.host, inst.w, e), tag + " extension is not good");
                for (size_t s = 0 ; s < r ; ++s) {
                    expect(e.images[s].size() == q, tag + " wrong class size");
                    for (auto v : f.images[s])
                        expect(std::find(e.images[s].begin(), e.images[s].end(), v) != e.images[s].end(), tag + " dropped an image");
                }
                ++extended;
            }
        }
        return "200 hosts, " + std::to_string(extended) + " partial embeddings extended";
    }

    // binom(x, q) for rational x, zero below q - 1.
    auto binom(const Rational & x, size_t q) -> Rational
    {
        if (x < Rational(q) - 1)
            return 0;
        Rational result = 1;
        for (size_t i = 0 ; i < q ; ++i)
            result = result * (x - Rational(i)) / Rational(i + 1);
        return result;
    }

    auto criterion_select() -> string
    {
        Rng rng(44);
        for (int trial = 0 ; trial < 100 ; ++trial) {
            size_t r = 1 + trial % 2, q = 1 + (trial / 2) % 3;
            Rational d = (trial / 6) % 2 ? Rational(2, 3) : Rational(1, 2);
            auto inst = instances::random_select_instance(rng, r, q, d, 16);
            auto tag = "instance " + std::to_string(trial);
            auto u = inst.u.to_indices();
            Rational dr = 1;
            for (size_t i = 0 ; i < r ; ++i)
                dr = dr * d;
            Rational need = Rational(q) / dr;
            expect(Rational(u.size()) >= need && Rational(u.size()) < need + 1, tag + " |U| is not the ceiling of q d^-r");
            for (auto & w : inst.w)
                expect(w.count() <= 16, tag + " class too large");

            auto res = common_neighbour_select(inst.host, inst.u, inst.w, q, d);
            expect(res.A.has_value(), tag + " found no subset");
            long double rho = std::exp(-static_cast<long double>(q)) * std::pow(static_cast<long double>(static_cast<double>(dr)), q);
            for (size_t s = 0 ; s < r ; ++s) {
                size_t common = 0;
                for (auto x : inst.w[s].to_indices()) {
                    bool all = true;
                    for (auto a : *res.A)
                        all = all && inst.host.adjacent(a, x);
                    common += all;
                }
                expect(static_cast<long double>(common) >= rho * inst.w[s].count(), tag + " subset below rho");
            }

            // double counting and the convexity bound, recomputed directly
            Rational subset_side = 0, tuple_side = 0, product = 1;
            for (auto & w : inst.w)
                product = product * Rational(w.count());
            std::function<void(size_t, size_t, vector<size_t> &)> subsets = [&](size_t from, size_t left, vector<size_t> & chosen) {
                if (left == 0) {
                    Rational p = 1;
                    for (auto & w : inst.w) {
                        size_t c = 0;
                        for (auto x : w.to_indices()) {
                            bool all = true;
                            for (auto a : chosen)
                                all = all && inst.host.adjacent(a, x);
                            c += all;
                        }
                        p = p * Rational(c);
                    }
                    subset_side = subset_side + p;
                    return;
                }
                for (size_t i = from ; i + left <= u.size() ; ++i) {
                    chosen.push_back(u[i]);
                    subsets(i + 1, left - 1, chosen);
                    chosen.pop_back();
                }
            };
            vector<size_t> chosen;
            subsets(0, q, chosen);
            std::function<void(size_t, vector<size_t> &)> tuples = [&](size_t s, vector<size_t> & picked) {
                if (s == r) {
                    size_t c = 0;
                    for (auto a : u) {
                        bool all = true;
                        for (auto x : picked)
                            all = all && inst.host.adjacent(a, x);
                        c += all;
                    }
                    tuple_side = tuple_side + binom(Rational(c), q);
                    return;
                }
                for (auto x : inst.w[s].to_indices()) {
                    picked.push_back(x);
                    tuples(s + 1, picked);
                    picked.pop_back();
                }
            };
            vector<size_t> picked;
            tuples(0, picked);
            expect(subset_side == tuple_side, tag + " double count");
            expect(tuple_side >= binom(dr * Rational(u.size()), q) * product, tag + " convexity bound");
            expect(Rational(res.counts.subset_side) == subset_side && Rational(res.counts.tuple_side) == tuple_side, tag + " reported counts");
            expect(res.counts.holds(), tag + " reported inequality");
        }
        return "100 instances";
    }

    auto criterion_cliques() -> string
    {
        vector<size_t> sizes{9, 9, 9};
        GraphBuilder b(sizes);
        for (size_t i = 0 ; i < 3 ; ++i)
            for (size_t j = i + 1 ; j < 3 ; ++j)
                for (size_t x = 0 ; x < 9 ; ++x)
                    for (size_t y = 0 ; y < 9 ; ++y)
                        if (x != y)
                            b.add_edge(VertexId{i, x}, VertexId{j, y});
        auto g = b.build();
        for (size_t v = 0 ; v < g.vertex_count() ; ++v)
            expect(g.degree(v) == 16, "degree");
        auto c = count_kr_lower(g, instances::part_sets(g), 3, 9);
        auto triangles = oracle::triangles(g);
        expect(c.count == triangles, "count " + std::to_string(c.count) + " vs oracle " + std::to_string(triangles));
        expect(c.bound == Rational(729, 2), "bound");
        expect(c.count >= 365 && c.holds, "below the bound");
        return std::to_string(c.count) + " triangles >= 365";
    }

    // The component of g containing start, as a graph with singleton parts.
    auto component(const MultipartiteGraph & g, size_t start, vector<bool> & seen) -> MultipartiteGraph
    {
        vector<size_t> members{start}, index(g.vertex_count(), SIZE_MAX);
        seen[start] = true;
        for (size_t i = 0 ; i < members.size() ; ++i)
            for (size_t v = 0 ; v < g.vertex_count() ; ++v)
                if (! seen[v] && g.adjacent(members[i], v)) {
                    seen[v] = true;
                    members.push_back(v);
                }
        for (size_t i = 0 ; i < members.size() ; ++i)
            index[members[i]] = i;
        GraphBuilder b(vector<size_t>(members.size(), 1));
        for (auto u : members)
            for (auto v : members)
                if (index[u] < index[v] && g.adjacent(u, v))
                    b.add_edge(index[u], index[v]);
        return b.build();
    }

    auto criterion_cycles_books() -> string
    {
        auto g = two_clique_union(2, 16);
        auto spectrum = cycle_spectrum(g, g.vertex_count());
        expect(! spectrum.empty() && spectrum.back() <= 12, "longest cycle above 12");
        std::set<size_t> expected;
        vector<bool> seen(g.vertex_count());
        for (size_t v = 0 ; v < g.vertex_count() ; ++v)
            if (! seen[v]) {
                auto c = component(g, v, seen);
                expect(c.vertex_count() <= 16, "component too large for the oracle");
                for (auto len : oracle::cycle_lengths(c))
                    expected.insert(len);
            }
        expect(vector<size_t>(expected.begin(), expected.end()) == spectrum, "spectrum disagrees with the oracle");

        auto member = build_family_member(FamilySpec::uniform(3, 4, 2));
        expect(max_book(member, 3).count == 0, "book in a triangle-free member");
        auto k4 = max_book(fixture("K4").graph, 3);
        expect(k4.count == 2, "K4 book is " + std::to_string(k4.count));
        expect(k4.edge && oracle::cliques_on_edge(fixture("K4").graph, k4.edge->first, k4.edge->second, 3) == 2, "K4 book edge");
        return "longest cycle " + std::to_string(spectrum.back()) + ", books 0 and 2";
    }

    auto criterion_determinism() -> string
    {
        auto dir = std::filesystem::temp_directory_path() / "multituran_acceptance";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        auto pattern_path = (dir / "K3.json").string();
        write_file(pattern_path, save_graph(fixture("K3").graph));
        vector<string> args{"--seed", "7", "search", "--pattern", pattern_path, "--l", "4", "--part-size", "3", "--budget", "2000"};
        string first;
        for (int run = 0 ; run < 3 ; ++run) {
            std::ostringstream out, err;
            expect(cli::run(args, out, err) == cli::exit_ok, "search failed: " + err.str());
            if (run == 0)
                first = out.str();
            expect(out.str() == first, "search output differs on run " + std::to_string(run));
        }
        for (auto & f : corpus()) {
            auto text = save_graph(f.graph);
            auto path = (dir / (f.name + ".json")).string();
            write_file(path, text);
            auto back = load_graph(read_file(path));
            expect(back == f.graph && save_graph(back) == text, f.name + " graph file round trip");
            expect(load_dot(save_dot(f.graph)) == f.graph, f.name + " DOT round trip");
        }
        std::filesystem::remove_all(dir);
        return "search stable over 3 runs, " + std::to_string(corpus().size()) + " fixtures round-trip";
    }
}

auto main() -> int
{
    vector<Criterion> criteria{
        {1, "bondy prototype", 5, criterion_bondy},
        {2, "family members", 10, criterion_family},
        {3, "lower-bound construction", 60, criterion_lower_bound},
        {4, "almost colour-critical decider", 10, criterion_acc},
        {5, "K_{1,2} tightness", 2, criterion_k12},
        {6, "critical density recurrence", 0.1, criterion_recurrence},
        {7, "infracolourable edge bound", 30, criterion_infra},
        {8, "good embedding extension", 60, criterion_extension},
        {9, "common neighbourhood selection", 30, criterion_select},
        {10, "transversal triangle count", 10, criterion_cliques},
        {11, "cycles and books", 30, criterion_cycles_books},
        {12, "determinism and round trips", 10, criterion_determinism},
    };
    int failures = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        string detail;
        bool ok = true;
        try {
            detail = c.run();
        }
        catch (const Failed & f) {
            ok = false;
            detail = f.what;
        }
        catch (const std::exception & e) {
            ok = false;
            detail = string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds >= c.limit_seconds) {
            ok = false;
            detail += "; over the time limit";
        }
        failures += ! ok;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << time.str() << " s, limit " << c.limit_seconds
                  << " s): " << detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
