#include <multituran/errors.hpp>
#include <multituran/generators.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using std::size_t;
using std::to_string;
using std::vector;

namespace multituran
{
    namespace
    {
        // Position of partner j inside part i when part i has one slot per other part.
        auto slot(size_t i, size_t j) -> size_t
        {
            return j < i ? j : j - 1;
        }
    }

    auto bondy_prototype(size_t chi, size_t parts) -> MultipartiteGraph
    {
        if (chi < 2)
            throw InvalidArgument("bondy_prototype needs chi >= 2, got " + to_string(chi));
        if (parts < 2)
            throw InvalidArgument("bondy_prototype needs at least 2 parts, got " + to_string(parts));
        GraphBuilder builder(vector<size_t>(parts, chi - 1));
        for (size_t x = 0 ; x < parts ; ++x)
            for (size_t y = x + 1 ; y < parts ; ++y)
                for (size_t i = 0 ; i + 1 < chi ; ++i)
                    for (size_t j = 0 ; j + 1 < chi ; ++j)
                        if (i != j)
                            builder.add_edge(VertexId{x, i}, VertexId{y, j});
        return builder.build();
    }

    auto lower_bound_graph(size_t r, size_t parts) -> MultipartiteGraph
    {
        if (r < 1)
            throw InvalidArgument("lower_bound_graph needs r >= 1");
        if (parts < 2)
            throw InvalidArgument("lower_bound_graph needs at least 2 parts, got " + to_string(parts));
        auto cls = parts - 1;
        GraphBuilder builder(vector<size_t>(parts, cls * r));
        for (size_t i = 0 ; i < parts ; ++i)
            for (size_t j = i + 1 ; j < parts ; ++j) {
                for (size_t a = 0 ; a < cls * r ; ++a)
                    for (size_t b = 0 ; b < cls * r ; ++b)
                        if (a / cls != b / cls)
                            builder.add_edge(VertexId{i, a}, VertexId{j, b});
                builder.add_edge(VertexId{i, slot(i, j)}, VertexId{j, slot(j, i)});
            }
        return builder.build();
    }

    auto FamilySpec::uniform(size_t k, size_t parts, size_t w) -> FamilySpec
    {
        FamilySpec spec;
        spec.k = k;
        spec.weights.assign(parts, vector<size_t>(k >= 1 ? k - 1 : 0, w));
        return spec;
    }

    auto permuted_part_count(size_t k) -> size_t
    {
        if (k < 3 || k > 10)
            throw InvalidArgument("family parameter k must lie in [3, 10], got " + to_string(k));
        size_t f = 1;
        for (size_t i = 2 ; i < k ; ++i)
            f *= i;
        return f;
    }

    auto permutations_of(size_t n) -> vector<vector<size_t>>
    {
        vector<size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        vector<vector<size_t>> result;
        do
            result.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return result;
    }

    auto validate(const FamilySpec & spec) -> void
    {
        using Kind = FamilySpecViolation::Kind;
        if (spec.k < 3 || spec.k > 10)
            throw FamilySpecViolation(Kind::BadParameters, "k must lie in [3, 10], got " + to_string(spec.k));
        auto permuted = permuted_part_count(spec.k);
        auto classes = spec.k - 1;
        if (spec.parts() < permuted)
            throw FamilySpecViolation(Kind::BadParameters, "need l >= (k-1)! = " + to_string(permuted)
                    + " parts, got " + to_string(spec.parts()));
        for (size_t i = 0 ; i < spec.parts() ; ++i)
            if (spec.weights[i].size() != classes)
                throw FamilySpecViolation(Kind::BadParameters, "part " + to_string(i) + " has "
                        + to_string(spec.weights[i].size()) + " weights, expected " + to_string(classes));

        auto perms = permutations_of(classes);
        for (size_t i = 0 ; i < spec.parts() ; ++i) {
            auto & w = spec.weights[i];
            if (std::accumulate(w.begin(), w.end(), size_t{0}) == 0)
                throw FamilySpecViolation(Kind::ZeroPart, "part " + to_string(i) + " has total weight 0");
            if (i < permuted) {
                auto & pi = perms[i];
                for (size_t s = 0 ; s + 1 < classes ; ++s)
                    if (w[pi[s]] < w[pi[s + 1]])
                        throw FamilySpecViolation(Kind::OrderingViolated, "part " + to_string(i) + ": weight of class "
                                + to_string(pi[s]) + " is below that of class " + to_string(pi[s + 1])
                                + " against its permutation order");
            }
            else {
                for (size_t s = 1 ; s < classes ; ++s)
                    if (w[s] != w[0])
                        throw FamilySpecViolation(Kind::UnequalTailWeights, "part " + to_string(i)
                                + " lies beyond (k-1)! and must have equal weights");
            }
        }

        std::set<std::pair<FamilySpec::Vertex, FamilySpec::Vertex>> seen;
        for (auto & [a, b] : spec.removals) {
            auto name = "removal (" + to_string(a.part) + "," + to_string(a.cls) + "," + to_string(a.copy) + ")-("
                + to_string(b.part) + "," + to_string(b.cls) + "," + to_string(b.copy) + ")";
            for (auto & v : {a, b})
                if (v.part >= spec.parts() || v.cls >= classes || v.copy >= spec.weights[v.part][v.cls])
                    throw FamilySpecViolation(Kind::IllegalRemoval, name + " names a vertex that does not exist");
            if (a.part == b.part || a.cls == b.cls)
                throw FamilySpecViolation(Kind::IllegalRemoval, name + " is not an edge of the unremoved graph");
            if (a.part >= permuted || b.part >= permuted)
                throw FamilySpecViolation(Kind::IllegalRemoval, name + " touches a part beyond the first (k-1)! = "
                        + to_string(permuted));
            if (! seen.insert(std::minmax(a, b)).second)
                throw FamilySpecViolation(Kind::IllegalRemoval, name + " is listed twice");
        }
    }

    auto family_local_index(const FamilySpec & spec, const FamilySpec::Vertex & v) -> size_t
    {
        auto & w = spec.weights.at(v.part);
        return std::accumulate(w.begin(), w.begin() + v.cls, size_t{0}) + v.copy;
    }

    auto build_family_member(const FamilySpec & spec) -> MultipartiteGraph
    {
        validate(spec);
        auto classes = spec.k - 1;
        vector<size_t> sizes;
        // class of each local index, per part
        vector<vector<size_t>> class_of(spec.parts());
        for (size_t i = 0 ; i < spec.parts() ; ++i) {
            for (size_t s = 0 ; s < classes ; ++s)
                class_of[i].insert(class_of[i].end(), spec.weights[i][s], s);
            sizes.push_back(class_of[i].size());
        }

        GraphBuilder builder(sizes);
        for (size_t i = 0 ; i < spec.parts() ; ++i)
            for (size_t j = i + 1 ; j < spec.parts() ; ++j)
                for (size_t a = 0 ; a < sizes[i] ; ++a)
                    for (size_t b = 0 ; b < sizes[j] ; ++b)
                        if (class_of[i][a] != class_of[j][b])
                            builder.add_edge(VertexId{i, a}, VertexId{j, b});

        for (auto & [a, b] : spec.removals)
            builder.remove_edge(VertexId{a.part, family_local_index(spec, a)}, VertexId{b.part, family_local_index(spec, b)});
        return builder.build();
    }

    auto satisfies_family_density(const MultipartiteGraph & g, size_t k) -> bool
    {
        if (k < 3)
            throw InvalidArgument("k must be at least 3");
        if (g.part_count() < 2)
            return true;
        return min_pairwise_density(g).value() >= make_rational(static_cast<std::int64_t>(k) - 2, static_cast<std::int64_t>(k) - 1);
    }

    auto complete_multipartite(std::span<const size_t> sizes, size_t matching_size) -> MultipartiteGraph
    {
        if (sizes.empty())
            throw InvalidArgument("complete_multipartite needs at least one class");
        for (size_t c = 0 ; c < sizes.size() ; ++c)
            if (sizes[c] == 0)
                throw InvalidArgument("class " + to_string(c) + " is empty");
        if (sizes[0] < 2 * matching_size)
            throw InvalidArgument("first class of size " + to_string(sizes[0]) + " cannot hold a matching of size "
                    + to_string(matching_size));

        // class-1 vertex 2m is matched with 2m+1 for m < matching_size
        vector<size_t> part_sizes;
        vector<std::pair<size_t, size_t>> first_class; // (part, index) per class-1 vertex
        if (matching_size == 0) {
            part_sizes.push_back(sizes[0]);
            for (size_t a = 0 ; a < sizes[0] ; ++a)
                first_class.emplace_back(0, a);
        }
        else {
            auto left = sizes[0] - matching_size;
            part_sizes.push_back(left);
            part_sizes.push_back(matching_size);
            size_t next_left = 0;
            for (size_t a = 0 ; a < sizes[0] ; ++a) {
                if (a < 2 * matching_size && a % 2 == 1)
                    first_class.emplace_back(1, a / 2);
                else
                    first_class.emplace_back(0, next_left++);
            }
        }
        auto first_parts = part_sizes.size();
        for (size_t c = 1 ; c < sizes.size() ; ++c)
            part_sizes.push_back(sizes[c]);

        GraphBuilder builder(part_sizes);
        // class 1 against the others
        for (auto & [p, a] : first_class)
            for (size_t c = 1 ; c < sizes.size() ; ++c)
                for (size_t b = 0 ; b < sizes[c] ; ++b)
                    builder.add_edge(VertexId{p, a}, VertexId{first_parts + c - 1, b});
        for (size_t c = 1 ; c < sizes.size() ; ++c)
            for (size_t d = c + 1 ; d < sizes.size() ; ++d)
                for (size_t a = 0 ; a < sizes[c] ; ++a)
                    for (size_t b = 0 ; b < sizes[d] ; ++b)
                        builder.add_edge(VertexId{first_parts + c - 1, a}, VertexId{first_parts + d - 1, b});
        for (size_t m = 0 ; m < matching_size ; ++m) {
            auto & [pa, a] = first_class[2 * m];
            auto & [pb, b] = first_class[2 * m + 1];
            builder.add_edge(VertexId{pa, a}, VertexId{pb, b});
        }
        return builder.build();
    }

    auto k12_extremal(size_t parts) -> MultipartiteGraph
    {
        if (parts < 3)
            throw InvalidArgument("k12_extremal needs at least 3 parts, got " + to_string(parts));
        GraphBuilder builder(vector<size_t>(parts, parts - 1));
        for (size_t i = 0 ; i < parts ; ++i)
            for (size_t j = i + 1 ; j < parts ; ++j)
                builder.add_edge(VertexId{i, slot(i, j)}, VertexId{j, slot(j, i)});
        return builder.build();
    }

    auto two_clique_union(size_t parts, size_t n) -> MultipartiteGraph
    {
        if (parts < 2)
            throw InvalidArgument("two_clique_union needs at least 2 parts, got " + to_string(parts));
        auto q = n / (2 * parts);
        if (q < 2)
            throw InvalidArgument("two_clique_union needs floor(n / 2l) >= 2; n = " + to_string(n) + " is too small for l = "
                    + to_string(parts));
        auto small = q - 1;
        auto large = (n + 2 * parts - 1) / (2 * parts) + 1;
        GraphBuilder builder(vector<size_t>(parts, small + large));
        for (size_t i = 0 ; i < parts ; ++i)
            for (size_t j = i + 1 ; j < parts ; ++j) {
                for (size_t a = 0 ; a < small ; ++a)
                    for (size_t b = 0 ; b < small ; ++b)
                        builder.add_edge(VertexId{i, a}, VertexId{j, b});
                for (size_t a = small ; a < small + large ; ++a)
                    for (size_t b = small ; b < small + large ; ++b)
                        builder.add_edge(VertexId{i, a}, VertexId{j, b});
            }
        return builder.build();
    }
}
