#include <multituran/deadline.hpp>
#include <multituran/errors.hpp>
#include <multituran/random.hpp>
#include <multituran/threshold.hpp>

#include <algorithm>

using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace multituran
{
    auto critical_density_recurrence(size_t k_max, double tol, size_t iterations) -> vector<double>
    {
        if (k_max < 2)
            throw InvalidArgument("k_max must be at least 2, got " + to_string(k_max));
        if (! (tol > 0))
            throw InvalidArgument("tolerance must be positive");
        vector<double> d{0.0};
        for (size_t k = 3 ; k <= k_max ; ++k) {
            long double c = 1.0L - d.back();
            // f(0) = -1 < 0 and f(1) = c > 0; f is increasing on [0,1]
            long double lo = 0, hi = 1;
            for (size_t i = 0 ; i < iterations && hi - lo >= tol ; ++i) {
                auto mid = (lo + hi) / 2;
                if (mid * mid * c + mid - 1 < 0)
                    lo = mid;
                else
                    hi = mid;
            }
            d.push_back(static_cast<double>((lo + hi) / 2));
        }
        return d;
    }

    auto certify_witness(const ThresholdWitness & w) -> Density
    {
        if (w.pattern.order() > count_pattern_limit)
            throw ResourceLimitExceeded("certify_witness handles patterns of at most " + to_string(count_pattern_limit) + " vertices");
        if (w.host.part_count() != w.parts)
            throw WitnessRejected("host has " + to_string(w.host.part_count()) + " parts, witness claims " + to_string(w.parts));
        auto actual = min_pairwise_density(w.host);
        if (actual != w.delta)
            throw WitnessRejected("minimum density is " + actual.to_string() + ", witness claims " + w.delta.to_string());
        if (auto copy = find_copy(w.host, w.pattern, w.mode))
            throw WitnessRejected("host contains the pattern", std::move(copy));
        return w.delta;
    }

    namespace
    {
        struct State
        {
            MultipartiteGraph graph;
            bool free = false;
            size_t min_cross = 0; // all parts have equal size, so this orders densities
        };

        auto evaluate(MultipartiteGraph g, const SmallGraph & h, CopyMode mode) -> State
        {
            size_t low = SIZE_MAX;
            for (size_t i = 0 ; i < g.part_count() ; ++i)
                for (size_t j = i + 1 ; j < g.part_count() ; ++j)
                    low = std::min(low, g.cross_edge_count(i, j));
            bool free = ! find_copy(g, h, mode);
            return State{std::move(g), free, low};
        }

        auto compare(const State & a, const State & b) -> int
        {
            if (a.free != b.free)
                return a.free ? 1 : -1;
            if (a.min_cross != b.min_cross)
                return a.min_cross > b.min_cross ? 1 : -1;
            return 0;
        }
    }

    auto search_witness(const SmallGraph & h, const SearchOptions & options) -> SearchOutcome
    {
        if (options.parts < 2)
            throw InvalidArgument("search needs at least 2 parts");
        if (options.part_size < 1 || options.part_size > 8)
            throw InvalidArgument("part size must lie in [1, 8], got " + to_string(options.part_size));
        if (h.order() > 5)
            throw ResourceLimitExceeded("search_witness handles patterns of at most 5 vertices");
        vector<size_t> sizes(options.parts, options.part_size);
        auto start = options.start.value_or(MultipartiteGraph(sizes, std::span<const Edge>{}));
        if (start.part_sizes() != sizes)
            throw InvalidArgument("start state does not have " + to_string(options.parts) + " parts of size "
                    + to_string(options.part_size));

        // every cross pair, in global-id order
        vector<std::pair<size_t, size_t>> pairs;
        for (size_t u = 0 ; u < start.vertex_count() ; ++u)
            for (auto v = u + 1 ; v < start.vertex_count() ; ++v)
                if (start.part_of(u) != start.part_of(v))
                    pairs.emplace_back(u, v);

        Rng rng(options.seed);
        auto current = evaluate(start, h, options.mode);
        std::optional<State> best;
        if (current.free)
            best = current;
        uint64_t done = 0;
        for ( ; done < options.budget ; ++done) {
            check_deadline();
            auto [u, v] = pairs[rng.below(pairs.size())];
            auto next = evaluate(with_edge_toggled(current.graph, u, v), h, options.mode);
            auto c = compare(next, current);
            if (c > 0 || (c == 0 && rng.coin()))
                current = std::move(next);
            if (current.free && (! best || compare(current, *best) > 0))
                best = current;
        }

        SearchOutcome outcome{ThresholdWitness{h, options.parts, MultipartiteGraph(sizes, std::span<const Edge>{}), Density(0), options.mode}, false, done};
        if (best) {
            outcome.found = true;
            outcome.witness.host = best->graph;
            outcome.witness.delta = min_pairwise_density(best->graph);
        }
        return outcome;
    }
}
