#include "cli.hpp"

#include <multituran/colouring.hpp>
#include <multituran/corpus.hpp>
#include <multituran/deadline.hpp>
#include <multituran/embedding.hpp>
#include <multituran/errors.hpp>
#include <multituran/generators.hpp>
#include <multituran/graph_io.hpp>
#include <multituran/structure.hpp>
#include <multituran/subgraph.hpp>
#include <multituran/threshold.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

using std::size_t;
using std::string;

using std::vector;

namespace multituran::cli
{
    auto fnv1a_hex(std::string_view bytes) -> string
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        std::ostringstream s;
        s << std::hex << std::setw(16) << std::setfill('0') << h;
        return s.str();
    }

    namespace
    {
        using json = nlohmann::ordered_json;

        struct Output
        {
            json results = json::object();
            int code = exit_ok;
            /// Rows for --format csv, header first.
            std::optional<vector<vector<string>>> table;
            /// Text for --format dot.
            std::optional<string> dot;
            /// Written verbatim instead of a report (graph generation).
            std::optional<string> raw;
        };

        struct Context
        {
            string command;
            string format;
            unsigned threads = 1;
            std::uint64_t seed = 0;
            json inputs = json::object();
        };

        auto read_input(Context & ctx, const string & role, const string & path) -> string
        {
            auto text = read_file(path);
            ctx.inputs[role] = json{{"path", path}, {"fnv1a64", fnv1a_hex(text)}};
            return text;
        }

        // Compiler-style location: path:line:column: message.
        auto with_path(const string & path, const ParseError & e) -> InvalidArgument
        {
            auto message = string(e.what());
            auto colon = message.find(": ");
            return InvalidArgument(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": "
                    + (colon == string::npos ? message : message.substr(colon + 2)));
        }

        auto load_graph_input(Context & ctx, const string & role, const string & path) -> MultipartiteGraph
        {
            auto text = read_input(ctx, role, path);
            try {
                auto first = text.find_first_not_of(" \t\r\n");
                if (first != string::npos && text.compare(first, 5, "graph") == 0)
                    return load_dot(text);
                return load_graph(text);
            }
            catch (const ParseError & e) {
                throw with_path(path, e);
            }
        }

        auto load_json_input(Context & ctx, const string & role, const string & path) -> nlohmann::json
        {
            auto text = read_input(ctx, role, path);
            try {
                return nlohmann::json::parse(text);
            }
            catch (const nlohmann::json::parse_error & e) {
                auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
                throw with_path(path, ParseError("malformed JSON", line, column));
            }
        }

        auto vertex_json(const MultipartiteGraph & g, size_t v) -> json
        {
            auto id = g.vertex(v);
            return json::array({id.part, id.index});
        }

        auto vertices_json(const MultipartiteGraph & g, const vector<size_t> & vs) -> json
        {
            auto a = json::array();
            for (auto v : vs)
                a.push_back(vertex_json(g, v));
            return a;
        }

        // A vertex in a parameter file: a global id or a [part, index] pair.
        auto parse_vertex(const MultipartiteGraph & g, const nlohmann::json & j) -> size_t
        {
            if (j.is_number_unsigned()) {
                auto v = j.get<size_t>();
                if (v >= g.vertex_count())
                    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
                return v;
            }
            if (j.is_array() && j.size() == 2 && j[0].is_number_unsigned() && j[1].is_number_unsigned()) {
                VertexId id{j[0].get<size_t>(), j[1].get<size_t>()};
                if (id.part >= g.part_count() || id.index >= g.part_size(id.part))
                    throw InvalidArgument("vertex " + multituran::to_string(id) + " out of range");
                return g.global(id);
            }
            throw InvalidArgument("expected a vertex id or [part, index], got " + j.dump());
        }

        auto require(const nlohmann::json & j, const string & key) -> const nlohmann::json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InvalidArgument("missing field '" + key + "'");
            return j.at(key);
        }

        auto parse_vertex_set(const MultipartiteGraph & g, const nlohmann::json & j) -> Bitset
        {
            if (! j.is_array())
                throw InvalidArgument("expected a list of vertices");
            Bitset b(g.vertex_count());
            for (auto & x : j)
                b.set(parse_vertex(g, x));
            return b;
        }

        auto parse_vertex_sets(const MultipartiteGraph & g, const nlohmann::json & j) -> vector<Bitset>
        {
            if (! j.is_array())
                throw InvalidArgument("expected a list of vertex lists");
            vector<Bitset> sets;
            for (auto & x : j)
                sets.push_back(parse_vertex_set(g, x));
            return sets;
        }

        auto parse_rational_field(const nlohmann::json & j) -> Rational
        {
            if (j.is_string())
                return parse_rational(j.get<string>());
            if (j.is_number_integer())
                return Rational(j.get<long long>());
            throw InvalidArgument("expected a rational as \"p/q\", got " + j.dump());
        }

        auto parse_size(const nlohmann::json & j, const string & key) -> size_t
        {
            auto & v = require(j, key);
            if (! v.is_number_unsigned())
                throw InvalidArgument("field '" + key + "' must be a non-negative integer");
            return v.get<size_t>();
        }

        // Per-vertex class labels; null marks a vertex outside every class.
        auto parse_labels(const MultipartiteGraph & g, const nlohmann::json & j, size_t classes) -> vector<size_t>
        {
            if (! j.is_array() || j.size() != g.vertex_count())
                throw InvalidArgument("expected one class label per vertex (" + std::to_string(g.vertex_count()) + ")");
            vector<size_t> labels;
            for (auto & x : j) {
                if (x.is_null())
                    labels.push_back(ClassFamily::no_class);
                else if (x.is_number_unsigned() && x.get<size_t>() < classes)
                    labels.push_back(x.get<size_t>());
                else
                    throw InvalidArgument("class label must be null or an integer below " + std::to_string(classes) + ", got " + x.dump());
            }
            return labels;
        }

        auto condition_json(const MultipartiteGraph & g, const ConditionResult & c) -> json
        {
            json j{{"pass", c.pass}};
            if (! c.pass) {
                j["witness"] = vertices_json(g, c.witness);
                j["message"] = c.message;
            }
            return j;
        }

        auto load_structure(Context & ctx, const MultipartiteGraph & g, const string & path, const std::optional<string> & eta)
            -> InfraStructure
        {
            auto doc = load_json_input(ctx, "structure", path);
            auto k = parse_size(doc, "k");
            if (k < 3)
                throw InvalidArgument("k must be at least 3");
            auto labels = parse_labels(g, require(doc, "Y"), k - 1);
            for (size_t v = 0 ; v < labels.size() ; ++v)
                if (labels[v] == ClassFamily::no_class)
                    throw InvalidArgument("vertex " + std::to_string(v) + " has no Y class");
            vector<size_t> d_labels(g.vertex_count(), ClassFamily::no_class);
            if (doc.contains("D"))
                for (auto & x : doc.at("D")) {
                    auto v = parse_vertex(g, x);
                    d_labels[v] = labels[v];
                }
            Rational eta_value = eta ? parse_rational(*eta) : doc.contains("eta") ? parse_rational_field(doc.at("eta")) : Rational(0);
            return InfraStructure{g, k, eta_value, ClassFamily::from_labels(g, k - 1, labels), ClassFamily::from_labels(g, k - 1, d_labels)};
        }

        auto family_json(const MultipartiteGraph & g, const ClassFamily & f) -> json
        {
            auto labels = json::array();
            for (size_t v = 0 ; v < g.vertex_count() ; ++v) {
                json label = nullptr;
                auto i = g.part_of(v);
                for (size_t c = 0 ; c < f.classes() ; ++c)
                    if (f.at(i, c).test(v))
                        label = c;
                labels.push_back(label);
            }
            return labels;
        }

        auto small_pattern(const MultipartiteGraph & g) -> SmallGraph
        {
            return to_small_graph(g);
        }

        auto mode_of(bool transversal) -> CopyMode
        {
            return transversal ? CopyMode::transversal : CopyMode::any;
        }

        auto format_double(double x) -> string
        {
            std::ostringstream s;
            s << std::setprecision(16) << x;
            return s.str();
        }

        auto graph_object(const MultipartiteGraph & g) -> json
        {
            return json::parse(save_graph(g));
        }

        struct Options
        {
            // positional
            string kind, graph, second, mode;
            // generators
            size_t chi = 3, parts = 3, k = 3, weight = 1, r = 2, n = 16, matching = 0;
            vector<size_t> sizes;
            string name, output;
            // searches
            bool transversal = false;
            std::optional<size_t> max_length;
            std::optional<string> eta, eps, delta;
            std::optional<vector<size_t>> scope;
            size_t kmax = 8, iterations = 200, part_size = 3;
            double tol = 1e-15;
            std::uint64_t budget = 10000;
            string pattern, witness, start, dir;
        };

        auto do_gen(Context &, const Options & o) -> Output
        {
            MultipartiteGraph g = [&] {
                if (o.kind == "bondy")
                    return bondy_prototype(o.chi, o.parts);
                if (o.kind == "family")
                    return build_family_member(FamilySpec::uniform(o.k, o.parts, o.weight));
                if (o.kind == "lower-bound")
                    return lower_bound_graph(o.r, o.parts);
                if (o.kind == "k12")
                    return k12_extremal(o.parts);
                if (o.kind == "two-clique")
                    return two_clique_union(o.parts, o.n);
                if (o.kind == "multipartite")
                    return complete_multipartite(o.sizes, o.matching);
                if (o.kind == "fixture")
                    return fixture(o.name).graph;
                throw InvalidArgument("unknown generator '" + o.kind
                        + "'; expected bondy, family, lower-bound, k12, two-clique, multipartite or fixture");
            }();
            Output out;
            out.dot = save_dot(g);
            out.raw = save_graph(g);
            return out;
        }

        auto do_acc(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto h = small_pattern(g);
            auto chi = chromatic_number(h);
            auto witness = almost_colour_critical_witness(h);
            Output out;
            out.results["vertices"] = h.order();
            out.results["chi"] = chi;
            out.results["classes"] = acc_class_count(chi);
            out.results["acc"] = witness.has_value();
            if (witness)
                out.results["witness"] = witness->colour;
            else
                out.code = exit_negative;
            return out;
        }

        auto do_chi(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            Output out;
            out.results["vertices"] = g.vertex_count();
            out.results["chi"] = chromatic_number(g);
            return out;
        }

        auto do_find(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "host", o.graph);
            auto h = small_pattern(load_graph_input(ctx, "pattern", o.second));
            auto copy = find_copy(g, h, mode_of(o.transversal));
            Output out;
            out.results["mode"] = o.transversal ? "transversal" : "any";
            out.results["found"] = copy.has_value();
            if (copy)
                out.results["embedding"] = vertices_json(g, copy->image);
            else
                out.code = exit_negative;
            return out;
        }

        auto do_count(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "host", o.graph);
            auto h = small_pattern(load_graph_input(ctx, "pattern", o.second));
            auto embeddings = count_embeddings(g, h, mode_of(o.transversal), ctx.threads);
            auto aut = automorphism_count(h);
            Output out;
            out.results["mode"] = o.transversal ? "transversal" : "any";
            out.results["embeddings"] = embeddings;
            out.results["automorphisms"] = aut;
            out.results["copies"] = embeddings / aut;
            return out;
        }

        auto do_book(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "host", o.graph);
            auto book = max_book(g, o.r);
            Output out;
            out.results["r"] = o.r;
            out.results["edge"] = book.edge ? json::array({vertex_json(g, book.edge->first), vertex_json(g, book.edge->second)}) : json();
            out.results["count"] = book.count;
            return out;
        }

        auto do_cycles(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "host", o.graph);
            auto lengths = cycle_spectrum(g, o.max_length.value_or(g.vertex_count()));
            Output out;
            out.results["lengths"] = lengths;
            out.results["longest"] = lengths.empty() ? json() : json(lengths.back());
            out.table = vector<vector<string>>{{"length"}};
            for (auto l : lengths)
                out.table->push_back({std::to_string(l)});
            return out;
        }

        auto do_verify_infra(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto s = load_structure(ctx, g, o.second, o.eta);
            auto report = verify_infracolourable(s);
            Output out;
            out.results["k"] = s.k;
            out.results["eta"] = multituran::to_string(s.eta);
            out.results["partition"] = condition_json(g, report.partition);
            out.results["independence"] = condition_json(g, report.independence);
            out.results["degrees"] = condition_json(g, report.degrees);
            out.results["ok"] = report.ok();
            if (! report.ok())
                out.code = exit_negative;
            return out;
        }

        auto do_edge_bound(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto s = load_structure(ctx, g, o.second, o.eta);
            auto bound = infra_edge_bound(s);
            Output out;
            out.results["lhs"] = bound.lhs;
            out.results["rhs"] = multituran::to_string(bound.rhs);
            out.results["holds"] = bound.holds;
            out.results["equality"] = bound.equality;
            if (bound.equality) {
                out.results["i0"] = bound.i0 ? json(*bound.i0) : json();
                if (bound.i0)
                    out.results["reconstructed"] = *bound.reconstructed;
                else
                    out.results["violated_clause"] = bound.violated_clause;
            }
            if (! bound.holds || (bound.equality && ! bound.i0))
                out.code = exit_negative;
            return out;
        }

        auto do_outliers(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto doc = load_json_input(ctx, "families", o.second);
            if (! o.eps)
                throw InvalidArgument("--eps is required");
            auto labels = parse_labels(g, require(doc, "X"), o.k - 1);
            auto x = ClassFamily::from_labels(g, o.k - 1, labels);
            vector<Bitset> t(g.part_count(), Bitset(g.vertex_count()));
            for (size_t v = 0 ; v < labels.size() ; ++v)
                if (labels[v] == ClassFamily::no_class)
                    t[g.part_of(v)].set(v);
            auto report = balanced_outliers(g, x, t, parse_rational(*o.eps), o.k);
            Output out;
            out.results["hypothesis_ok"] = report.hypothesis_ok;
            if (! report.hypothesis_failure.empty())
                out.results["hypothesis_failure"] = report.hypothesis_failure;
            if (report.sparse_pair)
                out.results["sparse_pair"] = json::array({report.sparse_pair->first, report.sparse_pair->second});
            out.results["outliers"] = report.outliers;
            out.results["at_most_one"] = report.at_most_one;
            out.results["I0"] = report.I0 ? json(*report.I0) : json();
            out.results["conclusion_ok"] = report.conclusion_ok ? json(*report.conclusion_ok) : json();
            if (report.hypothesis_ok && (! report.at_most_one || ! report.conclusion_ok.value_or(false)))
                out.code = exit_negative;
            return out;
        }

        auto do_member(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto member = family_membership(g, o.k);
            Output out;
            out.results["k"] = o.k;
            out.results["member"] = member;
            out.results["min_density"] = min_pairwise_density(g).to_string();
            if (! member)
                out.code = exit_negative;
            return out;
        }

        auto do_partition(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto doc = load_json_input(ctx, "families", o.second);
            auto x = ClassFamily::from_labels(g, o.k - 1, parse_labels(g, require(doc, "X"), o.k - 1));
            vector<size_t> scope;
            if (o.scope)
                scope = *o.scope;
            else
                for (size_t i = 0 ; i < g.part_count() ; ++i)
                    scope.push_back(i);
            auto y = min_degree_partition(g, x, scope);
            Output out;
            out.results["Y"] = family_json(g, y);
            return out;
        }

        auto optional_surrogate(const nlohmann::json & p) -> std::optional<Rational>
        {
            if (p.contains("log_surrogate"))
                return parse_rational_field(p.at("log_surrogate"));
            return std::nullopt;
        }

        auto do_embed(Context & ctx, const Options & o) -> Output
        {
            auto g = load_graph_input(ctx, "graph", o.graph);
            auto p = load_json_input(ctx, "parameters", o.second);
            Output out;
            out.results["mode"] = o.mode;
            if (o.mode == "extend") {
                auto q = parse_size(p, "q");
                auto r = parse_size(p, "r");
                auto labels = parse_labels(g, require(p, "classes"), r);
                // blocks are the host parts restricted to each class
                SubdividedClasses w;
                w.blocks.assign(r, vector<Bitset>(g.part_count(), Bitset(g.vertex_count())));
                for (size_t v = 0 ; v < labels.size() ; ++v)
                    if (labels[v] != ClassFamily::no_class)
                        w.blocks[labels[v]][g.part_of(v)].set(v);
                GoodEmbedding f;
                f.images.assign(r, {});
                if (p.contains("images")) {
                    auto & images = p.at("images");
                    if (! images.is_array() || images.size() != r)
                        throw InvalidArgument("'images' needs one list per class");
                    for (size_t s = 0 ; s < r ; ++s)
                        for (auto & x : images[s])
                            f.images[s].push_back(parse_vertex(g, x));
                }
                auto result = extend_good_embedding(g, w, f, q);
                auto images = json::array();
                for (auto & row : result.images)
                    images.push_back(vertices_json(g, row));
                out.results["images"] = images;
            }
            else if (o.mode == "select") {
                auto u = parse_vertex_set(g, require(p, "U"));
                auto w = parse_vertex_sets(g, require(p, "W"));
                auto result = common_neighbour_select(g, u, w, parse_size(p, "q"), parse_rational_field(require(p, "d")));
                out.results["found"] = result.A.has_value();
                out.results["A"] = result.A ? vertices_json(g, *result.A) : json();
                if (! result.A)
                    out.results["best"] = vertices_json(g, result.best);
                out.results["common"] = result.common;
                out.results["rho"] = format_double(result.rho);
                out.results["subset_side"] = result.counts.subset_side.str();
                out.results["tuple_side"] = result.counts.tuple_side.str();
                out.results["jensen_bound"] = multituran::to_string(result.counts.jensen_bound);
                out.results["counting_holds"] = result.counts.holds();
                if (! result.A)
                    out.code = exit_negative;
            }
            else if (o.mode == "count-kr") {
                auto w = parse_vertex_sets(g, require(p, "W"));
                auto r = w.size();
                auto h = w.empty() ? 0 : w.front().count();
                auto result = count_kr_lower(g, w, r, h);
                out.results["r"] = r;
                out.results["h"] = h;
                out.results["count"] = result.count;
                out.results["bound"] = multituran::to_string(result.bound);
                out.results["holds"] = result.holds;
                if (! result.holds)
                    out.code = exit_negative;
            }
            else if (o.mode == "bipartite") {
                auto left = parse_vertex_set(g, require(p, "left")).to_indices();
                auto right = parse_vertex_set(g, require(p, "right")).to_indices();
                BipartiteGraph b;
                b.right = right.size();
                for (auto x : left) {
                    Bitset row(right.size());
                    for (size_t y = 0 ; y < right.size() ; ++y)
                        if (g.adjacent(x, right[y]))
                            row.set(y);
                    b.rows.push_back(std::move(row));
                }
                auto w = dense_bipartite_complete(b, parse_rational_field(require(p, "alpha")), parse_size(p, "r"), optional_surrogate(p));
                out.results["a"] = w.a;
                out.results["b"] = w.b;
                out.results["degenerate"] = w.degenerate;
                out.results["found"] = w.found;
                vector<size_t> l, rr;
                for (auto x : w.left)
                    l.push_back(left[x]);
                for (auto y : w.right)
                    rr.push_back(right[y]);
                out.results["left"] = vertices_json(g, l);
                out.results["right"] = vertices_json(g, rr);
                out.results["best_common"] = w.best_common;
                if (! w.found && ! w.degenerate)
                    out.code = exit_negative;
            }
            else if (o.mode == "log-complete") {
                auto w = parse_vertex_sets(g, require(p, "W"));
                auto s = p.contains("s") ? parse_size(p, "s") : w.size() - 1;
                auto result = embed_log_complete(g, w, parse_rational_field(require(p, "alpha")), w.size(), s, optional_surrogate(p));
                out.results["a"] = result.a;
                out.results["b"] = result.b;
                out.results["degenerate"] = result.degenerate;
                out.results["found"] = result.found;
                auto classes = json::array();
                for (auto & c : result.classes)
                    classes.push_back(vertices_json(g, c));
                out.results["classes"] = classes;
                if (! result.found && ! result.degenerate)
                    out.code = exit_negative;
            }
            else
                throw InvalidArgument("unknown embed mode '" + o.mode + "'; expected extend, select, count-kr, bipartite or log-complete");
            if (out.results.contains("degenerate") && out.results["degenerate"].get<bool>())
                out.results["warning"] = "target sizes floor to zero; the witness is trivial";
            return out;
        }

        auto do_recurrence(Context &, const Options & o) -> Output
        {
            auto d = critical_density_recurrence(o.kmax, o.tol, o.iterations);
            Output out;
            out.table = vector<vector<string>>{{"k", "d_k"}};
            auto values = json::array();
            for (size_t i = 0 ; i < d.size() ; ++i) {
                out.table->push_back({std::to_string(i + 2), format_double(d[i])});
                values.push_back(json{{"k", i + 2}, {"d_k", format_double(d[i])}});
            }
            out.results["tol"] = format_double(o.tol);
            out.results["values"] = values;
            return out;
        }

        auto do_certify(Context & ctx, const Options & o) -> Output
        {
            auto h = small_pattern(load_graph_input(ctx, "pattern", o.pattern));
            auto g = load_graph_input(ctx, "witness", o.witness);
            auto delta = o.delta ? Density(parse_rational(*o.delta)) : min_pairwise_density(g);
            ThresholdWitness w{h, g.part_count(), g, delta, mode_of(o.transversal)};
            Output out;
            out.results["mode"] = o.transversal ? "transversal" : "any";
            out.results["parts"] = g.part_count();
            try {
                out.results["delta"] = certify_witness(w).to_string();
                out.results["certified"] = true;
            }
            catch (const WitnessRejected & e) {
                out.results["certified"] = false;
                out.results["reason"] = e.what();
                if (e.copy())
                    out.results["copy"] = vertices_json(g, e.copy()->image);
                out.code = exit_negative;
            }
            return out;
        }

        auto do_search(Context & ctx, const Options & o) -> Output
        {
            auto h = small_pattern(load_graph_input(ctx, "pattern", o.pattern));
            SearchOptions options;
            options.parts = o.parts;
            options.part_size = o.part_size;
            options.budget = o.budget;
            options.seed = ctx.seed;
            options.mode = mode_of(o.transversal);
            if (! o.start.empty())
                options.start = load_graph_input(ctx, "start", o.start);
            auto result = search_witness(h, options);
            Output out;
            out.results["seed"] = ctx.seed;
            out.results["budget"] = o.budget;
            out.results["found"] = result.found;
            out.results["delta"] = result.witness.delta.to_string();
            out.results["graph"] = graph_object(result.witness.host);
            out.dot = save_dot(result.witness.host);
            if (! o.output.empty())
                write_file(o.output, save_graph(result.witness.host));
            return out;
        }

        auto do_corpus(Context &, const Options & o) -> Output
        {
            Output out;
            auto list = json::array();
            out.table = vector<vector<string>>{{"name", "vertices", "edges", "acc", "chi", "min_density"}};
            for (auto & f : corpus()) {
                if (! o.name.empty() && f.name != o.name)
                    continue;
                json j{{"name", f.name}, {"description", f.description}, {"pattern", f.pattern},
                    {"vertices", f.graph.vertex_count()}, {"edges", f.graph.edge_count()}};
                j["acc"] = f.acc ? json(*f.acc) : json();
                j["chi"] = f.chi ? json(*f.chi) : json();
                j["min_density"] = f.min_density ? json(f.min_density->to_string()) : json();
                j["max_cycle"] = f.max_cycle ? json(*f.max_cycle) : json();
                j["free_of"] = f.free_of ? json(*f.free_of) : json();
                list.push_back(j);
                out.table->push_back({f.name, std::to_string(f.graph.vertex_count()), std::to_string(f.graph.edge_count()),
                        f.acc ? (*f.acc ? "true" : "false") : "", f.chi ? std::to_string(*f.chi) : "",
                        f.min_density ? f.min_density->to_string() : ""});
                if (! o.dir.empty()) {
                    std::filesystem::create_directories(o.dir);
                    write_file((std::filesystem::path(o.dir) / (f.name + ".json")).string(), save_graph(f.graph));
                }
            }
            if (! o.name.empty() && list.empty())
                throw InvalidArgument("unknown fixture '" + o.name + "'");
            out.results["fixtures"] = list;
            return out;
        }

        auto emit(const Context & ctx, const Output & o, std::ostream & out) -> int
        {
            if (ctx.format == "dot") {
                if (! o.dot)
                    throw InvalidArgument("--format dot is not available for '" + ctx.command + "'");
                out << *o.dot;
                return o.code;
            }
            if (ctx.format == "csv") {
                if (o.table) {
                    for (auto & row : *o.table) {
                        for (size_t i = 0 ; i < row.size() ; ++i)
                            out << (i ? "," : "") << row[i];
                        out << '\n';
                    }
                    return o.code;
                }
                if (o.raw)
                    throw InvalidArgument("--format csv is not available for '" + ctx.command + "'");
                out << "key,value\n";
                for (auto & [key, value] : o.results.items())
                    if (value.is_primitive())
                        out << key << ',' << (value.is_string() ? value.get<string>() : value.dump()) << '\n';
                return o.code;
            }
            if (o.raw) {
                out << *o.raw;
                return o.code;
            }
            json report;
            report["command"] = ctx.command;
            report["inputs"] = ctx.inputs;
            report["results"] = o.results;
            report["exit_code"] = o.code;
            out << report.dump(2) << '\n';
            return o.code;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Workbench for multipartite Turan problems", "multituran"};
        app.require_subcommand(1);
        app.fallthrough();

        Context ctx;
        Options o;
        std::optional<double> limit_seconds;
        std::optional<string> format;
        app.add_option("--threads", ctx.threads, "Worker threads for counting")->check(CLI::Range(1u, 256u));
        app.add_option("--seed", ctx.seed, "Seed for randomised commands");
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
        app.add_option("--limit-seconds", limit_seconds, "Abort with exit code 4 after this many seconds")->check(CLI::PositiveNumber);

        auto gen = app.add_subcommand("gen", "Generate a graph");
        gen->add_option("kind", o.kind, "bondy, family, lower-bound, k12, two-clique, multipartite or fixture")->required();
        gen->add_option("--chi", o.chi);
        gen->add_option("--l", o.parts);
        gen->add_option("--k", o.k);
        gen->add_option("--weight", o.weight);
        gen->add_option("--r", o.r);
        gen->add_option("--n", o.n);
        gen->add_option("--sizes", o.sizes)->delimiter(',');
        gen->add_option("--matching", o.matching);
        gen->add_option("--name", o.name);
        gen->add_option("-o,--output", o.output, "Write the graph here instead of stdout");

        auto graph_arg = [&](CLI::App * sub, const char * what) { sub->add_option("graph", o.graph, what)->required(); };
        auto acc = app.add_subcommand("acc", "Decide almost colour-criticality");
        graph_arg(acc, "Pattern graph file");
        auto chi = app.add_subcommand("chi", "Exact chromatic number");
        graph_arg(chi, "Graph file");
        auto find = app.add_subcommand("find", "Find one copy of a pattern");
        find->add_option("HOST", o.graph, "Host graph file");
        find->add_option("PATTERN", o.second, "Pattern graph file");
        find->add_option("--host", o.graph, "Host graph file");
        find->add_option("--pattern", o.second, "Pattern graph file");
        find->add_flag("--transversal", o.transversal);
        auto count = app.add_subcommand("count", "Count copies of a pattern");
        count->add_option("HOST", o.graph, "Host graph file");
        count->add_option("PATTERN", o.second, "Pattern graph file");
        count->add_option("--host", o.graph, "Host graph file");
        count->add_option("--pattern", o.second, "Pattern graph file");
        count->add_flag("--transversal", o.transversal);
        auto book = app.add_subcommand("book", "Edge in the most copies of K_r");
        graph_arg(book, "Host graph file");
        book->add_option("--r", o.r = 3);
        auto cycles = app.add_subcommand("cycles", "Cycle lengths present");
        graph_arg(cycles, "Host graph file");
        cycles->add_option("--max,--max-length", o.max_length);
        auto verify = app.add_subcommand("verify-infra", "Check an infracolourable structure");
        graph_arg(verify, "Base graph file");
        verify->add_option("structure", o.second, "Structure file")->required();
        verify->add_option("--eta", o.eta);
        auto bound = app.add_subcommand("edge-bound", "Edge bound and equality certificate for a structure");
        graph_arg(bound, "Base graph file");
        bound->add_option("structure", o.second, "Structure file")->required();
        bound->add_option("--eta", o.eta);
        auto outliers = app.add_subcommand("outliers", "Balanced outlier check");
        graph_arg(outliers, "Graph file");
        outliers->add_option("families", o.second, "Families file")->required();
        outliers->add_option("--eps", o.eps)->required();
        outliers->add_option("--k", o.k);
        auto member = app.add_subcommand("member", "Family membership test");
        graph_arg(member, "Graph file");
        member->add_option("--k", o.k);
        auto partition = app.add_subcommand("partition", "Minimum degree partition");
        graph_arg(partition, "Graph file");
        partition->add_option("families", o.second, "Families file")->required();
        partition->add_option("--k", o.k);
        partition->add_option("--scope", o.scope)->delimiter(',');
        auto embed = app.add_subcommand("embed", "Embedding lemmas");
        embed->add_option("mode", o.mode, "extend, select, count-kr, bipartite or log-complete")->required();
        graph_arg(embed, "Host graph file");
        embed->add_option("parameters", o.second, "Parameter file")->required();
        auto recurrence = app.add_subcommand("recurrence", "Critical density recurrence");
        recurrence->add_option("--kmax", o.kmax);
        recurrence->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
        recurrence->add_option("--iterations", o.iterations);
        auto certify = app.add_subcommand("certify", "Certify a lower-bound witness");
        certify->add_option("--pattern", o.pattern)->required();
        certify->add_option("--witness", o.witness)->required();
        certify->add_option("--delta", o.delta);
        certify->add_flag("--transversal", o.transversal);
        auto search = app.add_subcommand("search", "Hill-climb for a pattern-free witness");
        search->add_option("--pattern", o.pattern)->required();
        search->add_option("--l", o.parts);
        search->add_option("--part-size", o.part_size);
        search->add_option("--budget", o.budget);
        search->add_option("--start", o.start);
        search->add_option("-o,--output", o.output);
        search->add_flag("--transversal", o.transversal);
        auto corpus_cmd = app.add_subcommand("corpus", "List or write the fixtures");
        corpus_cmd->add_option("--name", o.name);
        corpus_cmd->add_option("--dir", o.dir);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        auto sub = app.get_subcommands().front();
        if ((sub == find || sub == count) && (o.graph.empty() || o.second.empty())) {
            err << "error: " << sub->get_name() << " needs a host and a pattern\n";
            return exit_usage;
        }
        ctx.command = sub->get_name();
        ctx.format = format.value_or(ctx.command == "recurrence" ? "csv" : "json");
        if (limit_seconds)
            set_deadline_after(*limit_seconds);
        struct ClearDeadline
        {
            ~ClearDeadline() { clear_deadline(); }
        } clear;

        try {
            Output result;
            auto & name = ctx.command;
            if (name == "gen") {
                result = do_gen(ctx, o);
                if (! o.output.empty()) {
                    write_file(o.output, ctx.format == "dot" ? *result.dot : *result.raw);
                    return exit_ok;
                }
            }
            else if (name == "acc")
                result = do_acc(ctx, o);
            else if (name == "chi")
                result = do_chi(ctx, o);
            else if (name == "find")
                result = do_find(ctx, o);
            else if (name == "count")
                result = do_count(ctx, o);
            else if (name == "book")
                result = do_book(ctx, o);
            else if (name == "cycles")
                result = do_cycles(ctx, o);
            else if (name == "verify-infra")
                result = do_verify_infra(ctx, o);
            else if (name == "edge-bound")
                result = do_edge_bound(ctx, o);
            else if (name == "outliers")
                result = do_outliers(ctx, o);
            else if (name == "member")
                result = do_member(ctx, o);
            else if (name == "partition")
                result = do_partition(ctx, o);
            else if (name == "embed")
                result = do_embed(ctx, o);
            else if (name == "recurrence")
                result = do_recurrence(ctx, o);
            else if (name == "certify")
                result = do_certify(ctx, o);
            else if (name == "search")
                result = do_search(ctx, o);
            else if (name == "corpus")
                result = do_corpus(ctx, o);
            return emit(ctx, result, out);
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const InvalidArgument & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const nlohmann::json::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const HypothesisViolation & e) {
            err << "hypothesis violated: " << e.what() << '\n';
            return exit_negative;
        }
        catch (const ResourceLimitExceeded & e) {
            err << "resource limit: " << e.what() << '\n';
            return exit_limit;
        }
        catch (const std::exception & e) {
            err << "internal error: " << e.what() << '\n';
            return exit_internal;
        }
    }
}
