#include <multituran/errors.hpp>
#include <multituran/graph_io.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

using nlohmann::json;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace multituran
{
    auto line_and_column(string_view text, size_t offset) -> std::pair<size_t, size_t>
    {
        size_t line = 1, column = 1;
        for (size_t i = 0 ; i < offset && i < text.size() ; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        return {line, column};
    }

    namespace
    {
        constexpr size_t whole_value = static_cast<size_t>(-1);

        auto skip_string(string_view text, size_t i) -> size_t
        {
            // i is at the opening quote
            for (++i ; i < text.size() ; ++i) {
                if (text[i] == '\\')
                    ++i;
                else if (text[i] == '"')
                    return i + 1;
            }
            return i;
        }

        // Byte offset of element n of the array stored under a top-level key,
        // or of the value itself when n == whole_value. Only called on text
        // that nlohmann already accepted, so the structure is well formed.
        auto locate(string_view text, string_view key, size_t n) -> size_t
        {
            int depth = 0;
            size_t i = 0;
            bool found_key = false;
            while (i < text.size()) {
                char c = text[i];
                if (c == '"') {
                    auto end = skip_string(text, i);
                    if (depth == 1 && text.substr(i + 1, end - i - 2) == key) {
                        found_key = true;
                        i = end;
                        break;
                    }
                    i = end;
                    continue;
                }
                if (c == '{' || c == '[')
                    ++depth;
                else if (c == '}' || c == ']')
                    --depth;
                ++i;
            }
            if (! found_key)
                return 0;
            while (i < text.size() && text[i] != ':')
                ++i;
            ++i;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            if (n == whole_value || i >= text.size() || text[i] != '[')
                return i;

            size_t index = 0;
            int inner = 0;
            ++i;
            while (i < text.size()) {
                char c = text[i];
                if (std::isspace(static_cast<unsigned char>(c))) {
                    ++i;
                    continue;
                }
                if (inner == 0 && c == ']')
                    return i;
                if (inner == 0 && c == ',') {
                    ++index;
                    ++i;
                    continue;
                }
                if (inner == 0 && index == n)
                    return i;
                if (c == '"') {
                    i = skip_string(text, i);
                    continue;
                }
                if (c == '[' || c == '{')
                    ++inner;
                else if (c == ']' || c == '}')
                    --inner;
                ++i;
            }
            return i;
        }

        [[noreturn]] auto fail_at(string_view text, size_t offset, const string & message) -> void
        {
            auto [line, column] = line_and_column(text, offset);
            throw ParseError(message, line, column);
        }

        auto as_index(const json & j, string_view text, string_view key, size_t n, const string & what) -> size_t
        {
            if (! j.is_number_integer() || j.get<long long>() < 0)
                fail_at(text, locate(text, key, n), what + " must be a non-negative integer");
            return j.get<size_t>();
        }
    }

    auto save_graph(const MultipartiteGraph & g) -> string
    {
        std::ostringstream out;
        out << "{\n  \"parts\": [";
        for (size_t i = 0 ; i < g.part_count() ; ++i)
            out << (i ? ", " : "") << g.part_size(i);
        out << "],\n  \"edges\": [";
        auto edges = g.edges();
        for (size_t e = 0 ; e < edges.size() ; ++e) {
            auto & [a, b] = edges[e];
            out << (e ? ",\n" : "\n") << "    [[" << a.part << ", " << a.index << "], [" << b.part << ", " << b.index << "]]";
        }
        out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
        return out.str();
    }

    auto load_graph(string_view text) -> MultipartiteGraph
    {
        json doc;
        try {
            doc = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error & e) {
            fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed graph document: syntax error");
        }

        if (! doc.is_object())
            fail_at(text, 0, "graph document must be an object with fields \"parts\" and \"edges\"");
        for (auto & [key, value] : doc.items())
            if (key != "parts" && key != "edges")
                fail_at(text, locate(text, key, whole_value), "unknown field \"" + key + "\"");
        if (! doc.contains("parts"))
            fail_at(text, 0, "missing field \"parts\"");
        if (! doc.contains("edges"))
            fail_at(text, 0, "missing field \"edges\"");

        auto & parts = doc["parts"];
        if (! parts.is_array() || parts.empty())
            fail_at(text, locate(text, "parts", whole_value), "\"parts\" must be a non-empty list of sizes");
        vector<size_t> sizes;
        for (size_t i = 0 ; i < parts.size() ; ++i) {
            auto s = as_index(parts[i], text, "parts", i, "part size");
            if (s == 0)
                fail_at(text, locate(text, "parts", i), "part " + std::to_string(i) + " is empty");
            sizes.push_back(s);
        }

        auto & edges = doc["edges"];
        if (! edges.is_array())
            fail_at(text, locate(text, "edges", whole_value), "\"edges\" must be a list");

        vector<Edge> parsed;
        std::set<std::pair<VertexId, VertexId>> seen;
        for (size_t e = 0 ; e < edges.size() ; ++e) {
            auto & entry = edges[e];
            auto where = [&] { return locate(text, "edges", e); };
            if (! entry.is_array() || entry.size() != 2)
                fail_at(text, where(), "edge " + std::to_string(e) + " must be a pair of vertices");
            VertexId ends[2];
            for (int k = 0 ; k < 2 ; ++k) {
                auto & v = entry[k];
                if (! v.is_array() || v.size() != 2 || ! v[0].is_number_integer() || ! v[1].is_number_integer()
                        || v[0].get<long long>() < 0 || v[1].get<long long>() < 0)
                    fail_at(text, where(), "edge " + std::to_string(e) + " endpoint must be [part, index]");
                ends[k] = VertexId{v[0].get<size_t>(), v[1].get<size_t>()};
                if (ends[k].part >= sizes.size())
                    fail_at(text, where(), "edge " + std::to_string(e) + " references part " + std::to_string(ends[k].part)
                            + " but the graph has " + std::to_string(sizes.size()) + " parts");
                if (ends[k].index >= sizes[ends[k].part])
                    fail_at(text, where(), "edge " + std::to_string(e) + " references vertex " + to_string(ends[k])
                            + " beyond part size " + std::to_string(sizes[ends[k].part]));
            }
            if (ends[0].part == ends[1].part)
                fail_at(text, where(), "edge " + std::to_string(e) + " lies inside part " + std::to_string(ends[0].part));
            auto key = std::minmax(ends[0], ends[1]);
            if (! seen.insert(key).second)
                fail_at(text, where(), "duplicate edge " + to_string(key.first) + "-" + to_string(key.second));
            parsed.emplace_back(ends[0], ends[1]);
        }

        return MultipartiteGraph(std::move(sizes), parsed);
    }

    auto save_dot(const MultipartiteGraph & g) -> string
    {
        std::ostringstream out;
        out << "graph multipartite {\n";
        for (size_t i = 0 ; i < g.part_count() ; ++i) {
            out << "  subgraph cluster_" << i << " {\n";
            out << "    label=\"V" << i << "\";\n";
            for (size_t a = 0 ; a < g.part_size(i) ; ++a)
                out << "    \"" << i << ":" << a << "\";\n";
            out << "  }\n";
        }
        for (auto & [a, b] : g.edges())
            out << "  \"" << a.part << ":" << a.index << "\" -- \"" << b.part << ":" << b.index << "\";\n";
        out << "}\n";
        return out.str();
    }

    namespace
    {
        auto parse_dot_vertex(string_view token, size_t line, size_t column) -> VertexId
        {
            if (token.size() < 5 || token.front() != '"' || token.back() != '"')
                throw ParseError("expected a quoted \"part:index\" vertex name", line, column);
            auto body = token.substr(1, token.size() - 2);
            auto colon = body.find(':');
            if (colon == string_view::npos)
                throw ParseError("vertex name lacks ':'", line, column);
            auto number = [&](string_view s) -> size_t {
                if (s.empty() || s.find_first_not_of("0123456789") != string_view::npos)
                    throw ParseError("malformed vertex number '" + string(s) + "'", line, column);
                return std::stoull(string(s));
            };
            return VertexId{number(body.substr(0, colon)), number(body.substr(colon + 1))};
        }
    }

    auto load_dot(string_view text) -> MultipartiteGraph
    {
        vector<string> lines;
        {
            std::istringstream in{string(text)};
            string l;
            while (std::getline(in, l))
                lines.push_back(l);
        }

        auto trimmed = [](const string & s) -> string_view {
            string_view v = s;
            while (! v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
                v.remove_prefix(1);
            while (! v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
                v.remove_suffix(1);
            return v;
        };
        auto indent = [](const string & s) { return s.find_first_not_of(' ') + 1; };

        if (lines.empty() || trimmed(lines[0]) != "graph multipartite {")
            throw ParseError("expected 'graph multipartite {'", 1, 1);

        vector<size_t> sizes;
        vector<Edge> edges;
        bool closed = false;
        constexpr size_t no_part = static_cast<size_t>(-1);
        size_t current_part = no_part;
        for (size_t n = 1 ; n < lines.size() ; ++n) {
            auto line = n + 1;
            auto t = trimmed(lines[n]);
            if (t.empty())
                continue;
            if (closed)
                throw ParseError("content after closing brace", line, indent(lines[n]));
            if (t == "}") {
                if (current_part != no_part)
                    current_part = no_part;
                else
                    closed = true;
                continue;
            }
            if (t.starts_with("subgraph cluster_")) {
                if (current_part != no_part)
                    throw ParseError("nested cluster", line, indent(lines[n]));
                auto expected = "subgraph cluster_" + std::to_string(sizes.size()) + " {";
                if (t != expected)
                    throw ParseError("expected '" + expected + "'", line, indent(lines[n]));
                current_part = sizes.size();
                sizes.push_back(0);
                continue;
            }
            if (t.starts_with("label=")) {
                if (current_part == no_part)
                    throw ParseError("label outside a cluster", line, indent(lines[n]));
                continue;
            }
            if (! t.ends_with(";"))
                throw ParseError("statement must end with ';'", line, indent(lines[n]) + t.size());
            t.remove_suffix(1);
            if (current_part != no_part) {
                auto v = parse_dot_vertex(t, line, indent(lines[n]));
                if (v.part != current_part || v.index != sizes[current_part])
                    throw ParseError("vertex " + to_string(v) + " out of order in cluster " + std::to_string(current_part),
                            line, indent(lines[n]));
                ++sizes[current_part];
                continue;
            }
            auto dash = t.find(" -- ");
            if (dash == string_view::npos)
                throw ParseError("expected an edge 'a -- b'", line, indent(lines[n]));
            auto a = parse_dot_vertex(t.substr(0, dash), line, indent(lines[n]));
            auto b = parse_dot_vertex(t.substr(dash + 4), line, indent(lines[n]) + dash + 4);
            for (auto & v : {a, b})
                if (v.part >= sizes.size() || v.index >= sizes[v.part])
                    throw ParseError("edge references undeclared vertex " + to_string(v), line, indent(lines[n]));
            edges.emplace_back(a, b);
        }
        if (! closed)
            throw ParseError("missing closing brace", lines.size(), 1);
        try {
            return MultipartiteGraph(std::move(sizes), edges);
        }
        catch (const InvalidGraph & e) {
            throw ParseError(e.what(), lines.size(), 1);
        }
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InvalidArgument("cannot open '" + path + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto write_file(const string & path, string_view contents) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InvalidArgument("cannot open '" + path + "' for writing");
        out << contents;
    }
}
