#include "horadam/exports.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "horadam/errors.hpp"
#include "horadam/sequences.hpp"

namespace horadam {

namespace {

const char* rendering_note(const Params& p) {
    return p.alphabet_size() <= 10 ? "compact digits" : "comma-separated decimals";
}

// Edges as sorted (low, high) index pairs; index order equals word order.
std::vector<std::pair<VertexId, VertexId>> sorted_edges(const HoradamGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.num_edges);
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v)
        for (VertexId u : g.adj[static_cast<std::size_t>(v)])
            if (u > v) edges.emplace_back(v, u);
    std::sort(edges.begin(), edges.end());
    return edges;
}

HoradamGraph rebuild_from_edges(const Params& p,
                                const std::vector<std::pair<VertexId, VertexId>>& edges) {
    HoradamGraph g;
    g.params = p;
    g.vertices = enumerate_words(p);
    g.adj.resize(g.vertices.size());
    for (auto [v, u] : edges) {
        if (v < 0 || u < 0 || static_cast<std::size_t>(v) >= g.num_vertices() ||
            static_cast<std::size_t>(u) >= g.num_vertices() || v == u)
            throw parameter_error("graph import: edge endpoint out of range");
        g.adj[static_cast<std::size_t>(v)].push_back(u);
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        ++g.num_edges;
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

} // namespace

void write_edgelist(const HoradamGraph& g, std::ostream& os) {
    os << "# horadam a=" << g.params.a << " b=" << g.params.b << " n=" << g.params.n
       << "\n";
    os << "# words rendered as " << rendering_note(g.params) << "\n";
    for (auto [v, u] : sorted_edges(g))
        os << render_word(g.word(v), g.params) << '\t' << render_word(g.word(u), g.params)
           << '\n';
}

HoradamGraph read_edgelist(std::istream& is) {
    std::string line;
    Params p;
    bool have_params = false;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<Word> vertices;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line);
            std::string tag, word;
            hs >> tag >> word;
            if (word == "horadam") {
                std::string field;
                while (hs >> field) {
                    auto eq = field.find('=');
                    if (eq == std::string::npos) continue;
                    int value = std::stoi(field.substr(eq + 1));
                    if (field.compare(0, eq, "a") == 0) p.a = value;
                    else if (field.compare(0, eq, "b") == 0) p.b = value;
                    else if (field.compare(0, eq, "n") == 0) p.n = value;
                }
                have_params = true;
                validate(p);
                vertices = enumerate_words(p);
            }
            continue;
        }
        if (!have_params) throw parameter_error("edge list: missing header");
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw parameter_error("edge list: malformed line");
        Word u = parse_word(line.substr(0, tab), p);
        Word w = parse_word(line.substr(tab + 1), p);
        auto find = [&](const Word& word) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), word);
            if (it == vertices.end() || *it != word)
                throw parameter_error("edge list: unknown vertex");
            return static_cast<VertexId>(it - vertices.begin());
        };
        edges.emplace_back(find(u), find(w));
    }
    if (!have_params) throw parameter_error("edge list: missing header");
    return rebuild_from_edges(p, edges);
}

void write_dot(const HoradamGraph& g, std::ostream& os, bool with_coloring) {
    os << "// horadam a=" << g.params.a << " b=" << g.params.b << " n=" << g.params.n
       << "; words rendered as " << rendering_note(g.params) << "\n";
    os << "graph horadam {\n";
    std::vector<std::uint8_t> colors;
    if (with_coloring) colors = two_coloring(g);
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        os << "  \"" << render_word(g.word(v), g.params) << '"';
        if (with_coloring)
            os << " [color=" << (colors[static_cast<std::size_t>(v)] ? "red" : "blue")
               << ']';
        os << ";\n";
    }
    for (auto [v, u] : sorted_edges(g))
        os << "  \"" << render_word(g.word(v), g.params) << "\" -- \""
           << render_word(g.word(u), g.params) << "\";\n";
    os << "}\n";
}

void write_json(const HoradamGraph& g, std::ostream& os) {
    nlohmann::ordered_json j;
    j["params"] = {{"a", g.params.a}, {"b", g.params.b}, {"n", g.params.n}};
    j["rendering"] = rendering_note(g.params);
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (const Word& w : g.vertices) verts.push_back(render_word(w, g.params));
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (auto [v, u] : sorted_edges(g)) edges.push_back({v, u});
    j["meta"] = {{"s_n", vertex_count(g.params).to_string()},
                 {"e_n", edge_count(g.params).to_string()}};
    os << j.dump(2) << "\n";
}

HoradamGraph read_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    Params p{j.at("params").at("a").get<int>(), j.at("params").at("b").get<int>(),
             j.at("params").at("n").get<int>()};
    validate(p);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    HoradamGraph g = rebuild_from_edges(p, edges);
    if (j.contains("vertices")) {
        const auto& verts = j.at("vertices");
        if (verts.size() != g.num_vertices())
            throw parameter_error("graph import: vertex count mismatch");
        for (std::size_t i = 0; i < g.num_vertices(); ++i)
            if (parse_word(verts[i].get<std::string>(), p) != g.vertices[i])
                throw parameter_error("graph import: vertex list mismatch");
    }
    return g;
}

} // namespace horadam
