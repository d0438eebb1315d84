#include "horadam/graph.hpp"

#include <algorithm>
#include <deque>

#include "horadam/errors.hpp"

namespace horadam {

VertexId HoradamGraph::index_of(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return -1;
    return static_cast<VertexId>(it - vertices.begin());
}

bool adjacent(const Word& u, const Word& w) {
    if (u.size() != w.size()) throw parameter_error("adjacent: length mismatch");
    int diff = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == w[i]) continue;
        int d = static_cast<int>(u[i]) - static_cast<int>(w[i]);
        if (d != 1 && d != -1) return false;
        if (++diff > 1) return false;
    }
    return diff == 1;
}

HoradamGraph build_graph(const Params& p, std::size_t max_vertices) {
    HoradamGraph g;
    g.params = p;
    g.vertices = enumerate_words(p, max_vertices);
    g.adj.resize(g.vertices.size());

    Word candidate;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertices.size()); ++v) {
        candidate = g.vertices[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            Letter orig = candidate[i];
            for (int delta : {-1, +1}) {
                int x = static_cast<int>(orig) + delta;
                if (x < 0 || x > p.top_letter()) continue;
                candidate[i] = static_cast<Letter>(x);
                if (is_valid_word(candidate, p)) {
                    VertexId u = g.index_of(candidate);
                    if (u > v) { // record each edge once, from its lower endpoint
                        g.adj[static_cast<std::size_t>(v)].push_back(u);
                        g.adj[static_cast<std::size_t>(u)].push_back(v);
                        ++g.num_edges;
                    }
                }
            }
            candidate[i] = orig;
        }
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

std::map<int, std::int64_t> degree_histogram(const HoradamGraph& g) {
    std::map<int, std::int64_t> hist;
    for (const auto& nb : g.adj) ++hist[static_cast<int>(nb.size())];
    return hist;
}

std::vector<std::uint8_t> two_coloring(const HoradamGraph& g) {
    std::vector<std::uint8_t> color(g.num_vertices(), 0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        unsigned sum = 0;
        for (Letter x : g.vertices[v]) sum += x;
        color[v] = static_cast<std::uint8_t>(sum % 2);
    }
    return color;
}

std::vector<int> bfs_distances(const HoradamGraph& g, VertexId source) {
    if (source < 0 || static_cast<std::size_t>(source) >= g.num_vertices())
        throw parameter_error("bfs_distances: source out of range");
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<VertexId> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : g.adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
        }
    }
    for (int d : dist)
        if (d < 0) throw internal_error("bfs_distances: graph is not connected");
    return dist;
}

} // namespace horadam
