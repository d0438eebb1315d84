#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "horadam/words.hpp"

namespace horadam {

using VertexId = std::int32_t;

// Immutable Horadam cube: vertices in lexicographic word order with sorted
// neighbor lists. Two words are adjacent when they differ in exactly one
// position and exactly by one.
struct HoradamGraph {
    Params params;
    std::vector<Word> vertices;
    std::vector<std::vector<VertexId>> adj;
    std::size_t num_edges = 0;

    std::size_t num_vertices() const { return vertices.size(); }
    const Word& word(VertexId v) const { return vertices[static_cast<std::size_t>(v)]; }

    // Binary search over the sorted vertex list; -1 when absent.
    VertexId index_of(const Word& w) const;

    bool operator==(const HoradamGraph& other) const {
        return params == other.params && vertices == other.vertices && adj == other.adj;
    }
};

bool adjacent(const Word& u, const Word& w);

// Neighbor discovery by candidate +-1 letter edits looked up by binary
// search, so construction stays near O(|V| n log |V|).
HoradamGraph build_graph(const Params& p, std::size_t max_vertices = default_vertex_cap);

std::map<int, std::int64_t> degree_histogram(const HoradamGraph& g);

// chi(v) = letter sum mod 2; a proper 2-coloring.
std::vector<std::uint8_t> two_coloring(const HoradamGraph& g);

// Exact BFS distances; throws internal_error when some vertex is
// unreachable (the graph is connected, so that would be a build bug).
std::vector<int> bfs_distances(const HoradamGraph& g, VertexId source);

} // namespace horadam
