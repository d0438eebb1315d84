#include "horadam/oracle.hpp"

#include <algorithm>
#include <functional>

#include "horadam/errors.hpp"
#include "horadam/structure.hpp"

namespace horadam::oracle {

BigInt brute_edge_count(const HoradamGraph& g, std::size_t max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw resource_error("brute_edge_count: graph exceeds the pairwise-scan cap");
    long long edges = 0;
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        for (std::size_t j = i + 1; j < g.num_vertices(); ++j)
            if (adjacent(g.vertices[i], g.vertices[j])) ++edges;
    return BigInt(edges);
}

BigInt brute_subcube_count(const HoradamGraph& g, int k, std::size_t max_vertices,
                           int max_dim) {
    if (k < 0) throw parameter_error("brute_subcube_count: k must be >= 0");
    if (g.num_vertices() > max_vertices)
        throw resource_error("brute_subcube_count: graph exceeds the vertex cap");
    if (k > max_dim)
        throw resource_error("brute_subcube_count: dimension exceeds the cap");

    const int n = g.params.n;
    if (k > n) return BigInt();
    if (k == 0) return BigInt(static_cast<long long>(g.num_vertices()));

    // Direction sets: k-subsets of positions, each incremented by 0/1.
    std::vector<int> positions(static_cast<std::size_t>(k));
    long long count = 0;
    Word probe;
    std::function<void(const Word&, int, int)> choose = [&](const Word& base, int from,
                                                            int depth) {
        if (depth == k) {
            for (unsigned mask = 1; mask < (1u << k); ++mask) {
                probe = base;
                for (int t = 0; t < k; ++t)
                    if (mask & (1u << t))
                        probe[static_cast<std::size_t>(positions[static_cast<std::size_t>(t)])] =
                            static_cast<Letter>(probe[static_cast<std::size_t>(
                                                    positions[static_cast<std::size_t>(t)])] +
                                                1);
                if (g.index_of(probe) < 0) return;
            }
            ++count;
            return;
        }
        for (int pos = from; pos < n; ++pos) {
            positions[static_cast<std::size_t>(depth)] = pos;
            choose(base, pos + 1, depth + 1);
        }
    };
    for (const Word& base : g.vertices) choose(base, 0, 0);
    return BigInt(count);
}

bool brute_median_closed(const HoradamGraph& g, std::size_t max_vertices) {
    const std::size_t n = g.num_vertices();
    if (n > max_vertices)
        throw resource_error("brute_median_closed: graph exceeds the triple cap");

    std::vector<std::vector<int>> dist;
    dist.reserve(n);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
        dist.push_back(bfs_distances(g, v));

    SigmaEmbedding sigma(g);
    for (std::size_t x = 0; x < n; ++x) {
        const auto& dx = dist[x];
        for (std::size_t y = x; y < n; ++y) {
            const auto& dy = dist[y];
            for (std::size_t z = y; z < n; ++z) {
                const auto& dz = dist[z];
                int dxy = dx[y], dxz = dx[z], dyz = dy[z];
                std::size_t medians = 0;
                std::size_t found = 0;
                for (std::size_t m = 0; m < n; ++m) {
                    if (dx[m] + dy[m] != dxy) continue;
                    if (dx[m] + dz[m] != dxz) continue;
                    if (dy[m] + dz[m] != dyz) continue;
                    ++medians;
                    found = m;
                    if (medians > 1) break;
                }
                if (medians != 1) return false;
                if (sigma.median(static_cast<VertexId>(x), static_cast<VertexId>(y),
                                 static_cast<VertexId>(z)) != static_cast<VertexId>(found))
                    return false;
            }
        }
    }
    return true;
}

std::size_t FibonacciCube::num_edges() const {
    std::size_t total = 0;
    for (const auto& nb : adj) total += nb.size();
    return total / 2;
}

FibonacciCube fibonacci_cube(int m, int max_dim) {
    if (m < 0) throw parameter_error("fibonacci_cube: dimension must be >= 0");
    if (m > max_dim) throw resource_error("fibonacci_cube: dimension exceeds the cap");

    FibonacciCube cube;
    cube.dimension = m;
    std::string s(static_cast<std::size_t>(m), '0');
    std::function<void(int)> fill = [&](int pos) {
        if (pos == m) {
            cube.vertices.push_back(s);
            return;
        }
        s[static_cast<std::size_t>(pos)] = '0';
        fill(pos + 1);
        if (pos == 0 || s[static_cast<std::size_t>(pos - 1)] == '0') {
            s[static_cast<std::size_t>(pos)] = '1';
            fill(pos + 1);
            s[static_cast<std::size_t>(pos)] = '0';
        }
    };
    fill(0);
    std::sort(cube.vertices.begin(), cube.vertices.end());

    cube.adj.resize(cube.vertices.size());
    for (VertexId v = 0; v < static_cast<VertexId>(cube.vertices.size()); ++v) {
        std::string flip = cube.vertices[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < flip.size(); ++i) {
            char orig = flip[i];
            flip[i] = orig == '0' ? '1' : '0';
            auto it = std::lower_bound(cube.vertices.begin(), cube.vertices.end(), flip);
            if (it != cube.vertices.end() && *it == flip) {
                VertexId u = static_cast<VertexId>(it - cube.vertices.begin());
                if (u > v) {
                    cube.adj[static_cast<std::size_t>(v)].push_back(u);
                    cube.adj[static_cast<std::size_t>(u)].push_back(v);
                }
            }
            flip[i] = orig;
        }
    }
    for (auto& nb : cube.adj) std::sort(nb.begin(), nb.end());
    return cube;
}

} // namespace horadam::oracle
