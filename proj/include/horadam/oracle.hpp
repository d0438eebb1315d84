#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "horadam/bigint.hpp"
#include "horadam/graph.hpp"

namespace horadam::oracle {

// Independent brute-force verifiers. They deliberately use different
// algorithms than the main modules (pairwise scans, direction-set
// enumeration) so that agreement is evidence, not tautology.

inline constexpr std::size_t default_edge_scan_cap = 2000;
inline constexpr std::size_t default_subcube_vertex_cap = 5000;
inline constexpr int default_subcube_dim_cap = 6;
inline constexpr std::size_t default_median_cap = 300;
inline constexpr int default_fibonacci_dim_cap = 24;

// O(|V|^2) pairwise adjacency scan.
BigInt brute_edge_count(const HoradamGraph& g,
                        std::size_t max_vertices = default_edge_scan_cap);

// Counts pairs (base vertex, k-subset of positions) whose full 0/1
// increment pattern stays inside the vertex set; each such pair spans one
// induced Q_k.
BigInt brute_subcube_count(const HoradamGraph& g, int k,
                           std::size_t max_vertices = default_subcube_vertex_cap,
                           int max_dim = default_subcube_dim_cap);

// Full triple enumeration over BFS distances: every vertex triple must
// have exactly one vertex on shortest paths between each pair, and it must
// agree with the majority-rule median.
bool brute_median_closed(const HoradamGraph& g,
                         std::size_t max_vertices = default_median_cap);

// The Fibonacci cube Gamma_m: binary strings of length m with no two
// consecutive ones, adjacent at Hamming distance one.
struct FibonacciCube {
    int dimension = 0;
    std::vector<std::string> vertices; // sorted
    std::vector<std::vector<VertexId>> adj;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_edges() const;
};

FibonacciCube fibonacci_cube(int m, int max_dim = default_fibonacci_dim_cap);

} // namespace horadam::oracle
