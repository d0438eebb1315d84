#pragma once

#include <map>
#include <vector>

#include "horadam/bigint.hpp"
#include "horadam/params.hpp"

namespace horadam {

// Number of vertices s_n: s_0 = 1, s_1 = a, s_n = a*s_{n-1} + b*s_{n-2}.
BigInt vertex_count(const Params& p);

// Closed form: sum_k C(n-k, k) a^{n-2k} b^k.
BigInt vertex_count_closed(const Params& p);

// Standard Fibonacci numbers with F_0 = 0, F_1 = 1.
BigInt fibonacci_number(long long m);

// Number of edges e_n: e_0 = 0, e_1 = a-1,
// e_n = a*e_{n-1} + b*e_{n-2} + s_n - s_{n-1}.
BigInt edge_count(const Params& p);

// e_n = sum_{k=0}^{n-1} s_k (s_{n-k} - s_{n-1-k}).
BigInt edge_count_convolution(const Params& p);

// e_n = sum_{k=0}^{n} (-1)^{n-k} ceil((n+k)/2) C(floor((n+k)/2), k)
//       a^k b^{floor((n-k)/2)}.
BigInt edge_count_binomial(const Params& p);

enum class TableKind { vertices, edges, degrees, cube_coefficients };

// One indexed row of exact counts for a fixed parameter triple.
struct CountTable {
    Params params;
    TableKind kind = TableKind::vertices;
    std::map<int, BigInt> values;
};

// Degree distribution row: k -> number of vertices of degree k (nonzero
// entries only). Rows n <= 3 come from brute-force degree counts over the
// enumerated vertex set; later rows from the recurrences, split by a = 1
// versus a >= 2.
CountTable degree_table(const Params& p);

// Cube coefficients c_k = number of induced Q_k subgraphs, k = 0..max,
// by the two-index recurrence with base rows [1] and [a, a-1].
CountTable cube_coefficients(const Params& p);

// Total number of induced subhypercubes:
// c_n = (2a-1) c_{n-1} + 2b c_{n-2}, c_0 = 1, c_1 = 2a-1.
BigInt cube_number(const Params& p);

struct CubePolynomial {
    Params params;
    std::vector<BigInt> coefficients; // index = power of x
};

// C_n(x) = (a + (a-1)x) C_{n-1}(x) + (b + bx) C_{n-2}(x); a second route
// to the same coefficients as cube_coefficients.
CubePolynomial cube_polynomial(const Params& p);

} // namespace horadam
