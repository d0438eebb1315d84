#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horadam/graph.hpp"
#include "horadam/oracle.hpp"
#include "horadam/sequences.hpp"

using namespace horadam;

namespace {

std::map<int, BigInt> row(std::initializer_list<std::pair<int, long long>> cells) {
    std::map<int, BigInt> r;
    for (auto [k, v] : cells) r[k] = BigInt(v);
    return r;
}

} // namespace

TEST_CASE("bigint basics") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(123456789012345678LL) * BigInt(987654321098765432LL)).to_string() ==
          "121932631137021794322511812221002896");
    CHECK(BigInt::from_string("-121932631137021794322511812221002896") ==
          -(BigInt(123456789012345678LL) * BigInt(987654321098765432LL)));
    CHECK(BigInt(1000000000000LL) - BigInt(1) == BigInt(999999999999LL));
    CHECK(BigInt(-5) + BigInt(7) == BigInt(2));
    CHECK(BigInt(100).divided_exact(4) == BigInt(25));
    CHECK_THROWS(BigInt(100).divided_exact(3));
    CHECK(pow(BigInt(3), 20) == BigInt(3486784401LL));
    CHECK(binomial(30, 15) == BigInt(155117520));
    CHECK(binomial(5, 7) == BigInt(0));
    CHECK(BigInt(5) < BigInt(7));
    CHECK(BigInt(-7) < BigInt(5));
}

TEST_CASE("vertex counts") {
    CHECK(vertex_count({1, 1, 5}) == BigInt(8));  // shifted Fibonacci
    CHECK(vertex_count({2, 1, 4}) == BigInt(29)); // shifted Pell
    CHECK(vertex_count({3, 2, 0}) == BigInt(1));
    CHECK(vertex_count({3, 2, 3}) == BigInt(39));
    CHECK(vertex_count({1, 2, 5}) == BigInt(21)); // Jacobsthal

    CHECK(vertex_count_closed({3, 2, 3}) == BigInt(39));
    CHECK(vertex_count_closed({1, 2, 4}) == BigInt(11));
    for (int a = 1; a <= 4; ++a) CHECK(vertex_count_closed({a, 3, 1}) == BigInt(a));
}

TEST_CASE("two vertex count routes agree") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 0; n <= 25; ++n)
                CHECK(vertex_count({a, b, n}) == vertex_count_closed({a, b, n}));
}

TEST_CASE("fibonacci numbers") {
    CHECK(fibonacci_number(0) == BigInt(0));
    CHECK(fibonacci_number(1) == BigInt(1));
    CHECK(fibonacci_number(6) == BigInt(8));
    CHECK(fibonacci_number(50) == BigInt(12586269025LL));
}

TEST_CASE("edge counts") {
    CHECK(edge_count({3, 2, 2}) == BigInt(14));
    CHECK(edge_count({1, 2, 3}) == BigInt(4));
    CHECK(edge_count({2, 1, 4}) == BigInt(58)); // n P_{n+1} / 2
    CHECK(edge_count({2, 2, 4}) == BigInt(88));
    CHECK(edge_count({4, 4, 0}) == BigInt(0));

    CHECK(edge_count_convolution({1, 1, 4}) == BigInt(5));
    CHECK(edge_count_convolution({3, 2, 2}) == BigInt(14));
    for (int a = 1; a <= 4; ++a)
        CHECK(edge_count_convolution({a, 2, 1}) == BigInt(a - 1));

    CHECK(edge_count_binomial({3, 2, 2}) == BigInt(14));
    CHECK(edge_count_binomial({1, 2, 2}) == BigInt(2));
}

TEST_CASE("binomial edge formula matches a brute scan at (2,2,3)") {
    HoradamGraph g = build_graph({2, 2, 3});
    BigInt brute = oracle::brute_edge_count(g);
    CHECK(brute == BigInt(24));
    CHECK(edge_count_binomial({2, 2, 3}) == brute);
}

TEST_CASE("three edge count routes agree") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 1; n <= 25; ++n) {
                Params p{a, b, n};
                BigInt e = edge_count(p);
                CHECK(edge_count_convolution(p) == e);
                CHECK(edge_count_binomial(p) == e);
            }
}

TEST_CASE("degree tables") {
    CHECK(degree_table({3, 2, 2}).values == row({{1, 1}, {2, 4}, {3, 5}, {4, 1}}));
    CHECK(degree_table({1, 2, 4}).values == row({{1, 1}, {2, 4}, {3, 5}, {4, 1}}));
    CHECK(degree_table({2, 2, 1}).values == row({{1, 2}}));
    CHECK(degree_table({2, 2, 5}).values ==
          row({{3, 6}, {4, 32}, {5, 44}, {6, 32}, {7, 6}}));
    // The 1-cube for a=1 is an isolated vertex.
    CHECK(degree_table({1, 2, 1}).values == row({{0, 1}}));
}

TEST_CASE("degree rows sum to s_n and weigh to 2 e_n") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 0; n <= 10; ++n) {
                Params p{a, b, n};
                BigInt sum, weighted;
                for (const auto& [k, v] : degree_table(p).values) {
                    sum += v;
                    weighted += BigInt(k) * v;
                }
                CHECK(sum == vertex_count(p));
                CHECK(weighted == BigInt(2) * edge_count(p));
            }
}

TEST_CASE("cube coefficients") {
    CHECK(cube_coefficients({1, 2, 4}).values == row({{0, 11}, {1, 14}, {2, 4}}));
    CHECK(cube_coefficients({3, 2, 3}).values ==
          row({{0, 39}, {1, 74}, {2, 44}, {3, 8}}));
    CHECK(cube_coefficients({4, 3, 0}).values == row({{0, 1}}));
}

TEST_CASE("cube numbers") {
    CHECK(cube_number({1, 2, 2}) == BigInt(5));
    for (int a = 1; a <= 4; ++a) CHECK(cube_number({a, 3, 1}) == BigInt(2 * a - 1));
    CHECK(cube_number({1, 2, 4}) == BigInt(29));
}

TEST_CASE("cube polynomial route agrees with the coefficient recurrence") {
    CHECK(cube_polynomial({3, 2, 3}).coefficients ==
          std::vector<BigInt>{BigInt(39), BigInt(74), BigInt(44), BigInt(8)});
    CHECK(cube_polynomial({2, 3, 1}).coefficients ==
          std::vector<BigInt>{BigInt(2), BigInt(1)});
    CHECK(cube_polynomial({1, 2, 5}).coefficients ==
          std::vector<BigInt>{BigInt(21), BigInt(32), BigInt(12)});

    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 0; n <= 12; ++n) {
                Params p{a, b, n};
                auto coefs = cube_coefficients(p);
                auto poly = cube_polynomial(p).coefficients;
                REQUIRE(poly.size() == coefs.values.size());
                BigInt sum;
                for (std::size_t k = 0; k < poly.size(); ++k) {
                    CHECK(poly[k] == coefs.values.at(static_cast<int>(k)));
                    sum += poly[k];
                }
                CHECK(sum == cube_number(p));
                CHECK(coefs.values.at(0) == vertex_count(p));
                if (coefs.values.count(1)) CHECK(coefs.values.at(1) == edge_count(p));
            }
}

TEST_CASE("special-case identities") {
    for (int b = 1; b <= 4; ++b)
        for (int n = 0; n <= 25; ++n) {
            // a = 2: 2 e_n = n s_n
            CHECK(BigInt(2) * edge_count({2, b, n}) ==
                  BigInt(n) * vertex_count({2, b, n}));
            // a = 1: e_n = b * sum_{k} s_{k-1} s_{n-k-1}
            if (n >= 1) {
                BigInt sum;
                for (int k = 1; k <= n - 1; ++k)
                    sum += vertex_count({1, b, k - 1}) * vertex_count({1, b, n - k - 1});
                CHECK(edge_count({1, b, n}) == BigInt(b) * sum);
            }
        }
}
