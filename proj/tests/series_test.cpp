#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horadam/errors.hpp"
#include "horadam/sequences.hpp"
#include "horadam/series.hpp"

using namespace horadam;

TEST_CASE("vertex generating function S(x)") {
    Series s = vertex_series(1, 2, 8);
    std::vector<long long> jacobsthal{1, 1, 3, 5, 11, 21, 43, 85, 171};
    for (int n = 0; n <= 8; ++n) CHECK(s.at(n) == BigInt(jacobsthal[static_cast<std::size_t>(n)]));
}

TEST_CASE("edge generating function E(x)") {
    Series e = edge_series(1, 2, 6);
    CHECK(e.at(0) == BigInt(0));
    CHECK(e.at(1) == BigInt(0));
    CHECK(e.at(2) == BigInt(2));
    CHECK(e.at(3) == BigInt(4));
    for (int n = 0; n <= 6; ++n) CHECK(e.at(n) == edge_count({1, 2, n}));
}

TEST_CASE("series coefficients equal the recurrences over the grid") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            Series s = vertex_series(a, b, 25);
            Series e = edge_series(a, b, 25);
            for (int n = 0; n <= 25; ++n) {
                CHECK(s.at(n) == vertex_count({a, b, n}));
                CHECK(e.at(n) == edge_count({a, b, n}));
            }
        }
}

TEST_CASE("degree bivariate expansion") {
    Series d = degree_series(2, 2, 6, 16);
    // x^2 coefficient is y + 4y^2 + y^3.
    CHECK(d.at(2, 0) == BigInt(0));
    CHECK(d.at(2, 1) == BigInt(1));
    CHECK(d.at(2, 2) == BigInt(4));
    CHECK(d.at(2, 3) == BigInt(1));
    CHECK(d.at(2, 4) == BigInt(0));
}

TEST_CASE("bivariate expansions match the recurrences") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const int order = 10;
            const int order_y = 2 * order + 2;
            Series d = degree_series(a, b, order, order_y);
            Series c = cube_series(a, b, order, order_y);
            for (int n = 0; n <= order; ++n) {
                std::map<int, BigInt> drow, crow;
                for (int k = 0; k <= order_y; ++k) {
                    if (!d.at(n, k).is_zero()) drow[k] = d.at(n, k);
                    if (!c.at(n, k).is_zero()) crow[k] = c.at(n, k);
                }
                CHECK(drow == degree_table({a, b, n}).values);
                CHECK(crow == cube_coefficients({a, b, n}).values);
            }
        }
}

TEST_CASE("quotient rejects a zero constant term") {
    Series num(1, 0);
    num.set(0, BigInt(1));
    Series den(1, 1);
    den.set(1, BigInt(1)); // constant term zero
    CHECK_THROWS_AS(expand_rational_series(num, den, 4), parameter_error);
}

TEST_CASE("expansion times denominator reproduces the numerator") {
    // (1 - ax - bx^2) * S(x) = 1, checked coefficientwise.
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            Series s = vertex_series(a, b, 20);
            for (int n = 0; n <= 18; ++n) {
                BigInt conv = s.at(n) - BigInt(a) * s.at(n - 1) - BigInt(b) * s.at(n - 2);
                CHECK(conv == (n == 0 ? BigInt(1) : BigInt(0)));
            }
        }
}
