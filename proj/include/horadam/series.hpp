#pragma once

#include <vector>

#include "horadam/bigint.hpp"

namespace horadam {

inline constexpr int default_series_order = 32;

// Dense truncated power series with exact integer coefficients in x, or in
// x and y. Coefficient (i, j) is the one of x^i y^j; one-variable series
// keep order_y() == 0.
class Series {
public:
    Series(int vars, int order_x, int order_y = 0);

    int vars() const { return vars_; }
    int order_x() const { return order_x_; }
    int order_y() const { return order_y_; }

    const BigInt& at(int i, int j = 0) const;
    void set(int i, int j, BigInt v);
    void set(int i, BigInt v) { set(i, 0, std::move(v)); }

    // Coefficients of x^i as a polynomial in y, trailing zeros trimmed.
    std::vector<BigInt> x_coefficient_row(int i) const;

private:
    int vars_;
    int order_x_;
    int order_y_;
    std::vector<BigInt> coef_; // row-major, (order_x+1) x (order_y+1)

    BigInt& slot(int i, int j);
};

// Truncated quotient num/den with exact integer coefficients; requires a
// nonzero constant term in den (parameter_error otherwise) and that every
// coefficient division is exact (the generating functions used here all
// have constant term 1).
Series expand_rational_series(const Series& num, const Series& den,
                              int order_x, int order_y = 0);

// The generating functions evaluated at integer (a, b).
Series vertex_series(int a, int b, int order);                 // S(x)
Series edge_series(int a, int b, int order);                   // E(x)
Series degree_series(int a, int b, int order_x, int order_y);  // Delta(x,y)
Series cube_series(int a, int b, int order_x, int order_y);    // A(x,y)

} // namespace horadam
