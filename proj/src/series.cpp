#include "horadam/series.hpp"

#include <algorithm>

#include "horadam/errors.hpp"

namespace horadam {

Series::Series(int vars, int order_x, int order_y)
    : vars_(vars), order_x_(order_x), order_y_(vars == 2 ? order_y : 0) {
    if (vars != 1 && vars != 2) throw parameter_error("Series: vars must be 1 or 2");
    if (order_x < 0 || order_y_ < 0) throw parameter_error("Series: negative order");
    coef_.assign(static_cast<std::size_t>(order_x_ + 1) *
                     static_cast<std::size_t>(order_y_ + 1),
                 BigInt());
}

BigInt& Series::slot(int i, int j) {
    return coef_[static_cast<std::size_t>(i) * (order_y_ + 1) + j];
}

const BigInt& Series::at(int i, int j) const {
    static const BigInt zero;
    if (i < 0 || j < 0) return zero;
    if (i > order_x_ || j > order_y_) return zero;
    return coef_[static_cast<std::size_t>(i) * (order_y_ + 1) + j];
}

void Series::set(int i, int j, BigInt v) {
    if (i < 0 || i > order_x_ || j < 0 || j > order_y_)
        throw parameter_error("Series::set: index out of range");
    slot(i, j) = std::move(v);
}

std::vector<BigInt> Series::x_coefficient_row(int i) const {
    std::vector<BigInt> row;
    for (int j = 0; j <= order_y_; ++j) row.push_back(at(i, j));
    while (!row.empty() && row.back().is_zero()) row.pop_back();
    return row;
}

Series expand_rational_series(const Series& num, const Series& den,
                              int order_x, int order_y) {
    if (num.vars() != den.vars())
        throw parameter_error("expand_rational_series: mixed variable counts");
    const BigInt& d0 = den.at(0, 0);
    if (d0.is_zero())
        throw parameter_error("expand_rational_series: denominator has zero constant term");

    int vars = num.vars();
    Series q(vars, order_x, vars == 2 ? order_y : 0);
    BigInt d0abs = d0.sign() < 0 ? -d0 : d0;
    if (!d0abs.fits_uint64() || d0abs.to_uint64() > static_cast<std::uint64_t>(1) << 62)
        throw parameter_error("expand_rational_series: constant term too large");
    long long d0ll = static_cast<long long>(d0abs.to_uint64());
    if (d0.sign() < 0) d0ll = -d0ll;
    for (int i = 0; i <= q.order_x(); ++i) {
        for (int j = 0; j <= q.order_y(); ++j) {
            BigInt acc = num.at(i, j);
            for (int k = 0; k <= std::min(i, den.order_x()); ++k) {
                for (int l = 0; l <= std::min(j, den.order_y()); ++l) {
                    if (k == 0 && l == 0) continue;
                    const BigInt& d = den.at(k, l);
                    if (d.is_zero()) continue;
                    acc -= d * q.at(i - k, j - l);
                }
            }
            q.set(i, j, acc.divided_exact(d0ll));
        }
    }
    return q;
}

Series vertex_series(int a, int b, int order) {
    Series num(1, 0);
    num.set(0, BigInt(1));
    Series den(1, 2);
    den.set(0, BigInt(1));
    den.set(1, BigInt(-a));
    den.set(2, BigInt(-b));
    return expand_rational_series(num, den, order);
}

Series edge_series(int a, int b, int order) {
    Series num(1, 2);
    num.set(1, BigInt(a - 1));
    num.set(2, BigInt(b));
    // (1 - ax - bx^2)^2
    Series den(1, 4);
    den.set(0, BigInt(1));
    den.set(1, BigInt(-2LL * a));
    den.set(2, BigInt(static_cast<long long>(a) * a - 2LL * b));
    den.set(3, BigInt(2LL * a * b));
    den.set(4, BigInt(static_cast<long long>(b) * b));
    return expand_rational_series(num, den, order);
}

Series degree_series(int a, int b, int order_x, int order_y) {
    if (a >= 2) {
        // 1 / (1 - (2y + (a-2)y^2) x - (y + (b-2)y^2 + y^3) x^2)
        Series num(2, 0, 0);
        num.set(0, 0, BigInt(1));
        Series den(2, 2, 3);
        den.set(0, 0, BigInt(1));
        den.set(1, 1, BigInt(-2));
        den.set(1, 2, BigInt(-(a - 2)));
        den.set(2, 1, BigInt(-1));
        den.set(2, 2, BigInt(-(b - 2)));
        den.set(2, 3, BigInt(-1));
        return expand_rational_series(num, den, order_x, order_y);
    }
    // (1 - (y-1)x) /
    // (1 - xy - (y + (b-1)y^2) x^2 - (y + (b-2)y^2 - (b-1)y^3) x^3)
    Series num(2, 1, 1);
    num.set(0, 0, BigInt(1));
    num.set(1, 0, BigInt(1));
    num.set(1, 1, BigInt(-1));
    Series den(2, 3, 3);
    den.set(0, 0, BigInt(1));
    den.set(1, 1, BigInt(-1));
    den.set(2, 1, BigInt(-1));
    den.set(2, 2, BigInt(-(b - 1)));
    den.set(3, 1, BigInt(-1));
    den.set(3, 2, BigInt(-(b - 2)));
    den.set(3, 3, BigInt(b - 1));
    return expand_rational_series(num, den, order_x, order_y);
}

Series cube_series(int a, int b, int order_x, int order_y) {
    // 1 / (1 - ax - bx^2 - (a-1)xy - bx^2 y)
    Series num(2, 0, 0);
    num.set(0, 0, BigInt(1));
    Series den(2, 2, 1);
    den.set(0, 0, BigInt(1));
    den.set(1, 0, BigInt(-a));
    den.set(2, 0, BigInt(-b));
    den.set(1, 1, BigInt(-(a - 1)));
    den.set(2, 1, BigInt(-b));
    return expand_rational_series(num, den, order_x, order_y);
}

} // namespace horadam
