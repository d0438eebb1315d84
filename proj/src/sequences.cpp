#include "horadam/sequences.hpp"

#include <algorithm>

#include "horadam/errors.hpp"
#include "horadam/words.hpp"

namespace horadam {

namespace {

// s_m for -? <= m <= n in one pass; s_m = 0 for m < 0.
std::vector<BigInt> vertex_counts_upto(const Params& p, int n) {
    std::vector<BigInt> s;
    s.reserve(static_cast<std::size_t>(n) + 1);
    s.push_back(BigInt(1));
    if (n >= 1) s.push_back(BigInt(p.a));
    for (int m = 2; m <= n; ++m)
        s.push_back(BigInt(p.a) * s[m - 1] + BigInt(p.b) * s[m - 2]);
    return s;
}

BigInt table_at(const std::map<int, BigInt>& row, int k) {
    auto it = row.find(k);
    return it == row.end() ? BigInt() : it->second;
}

// Degree of w read off the adjacency rule: count of valid +-1 letter edits.
int word_degree(const Word& w, const Params& p) {
    int deg = 0;
    Word tmp = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (int delta : {-1, +1}) {
            int x = static_cast<int>(w[i]) + delta;
            if (x < 0 || x > p.top_letter()) continue;
            tmp[i] = static_cast<Letter>(x);
            if (is_valid_word(tmp, p)) ++deg;
        }
        tmp[i] = w[i];
    }
    return deg;
}

std::map<int, BigInt> brute_degree_row(const Params& p) {
    std::map<int, BigInt> row;
    for (const Word& w : enumerate_words(p)) row[word_degree(w, p)] += BigInt(1);
    return row;
}

void drop_zero_entries(std::map<int, BigInt>& row) {
    for (auto it = row.begin(); it != row.end();)
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
}

} // namespace

BigInt vertex_count(const Params& p) {
    validate(p);
    return vertex_counts_upto(p, p.n).back();
}

BigInt vertex_count_closed(const Params& p) {
    validate(p);
    BigInt total;
    for (int k = 0; 2 * k <= p.n; ++k)
        total += binomial(p.n - k, k) * pow(BigInt(p.a), static_cast<unsigned>(p.n - 2 * k)) *
                 pow(BigInt(p.b), static_cast<unsigned>(k));
    return total;
}

BigInt fibonacci_number(long long m) {
    if (m < 0) throw parameter_error("fibonacci_number: m must be >= 0");
    BigInt prev(0), cur(1);
    if (m == 0) return prev;
    for (long long i = 1; i < m; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt edge_count(const Params& p) {
    validate(p);
    if (p.n == 0) return BigInt();
    std::vector<BigInt> s = vertex_counts_upto(p, p.n);
    BigInt e_prev2(0);          // e_0
    BigInt e_prev(p.a - 1);     // e_1
    if (p.n == 1) return e_prev;
    BigInt e;
    for (int m = 2; m <= p.n; ++m) {
        e = BigInt(p.a) * e_prev + BigInt(p.b) * e_prev2 + s[m] - s[m - 1];
        e_prev2 = std::move(e_prev);
        e_prev = e;
    }
    return e;
}

BigInt edge_count_convolution(const Params& p) {
    validate(p);
    if (p.n == 0) return BigInt();
    std::vector<BigInt> s = vertex_counts_upto(p, p.n);
    BigInt total;
    for (int k = 0; k <= p.n - 1; ++k)
        total += s[k] * (s[p.n - k] - s[p.n - 1 - k]);
    return total;
}

BigInt edge_count_binomial(const Params& p) {
    validate(p);
    if (p.n == 0) return BigInt();
    BigInt total;
    for (int k = 0; k <= p.n; ++k) {
        BigInt term = BigInt((p.n + k + 1) / 2) * binomial((p.n + k) / 2, k) *
                      pow(BigInt(p.a), static_cast<unsigned>(k)) *
                      pow(BigInt(p.b), static_cast<unsigned>((p.n - k) / 2));
        if ((p.n - k) % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

CountTable degree_table(const Params& p) {
    validate(p);
    // Rows 0..min(3, n) by direct counting over the vertex set; the
    // theorems' printed initial values for a = 1 disagree with the graphs.
    std::vector<std::map<int, BigInt>> rows;
    for (int m = 0; m <= std::min(p.n, 3); ++m)
        rows.push_back(brute_degree_row({p.a, p.b, m}));

    for (int m = static_cast<int>(rows.size()); m <= p.n; ++m) {
        std::map<int, BigInt> row;
        int kmax = 2 * m; // degrees never exceed 2n
        if (p.a == 1) {
            const auto& r1 = rows[m - 1];
            const auto& r2 = rows[m - 2];
            const auto& r3 = rows[m - 3];
            for (int k = 0; k <= kmax; ++k) {
                BigInt v = table_at(r1, k - 1) + table_at(r2, k - 1) +
                           BigInt(p.b - 1) * table_at(r2, k - 2) + table_at(r3, k - 1) +
                           BigInt(p.b - 2) * table_at(r3, k - 2) -
                           BigInt(p.b - 1) * table_at(r3, k - 3);
                if (!v.is_zero()) row[k] = v;
            }
        } else {
            const auto& r1 = rows[m - 1];
            const auto& r2 = rows[m - 2];
            for (int k = 0; k <= kmax; ++k) {
                BigInt v = BigInt(2) * table_at(r1, k - 1) +
                           BigInt(p.a - 2) * table_at(r1, k - 2) + table_at(r2, k - 1) +
                           BigInt(p.b - 2) * table_at(r2, k - 2) + table_at(r2, k - 3);
                if (!v.is_zero()) row[k] = v;
            }
        }
        rows.push_back(std::move(row));
    }

    CountTable t{p, TableKind::degrees, rows[static_cast<std::size_t>(p.n)]};
    drop_zero_entries(t.values);
    return t;
}

CountTable cube_coefficients(const Params& p) {
    validate(p);
    std::vector<std::vector<BigInt>> c;
    c.push_back({BigInt(1)});                     // n = 0
    if (p.n >= 1) c.push_back({BigInt(p.a), BigInt(p.a - 1)});
    for (int m = 2; m <= p.n; ++m) {
        const auto& c1 = c[m - 1];
        const auto& c2 = c[m - 2];
        std::vector<BigInt> row(std::max(c1.size(), c2.size()) + 1);
        auto at = [](const std::vector<BigInt>& v, int k) {
            return k >= 0 && k < static_cast<int>(v.size()) ? v[k] : BigInt();
        };
        for (int k = 0; k < static_cast<int>(row.size()); ++k)
            row[k] = BigInt(p.a) * at(c1, k) + BigInt(p.b) * at(c2, k) +
                     BigInt(p.a - 1) * at(c1, k - 1) + BigInt(p.b) * at(c2, k - 1);
        while (!row.empty() && row.back().is_zero()) row.pop_back();
        c.push_back(std::move(row));
    }
    auto& row = c[static_cast<std::size_t>(p.n)];
    while (!row.empty() && row.back().is_zero()) row.pop_back();

    CountTable t{p, TableKind::cube_coefficients, {}};
    for (int k = 0; k < static_cast<int>(row.size()); ++k) t.values[k] = row[k];
    return t;
}

BigInt cube_number(const Params& p) {
    validate(p);
    BigInt prev2(1);             // c(P_0)
    if (p.n == 0) return prev2;
    BigInt prev(2 * p.a - 1);    // c(P_1)
    for (int m = 2; m <= p.n; ++m) {
        BigInt cur = BigInt(2 * p.a - 1) * prev + BigInt(2 * p.b) * prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

CubePolynomial cube_polynomial(const Params& p) {
    validate(p);
    std::vector<BigInt> prev2{BigInt(1)};
    std::vector<BigInt> prev{BigInt(p.a), BigInt(p.a - 1)};
    if (p.a == 1) prev.pop_back();
    if (p.n == 0) return {p, prev2};
    for (int m = 2; m <= p.n; ++m) {
        std::vector<BigInt> cur(std::max(prev.size() + 1, prev2.size() + 1));
        for (std::size_t k = 0; k < prev.size(); ++k) {
            cur[k] += BigInt(p.a) * prev[k];
            cur[k + 1] += BigInt(p.a - 1) * prev[k];
        }
        for (std::size_t k = 0; k < prev2.size(); ++k) {
            cur[k] += BigInt(p.b) * prev2[k];
            cur[k + 1] += BigInt(p.b) * prev2[k];
        }
        while (!cur.empty() && cur.back().is_zero()) cur.pop_back();
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return {p, prev};
}

} // namespace horadam
