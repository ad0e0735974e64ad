#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "numeric.hpp"

namespace ehrhart {

using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

inline IMat identity_imat(std::size_t n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Smith normal form of a square integer matrix: U * A * V = D with U, V
// unimodular and D diagonal with non-negative entries d_0 | d_1 | ... .
struct SmithForm {
    IMat u;
    IMat v;
    std::vector<Int> diagonal;
};

inline SmithForm smith_normal_form(IMat a) {
    const std::size_t n = a.size();
    IMat u = identity_imat(n);
    IMat v = identity_imat(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(a[k][i], a[k][j]);
            std::swap(v[k][i], v[k][j]);
        }
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < n; ++k) {
            a[dst][k] += c * a[src][k];
            u[dst][k] += c * u[src][k];
        }
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < n; ++k) {
            a[k][dst] += c * a[k][src];
            v[k][dst] += c * v[k][src];
        }
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) {
            a[i][k] = -a[i][k];
            u[i][k] = -u[i][k];
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest non-zero entry of the trailing submatrix becomes pivot.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 &&
                        (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i; pj = j; found = true;
                    }
            if (!found) break;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            if (a[t][t] < 0) negate_row(t);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i)
                if (a[i][t] != 0) {
                    add_row(i, t, -floor_div(a[i][t], a[t][t]));
                    clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    add_col(j, t, -floor_div(a[t][j], a[t][t]));
                    clean = false;
                }
            if (!clean) continue;
            // Enforce divisibility of the rest of the submatrix by the pivot.
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
    }

    SmithForm out;
    out.u = std::move(u);
    out.v = std::move(v);
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a[i][i];
    return out;
}

inline std::vector<Int> imat_apply(const IMat& m, const std::vector<Int>& x) {
    std::vector<Int> y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

inline Int imat_det(IMat a) {
    // Fraction-free elimination would do; the SNF diagonal is simpler here.
    auto snf = smith_normal_form(std::move(a));
    Int det = 1;
    for (const auto& d : snf.diagonal) det *= d;
    return det;
}

// Solve the square rational system m * x = rhs. Returns nothing when the
// matrix is singular.
inline std::optional<std::vector<Rat>> solve_square(QMat m, std::vector<Rat> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat p = m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] /= p;
        rhs[col] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

inline std::size_t rank(QMat m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Exact rational inverse of a square matrix.
inline std::optional<QMat> invert_square(const QMat& m) {
    const std::size_t n = m.size();
    QMat inv(n, std::vector<Rat>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> e(n, 0);
        e[j] = 1;
        auto col = solve_square(m, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
    }
    return inv;
}

// Does target = sum_k c_k * columns[k] have a solution with all c_k >= 0?
// Phase-one simplex with Bland's rule over exact rationals; returns the
// multiplier certificate when one exists.
inline std::optional<std::vector<Rat>>
nonnegative_combination(const std::vector<std::vector<Rat>>& columns,
                        std::vector<Rat> target) {
    const std::size_t m = target.size();
    const std::size_t n = columns.size();
    for (const auto& col : columns)
        if (col.size() != m)
            throw std::invalid_argument("nonnegative_combination: column size mismatch");

    // Tableau rows: [ A | I | b ] with b >= 0; minimize the artificial sum.
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, 0));
    for (std::size_t i = 0; i < m; ++i) {
        Rat sign = target[i] < 0 ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * columns[j][i];
        t[i][n + i] = 1;
        t[i][n + m] = sign * target[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Objective row: cost of each column under the artificial objective.
    auto reduced_cost = [&](std::size_t j) {
        Rat c = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n) c -= t[i][j];
        if (j >= n) c += 1;  // artificials carry unit cost
        return c;
    };

    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (reduced_cost(j) < 0) { enter = j; break; }  // Bland: lowest index
        if (enter == n + m) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Rat cur = t[i][n + m] / t[i][enter];
            Rat best = t[leave][n + m] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) return std::nullopt;  // unbounded: cannot happen in phase one
        Rat p = t[leave][enter];
        for (auto& x : t[leave]) x /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += t[i][n + m];
    if (objective != 0) return std::nullopt;

    std::vector<Rat> c(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) c[basis[i]] = t[i][n + m];
    return c;
}

}  // namespace ehrhart
