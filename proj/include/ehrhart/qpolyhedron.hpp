#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"

namespace ehrhart {

// The rational polyhedron Q(r, r') in R^(r+r'+1): non-negative tuples
// satisfying the four condition families. For r < 0 it degenerates to the
// origin (with the empty tuple when r + r' + 1 <= 0).
struct QPolyhedron {
    int r = 0;
    int rp = 0;
    int n = 0;  // number of variables, max(r + r' + 1, 0)
    bool origin_only = false;
    // row . x >= rhs
    std::vector<std::pair<std::vector<Rat>, Rat>> constraints;
};

inline QPolyhedron q_polyhedron(int r, int rp) {
    if (r > rp) throw std::invalid_argument("Q(r,r'): need r <= r'");
    QPolyhedron q;
    q.r = r;
    q.rp = rp;
    q.n = std::max(r + rp + 1, 0);
    if (r < 0) {
        q.origin_only = true;
        return q;
    }
    const int n = q.n;
    auto unit = [&](int i) {
        std::vector<Rat> row(n, 0);
        row[i] = 1;
        return row;
    };
    auto range_row = [&](int lo, int hi) {
        std::vector<Rat> row(n, 0);
        for (int i = lo; i <= hi; ++i) row[i] = 1;
        return row;
    };
    for (int i = 0; i < n; ++i) q.constraints.push_back({unit(i), Rat(0)});
    for (int i = 0; i <= r; ++i) q.constraints.push_back({unit(i), Rat(1)});
    for (int i = r + 1; i <= (r + rp) / 2; ++i)
        q.constraints.push_back({unit(i), Rat(r + 1, 2 * i + 1)});
    for (int i = 0; i <= r - 1; ++i)
        q.constraints.push_back({range_row(i, 2 * r - i), Rat(2 * r - 2 * i + 1)});
    for (int i = r + 1; 2 * i < r + rp; ++i)
        q.constraints.push_back(
            {range_row(i, r + rp - i),
             Rat(r + 1) - Rat(2 * i) * Rat(r + 1, r + rp + 1)});
    return q;
}

inline bool q_contains(const QPolyhedron& q, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != q.n) return false;
    if (q.origin_only) {
        for (const auto& v : x)
            if (v != 0) return false;
        return true;
    }
    for (const auto& [row, rhs] : q.constraints) {
        Rat dot = 0;
        for (int i = 0; i < q.n; ++i) dot += row[i] * x[i];
        if (dot < rhs) return false;
    }
    return true;
}

// Exact vertex enumeration by exhaustive active sets: solve every full-rank
// n-subset of constraints as equalities, keep the feasible solutions,
// deduplicate and sort lexicographically.
inline std::vector<std::vector<Rat>> vertices(const QPolyhedron& q) {
    if (q.origin_only || q.n == 0)
        return {std::vector<Rat>(static_cast<std::size_t>(q.n), Rat(0))};
    const int n = q.n;
    const int m = static_cast<int>(q.constraints.size());
    std::set<std::vector<Rat>> found;
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
        QMat mat(n, std::vector<Rat>(n));
        std::vector<Rat> rhs(n);
        for (int i = 0; i < n; ++i) {
            mat[i] = q.constraints[pick[i]].first;
            rhs[i] = q.constraints[pick[i]].second;
        }
        if (auto x = solve_square(std::move(mat), std::move(rhs)))
            if (q_contains(q, *x)) found.insert(*x);
        // next combination
        int i = n - 1;
        while (i >= 0 && pick[i] == m - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

// True when x lies in q and the constraints active at x have full rank.
inline bool is_vertex_of(const QPolyhedron& q, const std::vector<Rat>& x) {
    if (!q_contains(q, x)) return false;
    if (q.origin_only || q.n == 0) return true;
    QMat active;
    for (const auto& [row, rhs] : q.constraints) {
        Rat dot = 0;
        for (int i = 0; i < q.n; ++i) dot += row[i] * x[i];
        if (dot == rhs) active.push_back(row);
    }
    return rank(std::move(active)) == static_cast<std::size_t>(q.n);
}

// Closed-form vertex set of Q(r, r): e_0 + ... + e_r plus r extra unit hits
// with the i-th landing anywhere in [i, 2r - i]. For r >= 2 some hit choices
// give midpoints of others rather than vertices, so candidates are pruned by
// an active-constraint rank test.
inline std::vector<std::vector<Rat>> swim_vertices(int r) {
    if (r < 0) throw std::invalid_argument("swim vertices: r >= 0 required");
    const int n = 2 * r + 1;
    std::set<std::vector<Rat>> found;
    std::vector<int> k(std::max(r, 0));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            std::vector<Rat> v(n, 0);
            for (int j = 0; j <= r; ++j) v[j] += 1;
            for (int j = 0; j < r; ++j) v[k[j]] += 1;
            found.insert(std::move(v));
            return;
        }
        for (k[i] = i; k[i] <= 2 * r - i; ++k[i]) self(self, i + 1);
    };
    rec(rec, 0);
    auto q = q_polyhedron(r, r);
    std::vector<std::vector<Rat>> out;
    for (const auto& v : found)
        if (is_vertex_of(q, v)) out.push_back(v);
    return out;
}

// Closed-form vertex set of Q(0, r').
inline std::vector<std::vector<Rat>> swum_vertices(int rp) {
    if (rp < 0) throw std::invalid_argument("swum vertices: r' >= 0 required");
    const int n = rp + 1;
    const int fixed_hi = rp / 2;
    const int lo = (rp + 3) / 4;                  // ceil(r'/4)
    const int hi = rp >= 1 ? (rp - 1) / 2 : -1;   // floor((r'-1)/2)
    std::set<std::vector<Rat>> found;
    std::vector<int> k(std::max(hi - lo + 1, 0));
    auto rec = [&](auto&& self, int i) -> void {
        if (lo + i > hi) {
            std::vector<Rat> v(n, 0);
            for (int j = 0; j <= fixed_hi; ++j) v[j] += Rat(1, 2 * j + 1);
            for (int j = lo; j <= hi; ++j)
                v[k[j - lo]] += Rat(2, rp + 1) - Rat(1, 2 * j + 1);
            found.insert(std::move(v));
            return;
        }
        int j = lo + i;
        for (k[i] = j; k[i] <= rp - j; ++k[i]) self(self, i + 1);
    };
    rec(rec, 0);
    auto q = q_polyhedron(0, rp);
    std::vector<std::vector<Rat>> out;
    for (const auto& v : found)
        if (is_vertex_of(q, v)) out.push_back(v);
    return out;
}

// The 0/1 vector with ones exactly on indices 0..m, m = max(2r, floor((r+r')/2)).
inline std::vector<Rat> plan_vector(int r, int rp) {
    if (!(0 <= r && r <= rp)) throw std::invalid_argument("plan vector: 0 <= r <= r'");
    int m = std::max(2 * r, (r + rp) / 2);
    std::vector<Rat> v(r + rp + 1, 0);
    for (int i = 0; i <= m && i <= r + rp; ++i) v[i] = 1;
    return v;
}

struct HaydenReport {
    bool hypotheses_hold = false;
    bool conclusions_hold = false;
};

// Hypotheses = the four Q(r,r') condition families on lambda; conclusions =
// the two window-sum families over all legal (p, q, i).
inline HaydenReport hayden_check(const std::vector<Rat>& lambda, int r, int rp) {
    if (!(0 <= r && r <= rp) || static_cast<int>(lambda.size()) != r + rp + 1)
        throw std::invalid_argument("hayden check: bad parameters");
    HaydenReport rep;
    auto q = q_polyhedron(r, rp);
    rep.hypotheses_hold = q_contains(q, lambda);

    auto window = [&](int lo, int hi) {
        Rat s = 0;
        for (int i = lo; i <= hi; ++i) s += lambda[i];
        return s;
    };
    rep.conclusions_hold = true;
    for (int p = 0; p <= r && rep.conclusions_hold; ++p) {
        for (int q2 = p; q2 <= 2 * r - p; ++q2)
            for (int i = 0; 2 * i <= q2 - p; ++i)
                if (window(p + i, q2 - i) < Rat(q2 - p - 2 * i + 1)) {
                    rep.conclusions_hold = false;
                }
        for (int q2 = 2 * r - p + 1; q2 <= r + rp - p; ++q2)
            for (int i = 0; 2 * i <= q2 - p; ++i) {
                Rat bound = Rat(r - p + 1) -
                            Rat(2 * i) * Rat(r - p + 1, q2 - p + 1);
                if (window(p + i, q2 - i) < bound) rep.conclusions_hold = false;
            }
    }
    return rep;
}

}  // namespace ehrhart
