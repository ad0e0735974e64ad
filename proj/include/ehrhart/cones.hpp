#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hstar.hpp"
#include "lattice.hpp"
#include "linalg.hpp"

namespace ehrhart {

// Cone given by its ray list; rays are primitive integer vectors.
struct RayCone {
    int d = 0;
    std::vector<std::vector<Int>> rays;
};

// x_i = h*_i - 1 for i = 1..d, defined when an interior point exists.
inline std::vector<Int> x_vector(const HStarVector& h) {
    if (!h.has_interior_point())
        throw std::invalid_argument("x vector: interior lattice point required");
    std::vector<Int> x(h.d);
    for (int i = 1; i <= h.d; ++i) x[i - 1] = h.coeffs[i] - 1;
    return x;
}

// Facet normals of the cone cut out by the interior-point chain inequalities
// in x-coordinates: 0 <= x_d <= x_1 and, for i = 1..floor((d-1)/2),
// x_1 + ... + x_i <= x_{d-1} + ... + x_{d-i} <= x_2 + ... + x_{i+1}.
// For odd d the last right-hand row repeats an earlier one; after removing
// duplicates exactly d facets remain and the cone is simplicial.
inline QMat interior_chain_facets(int d) {
    if (d < 1) throw std::invalid_argument("chain facets: d >= 1 required");
    std::vector<std::vector<Rat>> rows;
    auto push_unique = [&](std::vector<Rat> row) {
        if (std::all_of(row.begin(), row.end(),
                        [](const Rat& x) { return x == 0; }))
            return;  // odd d makes the middle upper bound trivial
        if (std::find(rows.begin(), rows.end(), row) == rows.end())
            rows.push_back(std::move(row));
    };
    {
        std::vector<Rat> row(d, 0);
        row[d - 1] = 1;
        push_unique(std::move(row));
    }
    if (d >= 2) {
        std::vector<Rat> row(d, 0);
        row[0] = 1;
        row[d - 1] = -1;
        push_unique(std::move(row));
    }
    for (int i = 1; 2 * i <= d - 1; ++i) {
        std::vector<Rat> lo(d, 0), hi(d, 0);
        for (int j = 1; j <= i; ++j) {
            lo[j - 1] -= 1;          // -x_j
            lo[d - 1 - j] += 1;      // +x_{d-j}
            hi[d - 1 - j] -= 1;      // -x_{d-j}
            hi[j] += 1;              // +x_{j+1}
        }
        push_unique(std::move(lo));
        push_unique(std::move(hi));
    }
    if (static_cast<int>(rows.size()) != d)
        throw std::logic_error("chain facets: expected a simplicial system");
    return rows;
}

namespace detail {

inline std::vector<Int> primitive(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const auto& x : v)
        lcm_den = lcm_den / gcd(lcm_den, denominator(x)) * denominator(x);
    std::vector<Int> w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(numerator(x) * (lcm_den / denominator(x)));
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

}  // namespace detail

// Rays of the simplicial chain cone: the primitive columns of the inverse of
// the facet matrix. The source's verbatim ray families omit the middle unit
// vector for odd d >= 5, so the rays are recovered from the facets instead.
inline RayCone cprime_rays(int d) {
    RayCone cone;
    cone.d = d;
    auto inv = invert_square(interior_chain_facets(d));
    if (!inv) throw std::logic_error("chain cone: facet matrix singular");
    for (int j = 0; j < d; ++j) {
        std::vector<Rat> col(d);
        for (int i = 0; i < d; ++i) col[i] = (*inv)[i][j];
        cone.rays.push_back(detail::primitive(col));
    }
    std::sort(cone.rays.begin(), cone.rays.end());
    return cone;
}

// The seven rays of the dimension-6 strictly balanced cone.
inline RayCone cdoubleprime6_rays() {
    RayCone cone;
    cone.d = 6;
    cone.rays = {
        {0, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 0, 0},
        {0, 1, 1, 0, 1, 0}, {1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1},
        {0, 2, 1, 1, 2, 0},
    };
    return cone;
}

// Section predicate for the symmetric slice: x_d = 0 and x_i = x_{d-i}.
inline bool in_symmetric_section(const std::vector<Int>& x) {
    const int d = static_cast<int>(x.size());
    if (d == 0 || x[d - 1] != 0) return false;
    for (int i = 1; i < d; ++i)
        if (x[i - 1] != x[d - i - 1]) return false;
    return true;
}

// x_vector(h*(P(alpha))) equals the expected vector exactly.
inline bool realize(const std::vector<Int>& alpha,
                    const std::vector<Int>& expected_x) {
    PayneSimplex p(alpha);
    return x_vector(payne_hstar(p)) == expected_x;
}

// Projective comparison modulo the all-ones direction: both vectors are
// shifted so their minimum entry is 0 and must then agree up to a positive
// rational scalar.
inline bool projectively_equal(const std::vector<Int>& u,
                               const std::vector<Int>& v) {
    if (u.size() != v.size() || u.empty()) return false;
    auto shift = [](std::vector<Int> w) {
        Int lo = *std::min_element(w.begin(), w.end());
        for (auto& x : w) x -= lo;
        return w;
    };
    auto a = shift(u), b = shift(v);
    Rat scale = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (a[i] == 0) continue;
        Rat s(a[i], b[i]);
        if (scale == 0)
            scale = s;
        else if (s != scale)
            return false;
    }
    return true;
}

inline bool realize_projective(const std::vector<Int>& alpha,
                               const std::vector<Int>& expected_x) {
    PayneSimplex p(alpha);
    return projectively_equal(x_vector(payne_hstar(p)), expected_x);
}

// Membership in a simplicial cone with the non-negative coefficient vector
// as certificate.
inline std::optional<std::vector<Rat>>
cone_membership(const std::vector<Int>& x, const RayCone& cone) {
    if (static_cast<int>(cone.rays.size()) != cone.d)
        throw std::invalid_argument("cone membership: simplicial cone required");
    if (static_cast<int>(x.size()) != cone.d)
        throw std::invalid_argument("cone membership: dimension mismatch");
    QMat m(cone.d, std::vector<Rat>(cone.d));
    std::vector<Rat> rhs(cone.d);
    for (int i = 0; i < cone.d; ++i) {
        for (int j = 0; j < cone.d; ++j) m[i][j] = Rat(cone.rays[j][i]);
        rhs[i] = Rat(x[i]);
    }
    auto c = solve_square(std::move(m), std::move(rhs));
    if (!c) return std::nullopt;
    for (const auto& v : *c)
        if (v < 0) return std::nullopt;
    return c;
}

}  // namespace ehrhart
