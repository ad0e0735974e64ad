#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace ehrhart {

// Coefficient vector (h*_0, ..., h*_d) of the Ehrhart series numerator.
// Trailing zeros are kept; the degree s is always derived on demand.
struct HStarVector {
    int d = 0;
    std::vector<Int> coeffs;  // size d + 1

    HStarVector() : coeffs{1} {}

    explicit HStarVector(std::vector<Int> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("h*: empty vector");
        d = static_cast<int>(coeffs.size()) - 1;
        if (coeffs[0] != 1) throw std::invalid_argument("h*: h*_0 must be 1");
        for (const auto& x : coeffs)
            if (x < 0) throw std::invalid_argument("h*: negative coefficient");
    }

    int degree() const {
        for (int i = d; i >= 0; --i)
            if (coeffs[i] != 0) return i;
        return 0;
    }

    int codegree() const { return d + 1 - degree(); }

    bool has_interior_point() const { return coeffs[d] > 0; }

    bool operator==(const HStarVector& o) const {
        return d == o.d && coeffs == o.coeffs;
    }
};

inline std::pair<int, int> degree_codegree(const HStarVector& h) {
    return {h.degree(), h.codegree()};
}

// The unique pair of palindromic polynomials with
// (1 + t + ... + t^(l-1)) h*(t) = a(t) + t^l b(t), l = d + 1 - s.
struct ABDecomposition {
    int d = 0;
    int s = 0;
    std::vector<Int> a;  // size d + 1, a_i = a_{d-i}
    std::vector<Int> b;  // size s, b_i = b_{s-1-i}; empty when s = 0
};

inline ABDecomposition decompose(const HStarVector& h) {
    ABDecomposition ab;
    ab.d = h.d;
    ab.s = h.degree();
    const int d = h.d, s = ab.s;

    // Prefix sums: pre[i] = h_0 + ... + h_{i-1}.
    std::vector<Int> pre(d + 2, 0);
    for (int i = 0; i <= d; ++i) pre[i + 1] = pre[i] + h.coeffs[i];
    auto range_sum = [&](int lo, int hi) {  // sum of h_j for lo <= j <= hi
        lo = std::max(lo, 0);
        if (hi < lo) return Int(0);
        return Int(pre[hi + 1] - pre[lo]);
    };

    ab.a.resize(d + 1);
    for (int i = -1; i <= d - 1; ++i)
        ab.a[i + 1] = range_sum(0, i + 1) - range_sum(d - i, d);
    ab.b.resize(s);
    for (int i = 0; i < s; ++i)
        ab.b[i] = -range_sum(0, i) + range_sum(s - i, s);
    return ab;
}

inline void validate(const ABDecomposition& ab) {
    if (static_cast<int>(ab.a.size()) != ab.d + 1 ||
        static_cast<int>(ab.b.size()) != ab.s)
        throw std::invalid_argument("a/b decomposition: wrong lengths");
    if (ab.s > ab.d || ab.s < 0)
        throw std::invalid_argument("a/b decomposition: bad degree");
    if (ab.a[0] != 1) throw std::invalid_argument("a/b decomposition: a_0 != 1");
    for (int i = 0; i <= ab.d; ++i)
        if (ab.a[i] != ab.a[ab.d - i])
            throw std::invalid_argument("a/b decomposition: a not palindromic");
    for (int i = 0; i < ab.s; ++i)
        if (ab.b[i] != ab.b[ab.s - 1 - i])
            throw std::invalid_argument("a/b decomposition: b not palindromic");
}

inline HStarVector recompose(const ABDecomposition& ab) {
    validate(ab);
    const int d = ab.d, s = ab.s, l = d + 1 - s;

    // c(t) = a(t) + t^l b(t), then divide by 1 + t + ... + t^(l-1).
    std::vector<Int> rem(d + l, 0);
    for (int i = 0; i <= d; ++i) rem[i] = ab.a[i];
    for (int i = 0; i < s; ++i) rem[l + i] += ab.b[i];

    std::vector<Int> h(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        h[i] = rem[i];
        for (int j = 0; j < l; ++j) rem[i + j] -= h[i];
    }
    for (int i = d + 1; i < d + l; ++i)
        if (rem[i] != 0)
            throw std::invalid_argument("recompose: inconsistent decomposition");
    try {
        return HStarVector(std::move(h));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("recompose: inconsistent decomposition");
    }
}

// f_P(m) = sum_i h*_i C(m + d - i, d) for m = 0..m_max.
inline std::vector<Int> ehrhart_values(const HStarVector& h, int m_max) {
    std::vector<Int> out;
    out.reserve(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        Int f = 0;
        for (int i = 0; i <= h.d; ++i)
            f += h.coeffs[i] * binomial(Int(m + h.d - i), h.d);
        out.push_back(f);
    }
    return out;
}

}  // namespace ehrhart
