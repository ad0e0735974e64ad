#pragma once

#include <set>
#include <stdexcept>

#include "lattice.hpp"

namespace ehrhart {

// Subset of a box group, members identified by element index.
struct GroupSubset {
    const BoxGroup* ambient = nullptr;
    std::set<std::size_t> members;

    GroupSubset() = default;
    GroupSubset(const BoxGroup& g, std::set<std::size_t> m)
        : ambient(&g), members(std::move(m)) {
        for (auto i : members)
            if (i >= g.size())
                throw std::invalid_argument("group subset: member out of range");
    }
};

inline GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("sumset: ambient group mismatch");
    GroupSubset out;
    out.ambient = a.ambient;
    for (auto i : a.members)
        for (auto j : b.members) out.members.insert(a.ambient->add(i, j));
    return out;
}

inline GroupSubset negate(const GroupSubset& a) {
    GroupSubset out;
    out.ambient = a.ambient;
    for (auto i : a.members) out.members.insert(a.ambient->negate(i));
    return out;
}

struct KempermanVerdict {
    bool hypothesis_holds = false;  // A intersect (-B) = {0}
    bool bound_holds = false;       // |A+B| >= |A| + |B| - 1
    std::size_t sum_size = 0;
};

inline KempermanVerdict kemperman_scherk_check(const GroupSubset& a,
                                               const GroupSubset& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("kemperman check: ambient group mismatch");
    const BoxGroup& g = *a.ambient;
    std::size_t zero = g.index_of(std::vector<Int>(g.diagonal.size(), 0));
    if (!a.members.count(zero) || !b.members.count(zero))
        throw std::invalid_argument("kemperman check: both sets must contain 0");

    KempermanVerdict v;
    auto nb = negate(b);
    v.hypothesis_holds = true;
    for (auto i : a.members)
        if (i != zero && nb.members.count(i)) { v.hypothesis_holds = false; break; }
    v.sum_size = sumset(a, b).members.size();
    v.bound_holds = v.sum_size + 1 >= a.members.size() + b.members.size();
    return v;
}

namespace detail {

// (k, l) class of each non-identity element under the plain convention,
// or (-1, -1) for the identity.
inline std::vector<std::pair<int, int>> plain_classes(const BoxGroup& g, int d) {
    std::vector<std::pair<int, int>> cls(g.size(), {-1, -1});
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.elements[i];
        if (e.age == 0 && e.coage == 0) continue;
        cls[i] = {e.age - 2, d - 2 - e.coage};
    }
    return cls;
}

}  // namespace detail

// Sums of a (k,l)-class element and an (m,n)-class element land in classes
// (p,q) with p <= k + m + 2 and q <= min(l + m, k + n) + 2.
inline bool verify_flight(const BoxGroup& g, int d, int k, int l, int m, int n,
                          bool strict = true) {
    if (strict) require_terminal(g);
    auto cls = detail::plain_classes(g, d);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (cls[i] != std::make_pair(k, l)) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (cls[j] != std::make_pair(m, n)) continue;
            auto s = g.add(i, j);
            auto [p, q] = cls[s];
            if (p < 0) continue;  // sum is the identity
            if (p > k + m + 2 || q > std::min(l + m, k + n) + 2) return false;
        }
    }
    return true;
}

// Every pair of classes at once.
inline bool verify_flight_all(const BoxGroup& g, int d, bool strict = true) {
    if (strict) require_terminal(g);
    auto cls = detail::plain_classes(g, d);
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [k, l] = cls[i];
        if (k < 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            auto [m, n] = cls[j];
            if (m < 0) continue;
            auto [p, q] = cls[g.add(i, j)];
            if (p < 0) continue;
            if (p > k + m + 2 || q > std::min(l + m, k + n) + 2) return false;
        }
    }
    return true;
}

// Counting inequality between the low-age classes and the classes just above
// age r' + 2. The dimension bound is exposed: the default offset 7 is the
// stated bound 2r' + r + 7; offset 5 is the remarked sharpening.
inline bool verify_keyD(const BoxGroup& g, int d, int r, int rp, int i, int j,
                        bool strict = true, int dim_bound_offset = 7) {
    if (!(0 <= r && r <= rp))
        throw std::invalid_argument("keyD: need 0 <= r <= r'");
    if (d < 2 * rp + r + dim_bound_offset)
        throw std::invalid_argument("keyD: dimension below bound");
    if (!(0 <= i && i <= r && 0 <= j && j <= r + rp - i))
        throw std::invalid_argument("keyD: (i, j) out of range");
    auto prof = age_profile_plain(g, d, strict);
    auto count = [&](int k, int l) {
        auto it = prof.plain.find({k, l});
        return it == prof.plain.end() ? Int(0) : it->second;
    };
    Int lhs = 0, rhs = 0;
    for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= i + j - k; ++l) lhs += count(k, l);
    for (int q = 0; q <= i + j + 1; ++q) rhs += count(rp + 1, rp + 1 + q);
    for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= i + j - p; ++q) rhs += count(rp + 2 + p, rp + 2 + q);
    return lhs <= rhs;
}

enum class KeyD4Variant { a, b, c };

// Interior-point analogues over the boundary/apex split of the age classes.
inline bool verify_keyD4(const BoxGroup& g, int d, KeyD4Variant variant, int r,
                         int rp, int alpha, int i, int j, std::size_t apex = 0,
                         bool strict = true) {
    if (!(0 <= r && r <= rp))
        throw std::invalid_argument("keyD4: need 0 <= r <= r'");
    if (!(0 <= alpha && alpha <= r + 1))
        throw std::invalid_argument("keyD4: alpha out of range");
    if (!(0 <= i && i <= r && 0 <= j && j <= r + rp - i))
        throw std::invalid_argument("keyD4: (i, j) out of range");
    int bound = variant == KeyD4Variant::a   ? 2 * rp + r + 7
                : variant == KeyD4Variant::b ? 2 * rp + r + 6
                                             : 2 * rp + r + alpha + 6;
    if (d < bound) throw std::invalid_argument("keyD4: dimension below bound");

    auto prof = age_profile_ab(g, d, apex, strict);
    auto na = [&](int k, int l) {
        auto it = prof.a.find({k, l});
        return it == prof.a.end() ? Int(0) : it->second;
    };
    auto nb = [&](int k, int l) {
        auto it = prof.b.find({k, l});
        return it == prof.b.end() ? Int(0) : it->second;
    };

    Int lhs = 0, rhs = 0;
    switch (variant) {
        case KeyD4Variant::a:
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= i + j - k; ++l)
                    lhs += na(k, l) + nb(k - alpha, l - alpha);
            for (int q = 0; q <= i + j + 1; ++q)
                rhs += na(rp + 1, rp + 1 + q) + nb(rp + 1 - alpha, rp + 1 + q - alpha);
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= i + j - p; ++q)
                    rhs += na(rp + 2 + p, rp + 2 + q) +
                           nb(rp + 2 - alpha + p, rp + 2 - alpha + q);
            break;
        case KeyD4Variant::b:
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= i + j - k; ++l)
                    lhs += na(k - 1, l - 1) + nb(k, l);
            for (int q = 0; q <= i + j + 1; ++q) rhs += nb(rp + 1, rp + 1 + q);
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= i + j - p; ++q)
                    rhs += na(rp + 1 + p, rp + 1 + q) + nb(rp + 2 + p, rp + 2 + q);
            break;
        case KeyD4Variant::c:
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= i + j - k; ++l) lhs += nb(k, l);
            for (int p = alpha; p <= i; ++p)
                for (int q = 0; q <= i + j - p; ++q) rhs += na(rp + 1 + p, rp + 1 + q);
            for (int p = 0; p <= alpha; ++p)
                for (int q = 0; q <= alpha + i + j + 1; ++q)
                    rhs += nb(rp + 1 + p, rp + 1 + q);
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= i + j - p; ++q)
                    rhs += nb(rp + alpha + 2 + p, rp + alpha + 2 + q);
            break;
    }
    return lhs <= rhs;
}

}  // namespace ehrhart
