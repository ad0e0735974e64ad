#pragma once

#include <string>
#include <vector>

#include "cones.hpp"
#include "forms.hpp"
#include "lattice.hpp"

namespace ehrhart {

// Inequality table row: rendered a/b form plus parameter and dimension columns.
struct InequalityRow {
    InequalityItem item;
    std::string inequality;
    std::string params;     // "(r,r')" or "(alpha,r,r')"
    std::string type;       // variant type tag, empty for superA rows
    std::string dimension;  // "d >= N"
};

// Realization table row: weights, the expected x-vector and its dimension.
struct RealizationRow {
    std::vector<Int> alpha;
    std::vector<Int> x;
    int d = 0;
};

namespace detail {

inline std::string paren_list(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace detail

// All non-redundant theorem rows with novel dimension at most max_dim, in the
// printed order: by first novel dimension of the (r, r') block, then by novel
// dimension, then by vertex.
inline std::vector<InequalityRow> table_noint(int max_dim = 12) {
    struct Candidate {
        InequalityItem item;
        int novel = 0;
    };
    std::vector<Candidate> cand;
    for (int rp = 0; 2 * rp + 7 <= max_dim; ++rp)
        for (int r = 0; r <= rp && 2 * rp + r + 7 <= max_dim; ++r)
            for (auto& item : superA_items(r, rp)) {
                auto nd = minimal_novel_dimension(item, max_dim);
                if (!nd) continue;
                cand.push_back({std::move(item), *nd});
            }
    std::sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) {
        if (x.item.d_min != y.item.d_min) return x.item.d_min < y.item.d_min;
        if (x.novel != y.novel) return x.novel < y.novel;
        return x.item.vertex < y.item.vertex;
    });
    std::vector<InequalityRow> rows;
    for (auto& c : cand) {
        InequalityRow row;
        row.inequality = render(c.item.form);
        row.params = detail::paren_list({c.item.r, c.item.rp});
        row.dimension = "d >= " + std::to_string(c.novel);
        row.item = std::move(c.item);
        rows.push_back(std::move(row));
    }
    return rows;
}

// All interior-point theorem rows whose dimension bound is at most max_dim,
// ordered by (bound, type, alpha, r, r').
inline std::vector<InequalityRow> table_int(int max_dim = 8) {
    std::vector<InequalityItem> items;
    for (int rp = 0; 2 * rp + 6 <= max_dim; ++rp)
        for (int r = 0; r <= rp; ++r) {
            for (int alpha = 0; alpha <= r; ++alpha)
                if (2 * rp + r + 7 <= max_dim)
                    for (auto& it : variant_items(1, alpha, r, rp))
                        items.push_back(std::move(it));
            if (r > 0 && 2 * rp + r + 6 <= max_dim)
                for (auto& it : variant_items(2, 0, r, rp))
                    items.push_back(std::move(it));
            for (int alpha = 0; alpha <= r + 1; ++alpha)
                if (2 * rp + r + alpha + 6 <= max_dim)
                    for (auto& it : variant_items(3, alpha, r, rp))
                        items.push_back(std::move(it));
        }
    auto type_no = [](Family f) {
        return f == Family::variant1 ? 1 : f == Family::variant2 ? 2 : 3;
    };
    std::sort(items.begin(), items.end(),
              [&](const InequalityItem& x, const InequalityItem& y) {
                  if (x.d_min != y.d_min) return x.d_min < y.d_min;
                  if (type_no(x.family) != type_no(y.family))
                      return type_no(x.family) < type_no(y.family);
                  return std::tie(x.alpha, x.r, x.rp, x.vertex) <
                         std::tie(y.alpha, y.r, y.rp, y.vertex);
              });
    std::vector<InequalityRow> rows;
    for (auto& it : items) {
        InequalityRow row;
        row.inequality = render(it.form);
        row.params = detail::paren_list({it.alpha, it.r, it.rp});
        row.type = "type " + std::to_string(type_no(it.family));
        row.dimension = "d >= " + std::to_string(it.d_min);
        row.item = std::move(it);
        rows.push_back(std::move(row));
    }
    return rows;
}

// The dimension-7 summary: h-form, a/b-form, and source. The last two rows
// are conjectural and are static data, never produced by the generators.
struct Dim7Row {
    std::string h_form;
    std::string ab_form;
    std::string source;
    bool conjecture = false;
};

inline std::vector<Dim7Row> table_seven() {
    return {
        {"1 = h_0 <= h_7 <= h_1 <= h_6 <= h_2",
         "1 = a_0 <= a_1 <= a_2, 0 <= b_0 <= b_1", "interior chain", false},
        {"h_1 + h_2 <= h_5 + h_6", "b_0 <= b_2", "interior chain", false},
        {"h_1 + h_2 + h_3 <= h_4 + h_5 + h_6", "b_0 <= b_3", "interior chain",
         false},
        {"h_1 + h_2 <= h_4 + h_5", "a_1 + b_0 + b_1 <= a_3 + b_2 + b_3",
         "interior family, type 3", false},
        {"h_1 + h_2 <= h_3 + h_4",
         "a_1 + a_2 + b_0 + b_1 <= a_3 + a_4 + b_2 + b_3",
         "interior family, type 1", false},
        {"2h_5 + h_6 <= h_2 + 2h_3", "a_1 + a_2 <= a_3 + a_4",
         "general family", false},
        {"2h_1 + 3h_2 + h_3 <= h_4 + 3h_5 + 2h_6",
         "2b_0 + b_1 <= b_2 + b_3 + b_4", "interior family, type 3", false},
        {"2h_1 + 3h_2 + 2h_3 <= 2h_4 + 4h_5 + h_6",
         "(1/2)a_1 + b_0 + b_1 <= (1/2)a_2 + b_2 + b_3", "CONJECTURE", true},
        {"4h_1 + 7h_2 + 2h_3 <= 4h_4 + 6h_5 + 3h_6",
         "(1/4)a_1 + (1/4)a_2 + b_0 + b_1 <= (1/2)a_3 + b_2 + b_3",
         "CONJECTURE", true},
    };
}

// Balanced inequalities for palindromic h* in dimension 2..6.
struct ReflexiveRow {
    std::string shape;
    std::string inequalities;
    int d = 0;
};

inline std::vector<ReflexiveRow> table_reflexive() {
    return {
        {"(1,h_1,1)", "1 <= h_1", 2},
        {"(1,h_1,h_1,1)", "1 <= h_1", 3},
        {"(1,h_1,h_2,h_1,1)", "1 <= h_1 <= h_2", 4},
        {"(1,h_1,h_2,h_2,h_1,1)", "1 <= h_1 <= h_2", 5},
        {"(1,h_1,h_2,h_3,h_2,h_1,1)", "1 <= h_1 <= h_2, h_3", 6},
    };
}

// Ray realizations of the interior-point chain cone for d <= 5.
inline std::vector<RealizationRow> table_hoot() {
    return {
        {{2, 1}, {1}, 1},
        {{2, 1, 1}, {1, 0}, 2},
        {{2, 2, 1}, {1, 1}, 2},
        {{2, 1, 1, 1}, {0, 1, 0}, 3},
        {{2, 2, 1, 1}, {1, 1, 0}, 3},
        {{2, 2, 2, 1}, {1, 1, 1}, 3},
        {{2, 1, 1, 1, 1}, {0, 1, 0, 0}, 4},
        {{2, 2, 1, 1, 1}, {0, 1, 1, 0}, 4},
        {{2, 2, 2, 1, 1}, {1, 1, 1, 0}, 4},
        {{2, 2, 2, 2, 1}, {1, 1, 1, 1}, 4},
        {{2, 1, 1, 1, 1, 1}, {0, 0, 1, 0, 0}, 5},
        {{2, 2, 1, 1, 1, 1}, {0, 1, 1, 0, 0}, 5},
        {{3, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 0}, 5},
        {{2, 2, 2, 2, 1, 1}, {1, 1, 1, 1, 0}, 5},
        {{2, 2, 2, 2, 2, 1}, {1, 1, 1, 1, 1}, 5},
    };
}

// Realized vectors in the dimension-6 cone.
inline std::vector<RealizationRow> table_cmon() {
    return {
        {{2, 1, 1, 1, 1, 1, 1}, {0, 0, 1, 0, 0, 0}, 6},
        {{2, 2, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0}, 6},
        {{3, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 0, 0}, 6},
        {{4, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 0, 1, 0}, 6},
        {{2, 2, 2, 2, 2, 1, 1}, {1, 1, 1, 1, 1, 0}, 6},
        {{2, 2, 2, 2, 2, 2, 1}, {1, 1, 1, 1, 1, 1}, 6},
        {{8, 2, 2, 2, 2, 2, 1}, {1, 3, 2, 2, 3, 1}, 6},
    };
}

// Rays of the symmetric (reflexive) section for d <= 6.
inline std::vector<RealizationRow> table_hoot2() {
    return {
        {{2, 1, 1}, {1, 0}, 2},
        {{2, 2, 1, 1}, {1, 1, 0}, 3},
        {{2, 1, 1, 1, 1}, {0, 1, 0, 0}, 4},
        {{2, 2, 2, 1, 1}, {1, 1, 1, 0}, 4},
        {{2, 2, 1, 1, 1, 1}, {0, 1, 1, 0, 0}, 5},
        {{2, 2, 2, 2, 1, 1}, {1, 1, 1, 1, 0}, 5},
        {{2, 1, 1, 1, 1, 1, 1}, {0, 0, 1, 0, 0, 0}, 6},
        {{3, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 0, 0}, 6},
        {{2, 2, 2, 2, 2, 1, 1}, {1, 1, 1, 1, 1, 0}, 6},
    };
}

}  // namespace ehrhart
