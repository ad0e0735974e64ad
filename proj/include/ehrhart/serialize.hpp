#pragma once

#include <json.hpp>

#include "forms.hpp"
#include "hstar.hpp"
#include "lattice.hpp"
#include "qpolyhedron.hpp"
#include "tables.hpp"

namespace ehrhart {

using nlohmann::json;

// Integers are emitted as JSON numbers when they fit exactly, as decimal
// strings otherwise (box group orders can exceed 2^53).
inline json int_json(const Int& x) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (lo < x && x < hi) return static_cast<std::int64_t>(x);
    return x.str();
}

inline json rat_json(const Rat& x) {
    if (denominator(x) == 1) return int_json(numerator(x));
    return to_string(x);
}

inline json int_vector_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_json(x));
    return out;
}

inline json rat_vector_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline json hstar_json(const HStarVector& h) {
    return {{"d", h.d}, {"coeffs", int_vector_json(h.coeffs)}};
}

inline json ab_json(const ABDecomposition& ab) {
    return {{"d", ab.d},
            {"s", ab.s},
            {"a", int_vector_json(ab.a)},
            {"b", int_vector_json(ab.b)}};
}

inline json box_group_json(const BoxGroup& g) {
    json elems = json::array();
    for (const auto& e : g.elements)
        elems.push_back({{"coords", rat_vector_json(e.coords)},
                         {"age", e.age},
                         {"coage", e.coage},
                         {"boundary", e.boundary}});
    return {{"order", int_json(g.order)},
            {"diagonal", int_vector_json(g.diagonal)},
            {"elements", std::move(elems)}};
}

inline json form_json(const LinearForm& f) {
    json coeffs = json::array();
    for (const auto& [sym, c] : f.coeffs)
        coeffs.push_back({{"symbol", std::string(1, sym.kind) + "_" +
                                         std::to_string(sym.index)},
                          {"coeff", to_string(c)}});
    return {{"render", render(f)}, {"coeffs", std::move(coeffs)}};
}

inline json inequality_json(const InequalityItem& item, int d, int s) {
    json vertex = json::array();
    for (const auto& tuple : item.vertex) vertex.push_back(rat_vector_json(tuple));
    return {{"family", family_name(item.family)},
            {"params", {{"r", item.r}, {"rp", item.rp}, {"alpha", item.alpha}}},
            {"vertex", std::move(vertex)},
            {"d_min", item.d_min},
            {"needs_interior", item.needs_interior},
            {"conjecture", item.conjecture},
            {"ab_form", form_json(item.form)},
            {"h_form", form_json(ab_to_h_form(clamp_symmetric(item.form, d, s),
                                              d, s))}};
}

inline json check_report_json(const HStarVector& h, const CheckReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"family", family_name(e.item.family)},
                           {"inequality", render(e.item.form)},
                           {"params",
                            {{"r", e.item.r},
                             {"rp", e.item.rp},
                             {"alpha", e.item.alpha}}},
                           {"slack", to_string(e.value)},
                           {"pass", e.pass},
                           {"conjecture", e.item.conjecture}});
    return {{"vector", hstar_json(h)},
            {"pass", rep.pass},
            {"checks", std::move(entries)}};
}

}  // namespace ehrhart
