// Command-line surface for the h*-inequality toolkit.
//
// Subcommands: compute, decompose, check, inequalities, q-vertices, box,
// verify, table. Exit codes: 0 success / all checks pass, 1 mathematical
// violation found, 2 usage or input error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ehrhart/cones.hpp"
#include "ehrhart/forms.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/qpolyhedron.hpp"
#include "ehrhart/serialize.hpp"
#include "ehrhart/sumsets.hpp"
#include "ehrhart/tables.hpp"

using namespace ehrhart;

namespace {

std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

int cmd_compute(const std::string& alpha_str, const std::string& format) {
    PayneSimplex p(parse_int_vector(alpha_str));
    auto h = payne_hstar(p);
    if (format == "json") {
        json out = hstar_json(h);
        if (h.has_interior_point()) out["x"] = int_vector_json(x_vector(h));
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "h* = " << join_ints(h.coeffs) << "\n";
        if (h.has_interior_point())
            std::cout << "x  = " << join_ints(x_vector(h)) << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& vec_str, const std::string& format) {
    HStarVector h(parse_int_vector(vec_str));
    auto ab = decompose(h);
    if (format == "json") {
        std::cout << ab_json(ab).dump() << "\n";
    } else {
        std::cout << "s = " << ab.s << ", l = " << h.d + 1 - ab.s << "\n";
        std::cout << "a = " << join_ints(ab.a) << "\n";
        std::cout << "b = " << (ab.b.empty() ? "()" : join_ints(ab.b)) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& vec_str, bool conjectures, bool corollaries,
              const std::string& format) {
    HStarVector h(parse_int_vector(vec_str));
    CheckOptions opts;
    opts.include_conjectures = conjectures;
    opts.include_corollaries = corollaries;
    auto rep = check_vector(h, opts);
    if (format == "json") {
        std::cout << check_report_json(h, rep).dump() << "\n";
    } else {
        for (const auto& e : rep.entries) {
            if (e.pass) continue;
            std::cout << (e.item.conjecture ? "CONJECTURE " : "VIOLATED   ")
                      << family_name(e.item.family) << " (r=" << e.item.r
                      << ", r'=" << e.item.rp << ", alpha=" << e.item.alpha
                      << ") d=" << h.d << ": " << render(e.item.form)
                      << "  slack " << to_string(e.value) << "\n";
        }
        std::cout << (rep.pass ? "PASS" : "FAIL") << " (" << rep.entries.size()
                  << " inequalities checked)\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_inequalities(int d, bool interior, const std::string& format) {
    if (d < 2) throw CLI::ValidationError("--dim must be at least 2");
    std::vector<InequalityItem> items = baseline_items(d, d, interior);
    if (interior && d >= 2)
        for (auto& it : refinement_items(d)) items.push_back(std::move(it));
    for (int rp = 0; 2 * rp + 7 <= d; ++rp)
        for (int r = 0; r <= rp && 2 * rp + r + 7 <= d; ++r)
            for (auto& it : superA_items(r, rp)) items.push_back(std::move(it));
    if (interior)
        for (int rp = 0; 2 * rp + 6 <= d; ++rp)
            for (int r = 0; r <= rp; ++r) {
                for (int alpha = 0; alpha <= r; ++alpha)
                    if (2 * rp + r + 7 <= d)
                        for (auto& it : variant_items(1, alpha, r, rp))
                            items.push_back(std::move(it));
                if (r > 0 && 2 * rp + r + 6 <= d)
                    for (auto& it : variant_items(2, 0, r, rp))
                        items.push_back(std::move(it));
                for (int alpha = 0; alpha <= r + 1; ++alpha)
                    if (2 * rp + r + alpha + 6 <= d)
                        for (auto& it : variant_items(3, alpha, r, rp))
                            items.push_back(std::move(it));
            }
    const int s = d;  // h-forms rendered under the interior convention
    if (format == "json") {
        for (auto& it : items) {
            json rec = inequality_json(it, d, s);
            if (it.family == Family::superA)
                if (auto nd = minimal_novel_dimension(it))
                    rec["novel_dimension"] = *nd;
            std::cout << rec.dump() << "\n";
        }
    } else {
        std::set<std::string> seen;  // clamping can collapse chain entries
        for (auto& it : items) {
            auto clamped = clamp_symmetric(it.form, d, s);
            if (clamped.coeffs.empty() || !seen.insert(render(clamped)).second)
                continue;
            std::cout << render(clamped) << "  [" << family_name(it.family);
            if (it.family == Family::superA || it.family == Family::variant1 ||
                it.family == Family::variant2 || it.family == Family::variant3)
                std::cout << " (r=" << it.r << ", r'=" << it.rp
                          << ", alpha=" << it.alpha << ") d_min=" << it.d_min;
            if (it.family == Family::superA)
                if (auto nd = minimal_novel_dimension(it))
                    std::cout << " novel_d=" << *nd;
            std::cout << "]\n";
        }
    }
    return 0;
}

int cmd_q_vertices(int r, int rp, const std::string& format) {
    auto q = q_polyhedron(r, rp);
    auto verts = vertices(q);
    if (format == "json") {
        json out = json::array();
        for (const auto& v : verts) out.push_back(rat_vector_json(v));
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& v : verts) {
            std::cout << "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << to_string(v[i]);
            }
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_box(const std::string& alpha_str, const std::string& format) {
    PayneSimplex p(parse_int_vector(alpha_str));
    auto g = box_group(p);
    if (format == "json") {
        std::cout << box_group_json(g).dump() << "\n";
    } else {
        std::cout << "order " << g.order.str() << ", diagonal "
                  << join_ints(g.diagonal) << "\n";
        for (const auto& e : g.elements) {
            std::cout << "(";
            for (std::size_t i = 0; i < e.coords.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << to_string(e.coords[i]);
            }
            std::cout << ") age=" << e.age << " coage=" << e.coage
                      << (e.boundary ? " boundary" : "") << "\n";
        }
    }
    return 0;
}

// Enumerate all non-increasing gcd-1 weight vectors with the given number of
// parts and weight sum at most budget.
void for_each_alpha(int parts, const Int& budget,
                    const std::function<void(const std::vector<Int>&)>& fn) {
    std::vector<Int> alpha(parts);
    auto rec = [&](auto&& self, int pos, Int lo, Int left) -> void {
        if (pos < 0) {
            if (gcd_all(alpha) == 1) fn(alpha);
            return;
        }
        for (Int x = lo; x * (pos + 1) <= left; ++x) {
            alpha[pos] = x;
            self(self, pos - 1, x, left - x);
        }
    };
    // fill from the last (smallest) entry upward
    rec(rec, parts - 1, 1, budget);
}

bool verify_vertices(bool log) {
    bool ok = true;
    for (int r = 0; r <= 3; ++r) {
        auto a = vertices(q_polyhedron(r, r));
        auto b = swim_vertices(r);
        std::sort(b.begin(), b.end());
        bool same = a == b;
        ok = ok && same;
        if (log)
            std::cout << json({{"suite", "vertices"},
                               {"case", "swim"},
                               {"r", r},
                               {"count", a.size()},
                               {"pass", same}})
                             .dump()
                      << "\n";
    }
    for (int rp = 0; rp <= 6; ++rp) {
        auto a = vertices(q_polyhedron(0, rp));
        auto b = swum_vertices(rp);
        std::sort(b.begin(), b.end());
        bool same = a == b;
        ok = ok && same;
        if (log)
            std::cout << json({{"suite", "vertices"},
                               {"case", "swum"},
                               {"rp", rp},
                               {"count", a.size()},
                               {"pass", same}})
                             .dump()
                      << "\n";
    }
    return ok;
}

bool verify_oracles(const Int& alpha_sum_max, bool log) {
    long long checked = 0, failed = 0;
    for (int parts = 2; parts <= 7; ++parts) {
        for_each_alpha(parts, alpha_sum_max, [&](const std::vector<Int>& alpha) {
            PayneSimplex p(alpha);
            auto h1 = payne_hstar(p);
            auto h2 = parallelepiped_hstar(box_group(p), p.dim());
            auto h3 = dilation_count_hstar(p, alpha_sum_max);
            ++checked;
            if (!(h1 == h2 && h1 == h3)) {
                ++failed;
                if (log)
                    std::cout << json({{"suite", "oracles"},
                                       {"alpha", join_ints(alpha)},
                                       {"pass", false}})
                                     .dump()
                              << "\n";
            }
        });
    }
    if (log)
        std::cout << json({{"suite", "oracles"},
                           {"checked", checked},
                           {"failed", failed},
                           {"pass", failed == 0}})
                         .dump()
                  << "\n";
    return failed == 0;
}

bool verify_sumsets(int n_max, bool log) {
    long long pairs = 0, failures = 0;
    for (int n = 1; n <= n_max; ++n) {
        auto g = BoxGroup::cyclic(n, {Int(n)});
        std::vector<std::set<std::size_t>> subsets;
        // all subsets containing 0
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::set<std::size_t> s{0};
            for (int i = 1; i < n; ++i)
                if (mask & (1 << (i - 1))) s.insert(i);
            subsets.push_back(std::move(s));
        }
        for (const auto& sa : subsets)
            for (const auto& sb : subsets) {
                GroupSubset a(g, sa), b(g, sb);
                auto v = kemperman_scherk_check(a, b);
                ++pairs;
                if (v.hypothesis_holds && !v.bound_holds) ++failures;
            }
    }
    if (log)
        std::cout << json({{"suite", "sumsets"},
                           {"pairs", pairs},
                           {"failures", failures},
                           {"pass", failures == 0}})
                         .dump()
                  << "\n";
    return failures == 0;
}

bool verify_lemmas(int n_max, bool log) {
    bool ok = true;
    // containment and counting lemmas over terminal cyclic groups, and the
    // vertex lemmas over small (r, r').
    auto samples9 = terminal_cyclic_samples(9, n_max);
    long long flight_fail = 0, keyD_fail = 0, keyD4_fail = 0;
    for (const auto& s : samples9) {
        if (!verify_flight_all(s.group, 9)) ++flight_fail;
        for (int i = 0; i <= 0; ++i)
            for (int j = 0; j <= 1 - i; ++j)
                if (!verify_keyD(s.group, 9, 0, 1, i, j)) ++keyD_fail;
        // interior-point analogues at d = 8 (apex coordinate 0)
        for (int alpha = 0; alpha <= 1; ++alpha)
            if (!verify_keyD4(s.group, 8, KeyD4Variant::a, 0, 0, alpha, 0, 0))
                ++keyD4_fail;
        if (!verify_keyD4(s.group, 8, KeyD4Variant::b, 0, 0, 0, 0, 0))
            ++keyD4_fail;
        for (int j = 0; j <= 1; ++j)
            if (!verify_keyD4(s.group, 8, KeyD4Variant::b, 0, 1, 0, 0, j))
                ++keyD4_fail;
        for (int alpha = 0; alpha <= 1; ++alpha)
            if (!verify_keyD4(s.group, 8, KeyD4Variant::c, 0, 0, alpha, 0, 0))
                ++keyD4_fail;
        for (int j = 0; j <= 1; ++j)
            if (!verify_keyD4(s.group, 8, KeyD4Variant::c, 0, 1, 0, 0, j))
                ++keyD4_fail;
    }
    ok = ok && flight_fail == 0 && keyD_fail == 0 && keyD4_fail == 0;
    if (log)
        std::cout << json({{"suite", "lemmas"},
                           {"groups", samples9.size()},
                           {"flight_failures", flight_fail},
                           {"keyD_failures", keyD_fail},
                           {"keyD4_failures", keyD4_fail}})
                         .dump()
                  << "\n";

    bool hayden_ok = true;
    for (int rp = 0; rp <= 4; ++rp)
        for (int r = 0; r <= std::min(rp, 2); ++r)
            for (const auto& v : vertices(q_polyhedron(r, rp))) {
                auto rep = hayden_check(v, r, rp);
                if (!rep.hypotheses_hold || !rep.conclusions_hold)
                    hayden_ok = false;
            }
    bool plan_ok = true;
    for (int rp = 0; rp <= 5; ++rp)
        for (int r = 0; r <= std::min(rp, 3); ++r)
            if (!q_contains(q_polyhedron(r, rp), plan_vector(r, rp)))
                plan_ok = false;
    ok = ok && hayden_ok && plan_ok;
    if (log)
        std::cout << json({{"suite", "lemmas"},
                           {"hayden_pass", hayden_ok},
                           {"plan_pass", plan_ok}})
                         .dump()
                  << "\n";
    return ok;
}

int cmd_verify(const std::string& suite, const Int& alpha_sum_max, int n_max,
               bool log) {
    bool ok = true;
    if (suite == "vertices" || suite == "all") ok = verify_vertices(log) && ok;
    if (suite == "oracles" || suite == "all")
        ok = verify_oracles(alpha_sum_max, log) && ok;
    if (suite == "sumsets" || suite == "all") ok = verify_sumsets(n_max, log) && ok;
    if (suite == "lemmas" || suite == "all")
        ok = verify_lemmas(std::min(n_max, 20), log) && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_table(const std::string& name, const std::string& format) {
    const std::string sep = format == "tsv" ? "\t" : " | ";
    auto emit_ineq = [&](const std::vector<InequalityRow>& rows, bool types) {
        for (const auto& row : rows) {
            if (format == "json") {
                json rec = {{"inequality", row.inequality},
                            {"params", row.params},
                            {"dimension", row.dimension}};
                if (types) rec["type"] = row.type;
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << row.inequality << sep << row.params;
                if (types) std::cout << sep << row.type;
                std::cout << sep << row.dimension << "\n";
            }
        }
    };
    auto emit_real = [&](const std::vector<RealizationRow>& rows) {
        for (const auto& row : rows) {
            if (format == "json") {
                std::cout << json({{"alpha", int_vector_json(row.alpha)},
                                   {"x", int_vector_json(row.x)},
                                   {"d", row.d}})
                                 .dump()
                          << "\n";
            } else {
                std::cout << "P(" << join_ints(row.alpha) << ")" << sep << "("
                          << join_ints(row.x) << ")" << sep << "d = " << row.d << "\n";
            }
        }
    };
    if (name == "noint") {
        emit_ineq(table_noint(), false);
    } else if (name == "int") {
        emit_ineq(table_int(), true);
    } else if (name == "seven") {
        for (const auto& row : table_seven()) {
            if (format == "json")
                std::cout << json({{"h_form", row.h_form},
                                   {"ab_form", row.ab_form},
                                   {"source", row.source},
                                   {"conjecture", row.conjecture}})
                                 .dump()
                          << "\n";
            else
                std::cout << row.h_form << sep << row.ab_form << sep
                          << row.source << "\n";
        }
    } else if (name == "reflexive") {
        for (const auto& row : table_reflexive()) {
            if (format == "json")
                std::cout << json({{"shape", row.shape},
                                   {"inequalities", row.inequalities},
                                   {"d", row.d}})
                                 .dump()
                          << "\n";
            else
                std::cout << row.shape << sep << row.inequalities
                          << sep << "d = " << row.d << "\n";
        }
    } else if (name == "hoot") {
        emit_real(table_hoot());
    } else if (name == "cmon") {
        emit_real(table_cmon());
    } else if (name == "hoot2") {
        emit_real(table_hoot2());
    } else {
        throw CLI::ValidationError("unknown table name: " + name);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact h*-polynomial computations and inequality checking"};
    app.require_subcommand(1);

    std::string alpha_str, vec_str, format = "text", suite = "all", table_name;
    bool conjectures = false, corollaries = false, interior = false, log = false;
    int dim = 0, r = 0, rp = 0, n_max = 8;
    std::string alpha_sum_max = "40";

    auto* compute = app.add_subcommand("compute", "h* of a weighted simplex");
    compute->add_option("--alpha", alpha_str, "weights a0,a1,...")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* dec = app.add_subcommand("decompose", "symmetric a/b decomposition");
    dec->add_option("--vector", vec_str, "h* coefficients h0,h1,...")->required();
    dec->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* chk = app.add_subcommand("check", "test a candidate h*-vector");
    chk->add_option("--vector", vec_str)->required();
    chk->add_flag("--conjectures", conjectures, "include conjectural forms");
    chk->add_flag("--corollaries", corollaries, "include corollary duplicates");
    chk->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ineq = app.add_subcommand("inequalities", "all families at a dimension");
    ineq->add_option("--dim", dim)->required();
    ineq->add_flag("--interior", interior, "assume an interior lattice point");
    ineq->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* qv = app.add_subcommand("q-vertices", "vertices of Q(r,r')");
    qv->add_option("--r", r)->required();
    qv->add_option("--rp", rp)->required();
    qv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* box = app.add_subcommand("box", "box group of a weighted simplex");
    box->add_option("--alpha", alpha_str)->required();
    box->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ver = app.add_subcommand("verify", "run verification sweeps");
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"oracles", "sumsets", "lemmas", "vertices", "all"}));
    ver->add_option("--alpha-sum-max", alpha_sum_max, "oracle weight budget");
    ver->add_option("--n-max", n_max, "group order budget");
    ver->add_flag("--log", log, "emit JSON-lines records");

    auto* tab = app.add_subcommand("table", "reproduce a printed table");
    tab->add_option("name", table_name)->required();
    tab->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return cmd_compute(alpha_str, format);
        if (*dec) return cmd_decompose(vec_str, format);
        if (*chk) return cmd_check(vec_str, conjectures, corollaries, format);
        if (*ineq) return cmd_inequalities(dim, interior, format);
        if (*qv) return cmd_q_vertices(r, rp, format);
        if (*box) return cmd_box(alpha_str, format);
        if (*ver)
            return cmd_verify(suite, parse_int(alpha_sum_max), n_max, log);
        if (*tab) return cmd_table(table_name, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
