#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hstar.hpp"
#include "linalg.hpp"
#include "numeric.hpp"

namespace ehrhart {

// Simplex P(alpha_0, ..., alpha_d): convex hull of the images of the standard
// basis vectors in Z^(d+1) / (sum alpha_i e_i = 0). Weights are normalized to
// non-increasing order; a common factor is rejected.
struct PayneSimplex {
    std::vector<Int> alpha;  // size d + 1, non-increasing, gcd 1

    explicit PayneSimplex(std::vector<Int> a) : alpha(std::move(a)) {
        if (alpha.size() < 2)
            throw std::invalid_argument("alpha: need at least two weights");
        for (const auto& x : alpha)
            if (x < 1) throw std::invalid_argument("alpha: weights must be positive");
        std::sort(alpha.begin(), alpha.end(), std::greater<Int>());
        if (gcd_all(alpha) != 1)
            throw std::invalid_argument("alpha: weights have a common factor");
    }

    int dim() const { return static_cast<int>(alpha.size()) - 1; }
    Int weight_sum() const {
        return std::accumulate(alpha.begin(), alpha.end(), Int(0));
    }
};

struct BoxElement {
    std::vector<Int> key;     // canonical coordinates modulo the SNF diagonal
    std::vector<Rat> coords;  // fractional coordinates in [0, 1) per generator
    int age = 0;
    int coage = 0;
    bool boundary = false;  // non-identity with some fractional coordinate 0
};

// Finite abelian quotient of the ambient lattice by the sublattice spanned by
// the simplex generators (v_i, 1); elements carry box-point data.
class BoxGroup {
public:
    Int order = 1;
    std::vector<Int> diagonal;        // SNF invariant factors (all >= 1)
    std::vector<BoxElement> elements; // lexicographic in key

    // columns of gen = the generators; must be non-singular.
    static BoxGroup from_generator_matrix(const IMat& gen) {
        const std::size_t n = gen.size();
        auto snf = smith_normal_form(gen);
        BoxGroup g;
        g.diagonal = snf.diagonal;
        for (const auto& dgl : g.diagonal) {
            if (dgl == 0)
                throw std::invalid_argument("box group: singular generator matrix");
            g.order *= dgl;
        }
        // An element with canonical key c corresponds to fractional generator
        // coordinates frac(V D^{-1} c).
        std::vector<Int> key(n, 0);
        bool done = false;
        while (!done) {
            BoxElement e;
            e.key = key;
            e.coords.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                Rat x = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (key[j] != 0) x += Rat(snf.v[i][j] * key[j], g.diagonal[j]);
                e.coords[i] = frac(x);
            }
            g.finish_element(e);
            g.elements.push_back(std::move(e));
            // next key, lexicographic with the last coordinate fastest
            done = true;
            std::size_t i = n;
            while (i-- > 0) {
                if (++key[i] < g.diagonal[i]) { done = false; break; }
                key[i] = 0;
            }
        }
        g.build_index();
        return g;
    }

    // rows = the n simplex vertices in Z^(n-1); generators are (v_i, 1).
    static BoxGroup from_simplex_vertices(const IMat& vertices) {
        const std::size_t n = vertices.size();
        if (n < 2) throw std::invalid_argument("box group: need >= 2 vertices");
        for (const auto& row : vertices)
            if (row.size() + 1 != n)
                throw std::invalid_argument("box group: vertex matrix must be square");
        IMat gen(n, std::vector<Int>(n, 0));
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i + 1 < n; ++i) gen[i][j] = vertices[j][i];
            gen[n - 1][j] = 1;
        }
        return from_generator_matrix(gen);
    }

    // Cyclic group Z/n acting with the given weights: element j has
    // fractional coordinates frac(j w_i / n).
    static BoxGroup cyclic(const Int& n, const std::vector<Int>& weights) {
        if (n < 1) throw std::invalid_argument("cyclic box group: order < 1");
        Int wsum = std::accumulate(weights.begin(), weights.end(), Int(0));
        if (wsum % n != 0)
            throw std::invalid_argument("cyclic box group: weight sum not 0 mod n");
        BoxGroup g;
        g.order = n;
        g.diagonal = {n};
        for (Int j = 0; j < n; ++j) {
            BoxElement e;
            e.key = {j};
            e.coords.reserve(weights.size());
            for (const auto& w : weights) e.coords.push_back(Rat((j * w) % n, n));
            g.finish_element(e);
            g.elements.push_back(std::move(e));
        }
        g.build_index();
        return g;
    }

    std::size_t index_of(const std::vector<Int>& key) const {
        auto it = index_.find(key);
        if (it == index_.end())
            throw std::invalid_argument("box group: unknown element key");
        return it->second;
    }

    std::size_t add(std::size_t i, std::size_t j) const {
        std::vector<Int> key(diagonal.size());
        for (std::size_t k = 0; k < key.size(); ++k)
            key[k] = (elements[i].key[k] + elements[j].key[k]) % diagonal[k];
        return index_of(key);
    }

    std::size_t negate(std::size_t i) const {
        std::vector<Int> key(diagonal.size());
        for (std::size_t k = 0; k < key.size(); ++k)
            key[k] = (diagonal[k] - elements[i].key[k]) % diagonal[k];
        return index_of(key);
    }

    std::size_t size() const { return elements.size(); }

private:
    std::map<std::vector<Int>, std::size_t> index_;

    void finish_element(BoxElement& e) {
        Rat sum = 0;
        int nonzero = 0;
        for (const auto& c : e.coords) {
            sum += c;
            if (c != 0) ++nonzero;
        }
        if (denominator(sum) != 1)
            throw std::logic_error("box group: non-integral age");
        e.age = static_cast<int>(numerator(sum));
        e.coage = nonzero - e.age;
        e.boundary = nonzero > 0 &&
                     static_cast<std::size_t>(nonzero) < e.coords.size();
    }

    void build_index() {
        for (std::size_t i = 0; i < elements.size(); ++i)
            index_[elements[i].key] = i;
    }
};

inline BoxGroup box_group(const PayneSimplex& p) {
    const int d = p.dim();
    // Find W in GL_{d+1}(Z) with W * alpha = e_0; the simplex vertices are the
    // columns of W with the first row dropped.
    std::vector<Int> v = p.alpha;
    IMat w = identity_imat(d + 1);
    auto add_row = [&](int dst, int src, const Int& c) {
        v[dst] += c * v[src];
        for (int k = 0; k <= d; ++k) w[dst][k] += c * w[src][k];
    };
    for (;;) {
        int piv = -1;
        for (int i = 0; i <= d; ++i)
            if (v[i] != 0 && (piv < 0 || abs(v[i]) < abs(v[piv]))) piv = i;
        bool done = true;
        for (int i = 0; i <= d; ++i) {
            if (i == piv || v[i] == 0) continue;
            add_row(i, piv, -floor_div(v[i], v[piv]));
            done = false;
        }
        if (done) {
            if (piv != 0) {
                std::swap(v[piv], v[0]);
                std::swap(w[piv], w[0]);
            }
            break;
        }
    }
    if (v[0] < 0) {
        for (int k = 0; k <= d; ++k) w[0][k] = -w[0][k];
        v[0] = -v[0];
    }
    if (v[0] != 1) throw std::logic_error("box group: gcd reduction failed");

    IMat gen(d + 1, std::vector<Int>(d + 1, 0));
    for (int j = 0; j <= d; ++j) {
        for (int i = 1; i <= d; ++i) gen[i - 1][j] = w[i][j];
        gen[d][j] = 1;
    }
    return BoxGroup::from_generator_matrix(gen);
}

// h*(t) = sum over the half-open fundamental parallelepiped of t^age.
inline HStarVector parallelepiped_hstar(const BoxGroup& g, int d) {
    std::vector<Int> h(d + 1, 0);
    for (const auto& e : g.elements) {
        if (e.age > d) throw std::invalid_argument("parallelepiped h*: age exceeds dimension");
        h[e.age] += 1;
    }
    return HStarVector(std::move(h));
}

inline HStarVector parallelepiped_hstar(const BoxGroup& g) {
    int dmax = 0;
    for (const auto& e : g.elements) dmax = std::max(dmax, e.age);
    std::size_t coords = g.elements.empty() ? 1 : g.elements[0].coords.size();
    return parallelepiped_hstar(g, std::max<int>(dmax, static_cast<int>(coords) - 1));
}

// Closed double-sum formula for the h*-polynomial of P(alpha_0, ..., alpha_d).
inline HStarVector payne_hstar(const PayneSimplex& p) {
    const int d = p.dim();
    std::vector<Int> h(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        for (Int j = 0; j < p.alpha[i]; ++j) {
            Rat fracsum = 0;
            Int integral_tail = 0;
            for (int k = 0; k <= d; ++k) {
                if (k == i) continue;
                Rat x(j * p.alpha[k], p.alpha[i]);
                if (k > i && denominator(x) == 1) ++integral_tail;
                fracsum += frac(x);
            }
            Int expo = ceil_rat(fracsum) + integral_tail;
            if (expo < 0 || expo > d)
                throw std::logic_error("payne h*: exponent out of range");
            h[static_cast<int>(expo)] += 1;
        }
    }
    return HStarVector(std::move(h));
}

// Independent oracle: count lattice points of the dilates of P in
// N = Z^(d+1)/(sum alpha_i e_i = 0) per residue class of the index-s overlattice,
// then invert the binomial transform.
inline HStarVector dilation_count_hstar(const PayneSimplex& p,
                                        const Int& weight_budget = 200) {
    const int d = p.dim();
    const Int s = p.weight_sum();
    if (s > weight_budget)
        throw std::length_error("dilation count: weight sum exceeds budget");

    // f(m) = #{x in Z^(d+1) + (j/s) alpha, x >= 0, sum x_i = m}, summed over j.
    auto count = [&](int m) {
        Int total = 0;
        for (Int j = 0; j < s; ++j) {
            Int shift = 0;
            for (int i = 0; i <= d; ++i) shift += floor_div(j * p.alpha[i], s);
            total += binomial(Int(m) - j + shift + d, d);
        }
        return total;
    };
    std::vector<Int> f(d + 1);
    for (int m = 0; m <= d; ++m) f[m] = count(m);

    std::vector<Int> h(d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j) {
            Int term = binomial(Int(d + 1), j) * f[i - j];
            h[i] += (j % 2 == 0) ? term : -term;
        }
    return HStarVector(std::move(h));
}

// Counts of the age classes N(G,k,l). The convention argument states how the
// group arose: a group of a (d-1)-dimensional boundary simplex has d generator
// coordinates and classes (k,l) with l = d - 2 - coage; the interior-point
// setting of a d-dimensional maximal simplex splits each class by whether the
// element uses the cone apex.
struct AgeProfile {
    int d = 0;
    std::map<std::pair<int, int>, Int> plain;
    std::map<std::pair<int, int>, Int> a;  // elements on the boundary cone
    std::map<std::pair<int, int>, Int> b;  // elements using the apex
};

inline void require_terminal(const BoxGroup& g) {
    for (const auto& e : g.elements)
        if (e.age == 1 || e.coage == 1)
            throw std::invalid_argument("age profile: group has an age-1 element");
}

inline AgeProfile age_profile_plain(const BoxGroup& g, int d, bool strict = true) {
    if (strict) require_terminal(g);
    AgeProfile prof;
    prof.d = d;
    for (const auto& e : g.elements) {
        if (e.age == 0 && e.coage == 0) continue;  // identity
        int k = e.age - 2;
        int l = d - 2 - e.coage;
        if (!(0 <= k && k <= l && l <= d - 4))
            throw std::invalid_argument("age profile: element outside class range");
        prof.plain[{k, l}] += 1;
    }
    return prof;
}

// apex = index of the generator coordinate for the interior vertex; an element
// lies on the boundary cone exactly when that coordinate vanishes.
inline AgeProfile age_profile_ab(const BoxGroup& g, int d, std::size_t apex = 0,
                                 bool strict = true) {
    if (strict) require_terminal(g);
    AgeProfile prof;
    prof.d = d;
    for (const auto& e : g.elements) {
        if (e.age == 0 && e.coage == 0) continue;
        if (apex >= e.coords.size())
            throw std::invalid_argument("age profile: apex index out of range");
        int k = e.age - 2;
        if (e.coords[apex] == 0) {
            int l = d - 2 - e.coage;
            if (!(0 <= k && k <= l && l <= d - 3))
                throw std::invalid_argument("age profile: element outside class range");
            prof.a[{k, l}] += 1;
        } else {
            int l = d - 1 - e.coage;
            if (!(0 <= k && k <= l && l <= d - 3))
                throw std::invalid_argument("age profile: element outside class range");
            prof.b[{k, l}] += 1;
        }
    }
    return prof;
}

struct CyclicSample {
    Int n;
    std::vector<Int> weights;  // non-decreasing, sum = 0 mod n, gcd(w, n) = 1
    BoxGroup group;
};

// All cyclic groups Z/n, n <= n_max, with a full-order weight vector of the
// given length whose non-zero elements all have age >= 2 (lattice-free /
// terminal condition). Deterministic lexicographic enumeration.
inline std::vector<CyclicSample> terminal_cyclic_samples(int num_coords, int n_max) {
    if (num_coords < 4 || n_max < 2)
        throw std::invalid_argument("terminal samples: need >= 4 coordinates, n >= 2");
    std::vector<CyclicSample> out;
    for (long long n = 2; n <= n_max; ++n) {
        std::vector<long long> w(num_coords, 0);
        // non-decreasing weight vectors with entries in [0, n)
        auto emit = [&]() {
            long long sum = std::accumulate(w.begin(), w.end(), 0LL);
            if (sum % n != 0) return;
            long long g = n;
            for (long long x : w) g = std::gcd(g, x);
            if (g != 1) return;
            for (long long j = 1; j < n; ++j) {
                long long age = 0;
                for (long long x : w) age += (j * x) % n;
                if (age / n < 2) return;  // age of element j
            }
            CyclicSample s;
            s.n = n;
            s.weights.assign(w.begin(), w.end());
            s.group = BoxGroup::cyclic(s.n, s.weights);
            out.push_back(std::move(s));
        };
        auto rec = [&](auto&& self, int pos, long long lo) -> void {
            if (pos == num_coords) { emit(); return; }
            for (long long x = lo; x < n; ++x) {
                w[pos] = x;
                self(self, pos + 1, x);
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

}  // namespace ehrhart
