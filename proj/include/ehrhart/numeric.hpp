#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehrhart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) with the combinatorial convention: 0 whenever n < k or k < 0.
inline Int binomial(const Int& n, int k) {
    if (k < 0 || n < k) return 0;
    Int result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline Int ceil_rat(const Rat& x) {
    return -floor_rat(-x);
}

// Fractional part in [0, 1).
inline Rat frac(const Rat& x) {
    return x - Rat(floor_rat(x));
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Int parse_int(const std::string& s) {
    std::string t = s;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t.empty()) throw std::invalid_argument("empty integer token");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad integer: " + s);
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw std::invalid_argument("bad integer: " + s);
    return Int(t);
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

// Comma-separated integers, e.g. "1,2,3,2,2,2".
inline std::vector<Int> parse_int_vector(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok));
    if (out.empty()) throw std::invalid_argument("empty vector");
    return out;
}

inline std::string format_vector(const std::vector<Int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].str();
    }
    return out;
}

inline std::string format_vector(const std::vector<Rat>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += to_string(v[i]);
    }
    return out;
}

inline Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

}  // namespace ehrhart
