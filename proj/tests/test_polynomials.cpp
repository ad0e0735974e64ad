#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/hstar.hpp"

using namespace ehrhart;

static std::vector<Int> iv(std::initializer_list<int> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

TEST_CASE("decompose reproduces the worked examples") {
    // degree 5, interior point
    auto ab = decompose(HStarVector(iv({1, 2, 3, 2, 2, 2})));
    CHECK(ab.a == iv({1, 1, 2, 2, 1, 1}));
    CHECK(ab.b == iv({1, 1, 0, 1, 1}));

    // degree 6 in dimension 7, no interior point: b vanishes
    ab = decompose(HStarVector(iv({1, 2, 2, 1, 2, 2, 1, 0})));
    CHECK(ab.a == iv({1, 3, 4, 3, 3, 4, 3, 1}));
    CHECK(ab.b == iv({0, 0, 0, 0, 0, 0}));

    // symmetric h* gives a = h*, b = 0
    ab = decompose(HStarVector(iv({1, 1, 1, 1, 1, 1, 1})));
    CHECK(ab.a == iv({1, 1, 1, 1, 1, 1, 1}));
    CHECK(ab.b == iv({0, 0, 0, 0, 0, 0}));

    ab = decompose(HStarVector(iv({1, 1, 2, 1, 1, 2, 1})));
    CHECK(ab.a == iv({1, 1, 1, 1, 1, 1, 1}));
    CHECK(ab.b == iv({0, 1, 0, 0, 1, 0}));
}

TEST_CASE("decomposition output is palindromic and recomposes") {
    auto h = HStarVector(iv({1, 2, 3, 2, 2, 2}));
    auto ab = decompose(h);
    CHECK_NOTHROW(validate(ab));
    CHECK(recompose(ab) == h);
}

TEST_CASE("recompose of hand-built data") {
    ABDecomposition ab;
    ab.d = 1;
    ab.s = 0;
    ab.a = iv({1, 1});
    ab.b = {};
    CHECK(recompose(ab) == HStarVector(iv({1, 0})));

    ab.d = 7;
    ab.s = 6;
    ab.a = iv({1, 3, 4, 3, 3, 4, 3, 1});
    ab.b = iv({0, 0, 0, 0, 0, 0});
    CHECK(recompose(ab) == HStarVector(iv({1, 2, 2, 1, 2, 2, 1, 0})));
}

TEST_CASE("recompose rejects inconsistent data") {
    ABDecomposition ab;
    ab.d = 3;
    ab.s = 2;
    // division by 1 + t gives a negative coefficient
    ab.a = iv({1, 0, 0, 1});
    ab.b = iv({0, 0});
    CHECK_THROWS_AS(recompose(ab), std::invalid_argument);
}

TEST_CASE("roundtrip over small vectors") {
    // entries <= 3, d <= 5 here; the full d <= 8 sweep runs in acceptance
    for (int d = 1; d <= 5; ++d) {
        std::vector<Int> c(d + 1, 0);
        c[0] = 1;
        for (;;) {
            HStarVector h(c);
            REQUIRE(recompose(decompose(h)) == h);
            int i = d;
            while (i >= 1 && c[i] == 3) c[i--] = 0;
            if (i == 0) break;
            c[i] += 1;
        }
    }
}

TEST_CASE("ehrhart values") {
    CHECK(ehrhart_values(HStarVector(iv({1, 2})), 3) == iv({1, 4, 7, 10}));
    CHECK(ehrhart_values(HStarVector(iv({1, 0, 0})), 2) == iv({1, 3, 6}));
    CHECK(ehrhart_values(HStarVector(iv({1, 1, 0})), 2) == iv({1, 4, 9}));
    CHECK(ehrhart_values(HStarVector(iv({1, 1, 1})), 2) == iv({1, 4, 10}));
}

TEST_CASE("ehrhart series identity") {
    // sum_m f(m) t^m (1-t)^(d+1) = h*(t), coefficientwise up to degree d
    HStarVector h(iv({1, 2, 3, 2, 2, 2}));
    auto f = ehrhart_values(h, h.d);
    for (int i = 0; i <= h.d; ++i) {
        Int c = 0;
        for (int j = 0; j <= i; ++j) {
            Int term = binomial(Int(h.d + 1), j) * f[i - j];
            c += (j % 2 == 0) ? term : -term;
        }
        CHECK(c == h.coeffs[i]);
    }
}

TEST_CASE("degree and codegree") {
    CHECK(degree_codegree(HStarVector(iv({1, 2, 3, 2, 2, 2}))) ==
          std::pair<int, int>{5, 1});
    CHECK(degree_codegree(HStarVector(iv({1, 2, 2, 1, 2, 2, 1, 0}))) ==
          std::pair<int, int>{6, 2});
    CHECK(degree_codegree(HStarVector(iv({1, 0, 0}))) == std::pair<int, int>{0, 3});
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(HStarVector(iv({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(HStarVector(iv({1, -1})), std::invalid_argument);
    CHECK_THROWS_AS(HStarVector(std::vector<Int>{}), std::invalid_argument);
}
