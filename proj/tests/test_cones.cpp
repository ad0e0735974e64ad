#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/cones.hpp"
#include "ehrhart/tables.hpp"

using namespace ehrhart;

static std::vector<Int> iv(std::initializer_list<int> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

TEST_CASE("shifted coordinates") {
    CHECK(x_vector(HStarVector(iv({1, 2, 4, 3, 3, 4, 2}))) ==
          iv({1, 3, 2, 2, 3, 1}));
    CHECK(x_vector(HStarVector(iv({1, 1, 1}))) == iv({0, 0}));
    // degree < dimension means no interior point, so x is undefined
    CHECK_THROWS_AS(x_vector(HStarVector(iv({1, 1, 0}))), std::invalid_argument);
}

TEST_CASE("chain cone facets are simplicial in every dimension") {
    for (int d = 1; d <= 8; ++d) {
        auto m = interior_chain_facets(d);
        CHECK(m.size() == static_cast<std::size_t>(d));
        CHECK(rank(m) == static_cast<std::size_t>(d));
    }
}

TEST_CASE("chain cone rays in low dimension") {
    CHECK(cprime_rays(1).rays == std::vector<std::vector<Int>>{iv({1})});
    CHECK(cprime_rays(2).rays ==
          std::vector<std::vector<Int>>{iv({1, 0}), iv({1, 1})});
    // odd d: the middle unit vector is a ray
    auto r5 = cprime_rays(5).rays;
    CHECK(std::find(r5.begin(), r5.end(), iv({0, 0, 1, 0, 0})) != r5.end());
}

TEST_CASE("chain cone rays match the realization tables") {
    std::map<int, std::set<std::vector<Int>>> expected;
    for (const auto& row : table_hoot())
        expected[row.d].insert(row.x);
    for (int d = 1; d <= 5; ++d) {
        auto rays = cprime_rays(d).rays;
        CHECK(std::set<std::vector<Int>>(rays.begin(), rays.end()) == expected[d]);
    }
}

TEST_CASE("every tabulated realization is exact") {
    for (const auto& row : table_hoot()) CHECK(realize(row.alpha, row.x));
    for (const auto& row : table_cmon()) CHECK(realize(row.alpha, row.x));
}

TEST_CASE("symmetric section") {
    for (const auto& row : table_hoot2()) CHECK(in_symmetric_section(row.x));
    CHECK_FALSE(in_symmetric_section(iv({1, 0, 0})));
    CHECK(in_symmetric_section(iv({1, 2, 1, 0})));
}

TEST_CASE("projective realization") {
    CHECK(realize_projective(iv({2, 2, 1, 1, 1, 1, 1, 1}),
                             iv({0, 0, 1, 1, 0, 0, 0})));
    CHECK(realize_projective(iv({10, 4, 1, 1, 1, 1, 1, 1}),
                             iv({1, 3, 2, 2, 3, 1, 0})));
    CHECK(projectively_equal(iv({0, 2, 4}), iv({1, 2, 3})));
    CHECK_FALSE(projectively_equal(iv({0, 1, 3}), iv({1, 2, 3})));
}

TEST_CASE("dimension six rays satisfy the strict inequalities") {
    auto check_x = [](const std::vector<Int>& x) {
        // x_6 <= x_1 <= x_5 <= x_2, the chain sums, and x_1 + x_2 <= x_3 + x_4
        CHECK(x[5] <= x[0]);
        CHECK(x[0] <= x[4]);
        CHECK(x[4] <= x[1]);
        CHECK(x[0] + x[1] <= x[3] + x[4]);
        CHECK(x[3] + x[4] <= x[1] + x[2]);
        CHECK(x[0] + x[1] <= x[2] + x[3]);
    };
    for (const auto& ray : cdoubleprime6_rays().rays) check_x(ray);
}

TEST_CASE("cone membership certificates") {
    auto cone = cprime_rays(2);
    auto cert = cone_membership(iv({2, 1}), cone);
    REQUIRE(cert);
    CHECK(*cert == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK_FALSE(cone_membership(iv({-1, 0}), cone));
    CHECK_FALSE(cone_membership(iv({0, 1}), cone));
    CHECK_THROWS_AS(cone_membership(iv({1, 1, 1}), cone), std::invalid_argument);
}
