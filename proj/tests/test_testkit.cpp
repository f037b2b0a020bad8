#include <doctest.h>

#include "pimenov/errors.hpp"
#include "pimenov/testkit.hpp"
#include "support.hpp"

using namespace pimenov;
using namespace pimenov::testkit;
using testing::E;

TEST_CASE("random elements respect their profile") {
    CHECK(!real_part(random_element(3, 1, Profile::invertible())).is_zero());
    Element h = random_element(2, 1, Profile::homogeneous(2));
    REQUIRE(h.terms().size() == 1);
    CHECK(h.terms().begin()->first == Monomial::of({1, 2}));
    CHECK(random_element(5, 42, Profile::non_invertible()) == random_element(5, 42, Profile::non_invertible()));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 12);
        Element inv = random_element(n, seed, Profile::invertible());
        CHECK(is_invertible(inv));
        Element non = random_element(n, seed, Profile::non_invertible());
        CHECK_FALSE(non.is_zero());
        CHECK_FALSE(is_invertible(non));
        int t = static_cast<int>(seed % static_cast<std::uint64_t>(n)) + 1;
        Element hom = random_element(n, seed, Profile::homogeneous(t));
        CHECK_FALSE(hom.is_zero());
        CHECK(homogeneous_component(hom, t) == hom);
    }
    CHECK_THROWS_AS(random_element(2, 1, Profile::homogeneous(3)), RangeError);
    CHECK(parse_profile("homogeneous:2")->t == 2);
    CHECK(parse_profile("non-invertible")->kind == Profile::Kind::non_invertible);
    CHECK_FALSE(parse_profile("homogeneous:"));
    CHECK_FALSE(parse_profile("bogus"));
}

TEST_CASE("grid enumeration") {
    GridSpec g = GridSpec::homogeneous(integer_range(-1, 1), 4, 2);
    CHECK(g.free_monomials().size() == 6);
    CHECK(g.instance_count() == 729);
    std::uint64_t seen = 0;
    g.for_each([&](const Element& p) {
        ++seen;
        CHECK(homogeneous_component(p, 2) == p);
    });
    CHECK(seen == 729);
    GridSpec p3{integer_range(-2, 2), 3, 2, 3};
    CHECK(p3.instance_count() == 625);
    GridSpec empty = GridSpec::homogeneous({}, 4, 2);
    CHECK(empty.instance_count() == 0);
}

TEST_CASE("brute-force factor search") {
    auto found = brute_force_factor_search(E("i1*i2", 2), GridSpec::homogeneous({0, 1}, 2, 2));
    REQUIRE(found);
    CHECK(found->first == E("i1", 2));
    CHECK(found->second == E("i2", 2));

    std::vector<Rational> halves = {-1, Rational(-1, 2), 0, Rational(1, 2), 1};
    Element disjoint = E("i1*i2+i3*i4", 4);
    auto pair = brute_force_factor_search(disjoint, GridSpec::homogeneous(halves, 4, 2));
    REQUIRE(pair);
    CHECK(pair->first * pair->second == disjoint);
    // The constructed factors lie inside this grid as well.
    auto f = factor(disjoint);
    for (const auto& x : f.factors) {
        for (const auto& [m, c] : x.terms()) {
            CHECK(std::find(halves.begin(), halves.end(), c.as_rational()) != halves.end());
        }
    }

    std::vector<Rational> wide = {-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, 2};
    CHECK_FALSE(brute_force_factor_search(E("i1*i2+i1*i3+i2*i4", 4), GridSpec::homogeneous(wide, 4, 2)));
    CHECK_FALSE(brute_force_factor_search(E("i1*i2+i1*i3+i2*i4", 4), GridSpec::homogeneous(integer_range(-3, 3), 4, 2)));

    CHECK_THROWS_AS(brute_force_factor_search(E("i1*i2", 4), GridSpec::homogeneous(integer_range(-20, 20), 4, 2)),
                    ResourceError);
    CHECK_THROWS_AS(brute_force_factor_search(E("i1*i2", 4), GridSpec::homogeneous({0, 1}, 4, 2), 10), ResourceError);
    CHECK_THROWS_AS(brute_force_factor_search(E("i1", 4), GridSpec::homogeneous({0, 1}, 4, 2)), ContractError);
    CHECK_THROWS_AS(brute_force_factor_search(Element(4), GridSpec::homogeneous({0, 1}, 4, 2)), ContractError);
}

TEST_CASE("exhaustive classifier check") {
    auto small = exhaustive_classifier_check(GridSpec::homogeneous(integer_range(-1, 1), 4, 2));
    CHECK(small.instances == 728);
    CHECK(small.discrepancies.empty());
    CHECK(small.prime == 120);
    CHECK(small.to_json_lines().empty());

    auto empty = exhaustive_classifier_check(GridSpec::homogeneous({}, 4, 2));
    CHECK(empty.instances == 0);
    CHECK(empty.discrepancies.empty());

    // Grid {1}: 0 is added, so the all-ones four-cycle is among the instances.
    auto ones = exhaustive_classifier_check(GridSpec::homogeneous({1}, 4, 2));
    CHECK(ones.instances == 63);
    CHECK(ones.discrepancies.empty());
    CHECK(is_prime(E("i1*i2+i1*i3+i2*i4+i3*i4", 4)).verdict == Verdict::decomposable);

    CHECK_THROWS_AS(exhaustive_classifier_check(GridSpec::homogeneous({1}, 3, 2)), ContractError);
}

TEST_CASE("report rendering") {
    ClassifierReport r;
    r.instances = 1;
    r.prime = 1;
    r.discrepancies.push_back({E("i1*i2", 4), Verdict::prime, "grid factors i1 * i2"});
    CHECK(r.to_json_lines() ==
          R"({"element":{"n":4,"terms":[{"mono":[1,2],"coef":"1"}]},"verdict":"prime","detail":"grid factors i1 * i2"})"
          "\n");
    CHECK(r.to_text().find("discrepancies: 1") != std::string::npos);
}
