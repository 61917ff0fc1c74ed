#include <doctest.h>

#include <map>

#include "elliptic/pi1.hpp"
#include "elliptic/quaternion_groups.hpp"
#include "oracles/todd_coxeter.hpp"

using namespace elliptic;

TEST_SUITE("pi1_normal_form") {

TEST_CASE("multiplication examples") {
    CHECK(Pi1Element::b(2, 3) * Pi1Element::a(2, 3) == Pi1Element(2, 3, 3, 1));
    CHECK(Pi1Element::b(2, 1) * Pi1Element::b(2, 1) == Pi1Element(2, 1, 2, 0));
    CHECK_THROWS_AS(Pi1Element::a(2, 3) * Pi1Element::a(3, 2), std::invalid_argument);
}

TEST_CASE("relations and orders") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(check_relations(m, n).all());
            CHECK(pi1_elements(m, n).size() == static_cast<std::size_t>(4 * m * n));
            auto a = Pi1Element::a(m, n), b = Pi1Element::b(m, n);
            CHECK(power(a, 2 * m).is_identity());
            CHECK(power(b, 4 * n).is_identity());
            auto am = power(a, m);
            CHECK((am * am).is_identity());
            for (const auto& x : pi1_elements(m, n)) {
                CHECK(am * x == x * am);
                CHECK((x * x.inverse()).is_identity());
            }
        }
}

TEST_CASE("order agrees with coset enumeration") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(oracle::pi1_presentation_order(m, n) == static_cast<std::size_t>(4 * m * n));
        }
}

TEST_CASE("associativity and the quaternionic model") {
    CHECK(pi1_is_associative(3, 2));
    CHECK(pi1_cayley_table(3, 2).size() == 24);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            auto iso = check_quaternionic_isomorphism(m, n);
            CHECK(iso.order == static_cast<std::size_t>(4 * m * n));
            CHECK(iso.ok());
        }
}

TEST_CASE("quaternionic images satisfy the relators") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto [a, b] = pi1_generator_images(m, n);
            CHECK(power(a, 2 * m).is_identity());
            CHECK(power(b, 4 * n).is_identity());
            CHECK((b * a * b.inverse() * a).is_identity());
            CHECK((power(a, m) * power(b, 2 * n)).is_identity());
        }
}

TEST_CASE("lens identification") {
    CHECK(lens_identification(1) == LensParams{4, 1});
    CHECK(lens_identification(2) == LensParams{8, 3});
    CHECK(lens_identification(5) == LensParams{20, 9});
    for (int n = 1; n <= 8; ++n) {
        auto g = construct_pi1(1, n);
        auto profile = subgroup_order_profile(g);
        CHECK(profile.element_orders.back() == 4 * n);
        CHECK(profile.center_order == g.size());
    }
}

}  // TEST_SUITE
