#include <doctest.h>

#include <numeric>

#include "elliptic/quaternion_groups.hpp"
#include "oracles/quaternion_matrix.hpp"

using namespace elliptic;

namespace {

oracle::Cx2 to_matrix(const O2StarElement& g) {
    auto m = oracle::Cx2::xi_power(g.half_order(), g.exponent());
    return g.has_j() ? m * oracle::Cx2::j() : m;
}

oracle::Mat4 to_rotation(const SO4Element& x) { return oracle::rotation_matrix(to_matrix(x.left()), to_matrix(x.right())); }

bool close(const oracle::Cx2& p, const oracle::Cx2& q) {
    return std::abs(p.a - q.a) < 1e-12 && std::abs(p.b - q.b) < 1e-12 && std::abs(p.c - q.c) < 1e-12 &&
           std::abs(p.d - q.d) < 1e-12;
}

std::vector<long long> matrix_orders(const std::vector<oracle::Mat4>& elems) {
    std::vector<long long> orders;
    oracle::Mat4 id{};
    for (std::size_t i = 0; i < 4; ++i) id[i][i] = 1;
    for (const auto& x : elems) {
        long long k = 1;
        auto y = x;
        while (oracle::key_of(y) != oracle::key_of(id)) {
            y = oracle::multiply(y, x);
            ++k;
        }
        orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

}  // namespace

TEST_SUITE("quaternion_groups") {

TEST_CASE("O(2)* multiplication follows the defining table") {
    O2StarElement j2(2, 0, true);
    CHECK(j2 * j2 == O2StarElement(2, 2, false));
    O2StarElement i4(4, 2);
    CHECK(i4 * i4 == O2StarElement(4, 4));
    O2StarElement ij(2, 1, true);
    CHECK(ij * ij == O2StarElement(2, 2));
    for (int n = 1; n <= 6; ++n)
        for (int a = 0; a < 2 * n; ++a)
            for (int b = 0; b < 2 * n; ++b) {
                CHECK(O2StarElement(n, a) * O2StarElement(n, b) == O2StarElement(n, a + b));
                CHECK(O2StarElement(n, a) * O2StarElement(n, b, true) == O2StarElement(n, a + b, true));
                CHECK(O2StarElement(n, a, true) * O2StarElement(n, b) == O2StarElement(n, a - b, true));
                CHECK(O2StarElement(n, a, true) * O2StarElement(n, b, true) == O2StarElement(n, a - b + n));
            }
}

TEST_CASE("O(2)* agrees with complex 2x2 matrices") {
    for (int n : {1, 2, 3, 4, 6}) {
        std::vector<O2StarElement> elems;
        for (int a = 0; a < 2 * n; ++a)
            for (bool j : {false, true}) elems.emplace_back(n, a, j);
        for (const auto& g : elems) {
            CHECK(close(to_matrix(g * g.inverse()), oracle::Cx2::identity()));
            CHECK(std::abs(to_matrix(g).real_part() -
                           std::cos(std::numbers::pi * boost::rational_cast<double>(g.real_angle()))) < 1e-12);
            for (const auto& h : elems) CHECK(close(to_matrix(g * h), to_matrix(g) * to_matrix(h)));
        }
        CHECK(O2StarElement::minus_one(n).negated().is_identity());
    }
}

TEST_CASE("SO(4) pairs are identified up to a common sign") {
    O2StarElement g(3, 1), h(3, 2, true);
    SO4Element x(g, h), y(g.negated(), h.negated());
    CHECK(x == y);
    CHECK(x.left().exponent() < 3);
    SO4Element z(O2StarElement(3, 4), O2StarElement(3, 5, true));
    CHECK((x * z) == SO4Element((x * z).left(), (x * z).right()));
    CHECK(oracle::key_of(to_rotation(x * z)) == oracle::key_of(oracle::multiply(to_rotation(x), to_rotation(z))));
    CHECK((x * x.inverse()).is_identity());
}

TEST_CASE("construct_pi1 has order 4mn and matches the embedding") {
    CHECK(construct_pi1(1, 1).size() == 4);
    CHECK(construct_pi1(2, 1).size() == 8);
    CHECK(construct_pi1(3, 5).size() == 60);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            auto g = construct_pi1(m, n);
            REQUIRE(g.size() == static_cast<std::size_t>(4 * m * n));
            std::vector<oracle::Mat4> mats;
            for (const auto& x : g.elements()) mats.push_back(to_rotation(x));
            auto reference = oracle::closure(oracle::klein_generators(m, n));
            CHECK(reference.size() == static_cast<std::size_t>(4 * m * n));
            CHECK(oracle::closure(mats).size() == g.size());
            CHECK(matrix_orders(mats) == matrix_orders(reference));
        }
}

TEST_CASE("free action holds exactly for coprime parameters") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            auto g = construct_pi1(m, n);
            auto r = verify_free_action(g);
            bool reference_free = true;
            for (const auto& x : oracle::closure(oracle::klein_generators(m, n))) {
                oracle::Mat4 id{};
                for (std::size_t i = 0; i < 4; ++i) id[i][i] = 1;
                if (oracle::key_of(x) != oracle::key_of(id) && oracle::has_fixed_vector(x)) reference_free = false;
            }
            CHECK(r.free == reference_free);
            CHECK(r.free == (std::gcd(m, n) == 1));
            if (!r.free) {
                REQUIRE(r.witness);
                CHECK(witness_residual(*r.witness) < 1e-9);
                CHECK(oracle::fixes(to_rotation(r.witness->element),
                                    {r.witness->fixed_point.w, r.witness->fixed_point.x, r.witness->fixed_point.y,
                                     r.witness->fixed_point.z}));
            }
        }
}

TEST_CASE("F(i, i) fixes 1") {
    O2StarElement i(2, 1);
    auto g = FiniteSubgroup::generated_by({SO4Element(i, i)});
    CHECK(g.size() == 2);
    auto r = verify_free_action(g);
    REQUIRE_FALSE(r.free);
    CHECK(std::abs(r.witness->fixed_point.w) > 0.999);
    CHECK(witness_residual(*r.witness) < 1e-12);
}

TEST_CASE("F(xi_8, j) agrees with a sampled fixed point search") {
    auto g = FiniteSubgroup::generated_by({SO4Element(O2StarElement(4, 1), O2StarElement(4, 0, true))});
    auto r = verify_free_action(g);
    bool sampled_fixed = false;
    for (const auto& x : g.elements()) {
        if (x.is_identity()) continue;
        auto rot = to_rotation(x);
        // Dense sample of S^3 in Hopf coordinates.
        for (int a = 0; a < 24 && !sampled_fixed; ++a)
            for (int b = 0; b < 48 && !sampled_fixed; ++b)
                for (int c = 0; c < 48 && !sampled_fixed; ++c) {
                    double eta = std::numbers::pi / 2 * a / 23, t1 = 2 * std::numbers::pi * b / 48,
                           t2 = 2 * std::numbers::pi * c / 48;
                    std::array<double, 4> q{std::cos(eta) * std::cos(t1), std::cos(eta) * std::sin(t1),
                                            std::sin(eta) * std::cos(t2), std::sin(eta) * std::sin(t2)};
                    if (oracle::fixes(rot, q, 1e-6)) sampled_fixed = true;
                }
        if (oracle::has_fixed_vector(rot)) sampled_fixed = true;
    }
    CHECK(r.free == !sampled_fixed);
}

TEST_CASE("order profiles") {
    auto q8 = subgroup_order_profile(construct_pi1(2, 1));
    CHECK(q8.element_orders == std::vector<long long>{1, 2, 4, 4, 4, 4, 4, 4});
    CHECK(q8.center_order == 2);
    CHECK(subgroup_order_profile(construct_pi1(1, 1)).element_orders == std::vector<long long>{1, 2, 4, 4});
    CHECK(subgroup_order_profile(construct_pi1(3, 3)) == abstract_cn_times_binary_dihedral_profile(3, 3));
    for (int m = 2; m <= 5; ++m)
        for (int n = 1; n <= 5; n += 2)
            if (std::gcd(m, n) == 1)
                CHECK(subgroup_order_profile(construct_pi1(m, n)) == abstract_cn_times_binary_dihedral_profile(n, m));
}

TEST_CASE("Cayley tables are associative") {
    CHECK(construct_pi1(3, 2).is_associative());
    auto table = construct_pi1(2, 1).cayley_table();
    CHECK(table.size() == 8);
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(construct_pi1(0, 1), GroupError);
    CHECK_THROWS_AS(O2StarElement(0, 0), GroupError);
    CHECK_THROWS_AS(FiniteSubgroup::generated_by({SO4Element(O2StarElement(2, 1), O2StarElement(2, 1))},
                                                 EmbeddingCase::generated, 1),
                    GroupError);
}

}  // TEST_SUITE
