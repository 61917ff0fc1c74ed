#include <doctest.h>

#include <numeric>

#include "elliptic/invariants.hpp"
#include "elliptic/quaternion_groups.hpp"

using namespace elliptic;

namespace {

std::string isom(long m, long q) { return isometry_group_lens(make_lens(m, q)).isom.render(); }
std::string pi0(long m, long q) { return isometry_group_lens(make_lens(m, q)).pi0.render(); }

// Rotations F(g, h) with g on the Hopf circle and h = +-1 act trivially on the base.
std::size_t base_image_order(int m, int n) {
    auto g = construct_pi1(m, n);
    std::size_t kernel = 0;
    for (const auto& x : g.elements()) {
        const auto& r = x.right();
        if (!x.left().has_j() && !r.has_j() && (r.exponent() == 0 || r.exponent() == r.half_order())) ++kernel;
    }
    return g.size() / kernel;
}

}  // namespace

TEST_SUITE("manifold_invariants") {

TEST_CASE("lens canonicalization") {
    CHECK(make_lens(7, 5) == LensSpace{7, 2});
    CHECK(make_lens(7, -1) == LensSpace{7, 1});
    CHECK(make_lens(1, 0) == LensSpace{1, 0});
    CHECK(make_lens(2, 1) == LensSpace{2, 1});
    // 2 and 3 are inverse mod 5 but stay distinct descriptions only up to q -> m - q.
    CHECK(make_lens(5, 3) == LensSpace{5, 2});
    CHECK(make_lens(7, 3) == LensSpace{7, 3});
    CHECK(make_lens(7, 2) == LensSpace{7, 2});
    for (long m = 3; m <= 60; ++m)
        for (long q = 1; q < m; ++q) {
            if (std::gcd(m, q) != 1) continue;
            auto l = make_lens(m, q);
            CHECK(2 * l.q < m);
            CHECK(make_lens(l.m, l.q) == l);
            CHECK(make_lens(m, m - q) == l);
        }
    CHECK_THROWS_AS(make_lens(6, 2), InvariantError);
    CHECK_THROWS_AS(make_lens(0, 1), InvariantError);
}

TEST_CASE("lens isometry groups") {
    CHECK(isom(1, 0) == "O(4)");
    CHECK(pi0(1, 0) == "C₂");
    CHECK(isom(2, 1) == "(SO(3)×SO(3))∘C₂");
    CHECK(isom(5, 2) == "(S¹⋊̃S¹)∘C₄");
    CHECK(pi0(5, 2) == "C₄");
    CHECK(isom(12, 5) == "O(2)×O(2)");
    CHECK(pi0(12, 5) == "C₂×C₂");
    CHECK(isom(8, 3) == "O(2)⋊̃O(2)");
    CHECK(isom(7, 1) == "O(2)*⋊̃S³");
    CHECK(isom(8, 1) == "O(2)×SO(3)");
    CHECK(isom(7, 2) == "Dih(S¹×S¹)");
    CHECK(isometry_group_lens(make_lens(7, 2)).isom.render(Notation::ascii) == "Dih(S^1xS^1)");
}

TEST_CASE("every lens space lands in exactly one row") {
    for (long m = 1; m <= 500; ++m)
        for (long q = 0; q < std::max(m, 1L); ++q) {
            if (std::gcd(m, q) != 1) continue;
            CHECK_NOTHROW(isometry_group_lens(make_lens(m, q)));
        }
}

TEST_CASE("component groups match the isometry groups") {
    for (long m = 1; m <= 60; ++m)
        for (long q = 0; q < std::max(m, 1L); ++q) {
            if (std::gcd(m, q) != 1) continue;
            auto r = isometry_group_lens(make_lens(m, q));
            CHECK(r.isom.component_count() == r.pi0.order());
        }
    for (const auto& row : elliptic_table()) CHECK(row.isom.component_count() == row.pi0.order());
    for (const auto& row : lens_table()) CHECK(row.isom.component_count() == row.pi0.order());
}

TEST_CASE("elliptic isometry groups") {
    auto q8 = isometry_group_elliptic({EllipticFamily::q8, 0, 0});
    CHECK(q8.isom.render() == "SO(3)×S₃");
    CHECK(q8.pi0.render() == "S₃");
    auto t = isometry_group_elliptic({EllipticFamily::t24_x_cn, 0, 5});
    CHECK(t.isom.render() == "O(2)×C₂");
    CHECK(t.pi0.render() == "C₂×C₂");
    CHECK(isometry_group_elliptic({EllipticFamily::index3_diagonal, 0, 3}).isom.render() == "O(2)");
    CHECK_THROWS_AS(isometry_group_elliptic({EllipticFamily::d4m, 2, 0}), InvariantError);
    CHECK_THROWS_AS(isometry_group_elliptic({EllipticFamily::q8_x_cn, 0, 1}), InvariantError);
}

TEST_CASE("isometry groups of M(m, n)") {
    CHECK(isom_Mmn(1, 1).group.render() == "SO(3)×S¹");
    CHECK(isom_Mmn(1, 4).group.render() == "S¹×S¹");
    CHECK(isom_Mmn(7, 1).group.render() == "SO(3)");
    CHECK(isom_Mmn(3, 4).group.render() == "S¹");
}

TEST_CASE("quotient orbifolds") {
    auto a = quotient_orbifold(4, 3);
    CHECK(a.image.render() == "D₈");
    CHECK(a.orbifold.render() == "(S²;2,2,4)");
    CHECK(a.isom.render() == "{1}");
    auto b = quotient_orbifold(1, 2);
    CHECK(b.image.render() == "C₂");
    CHECK(b.orbifold.render() == "(S²;2,2)");
    CHECK(b.isom.render() == "SO(2)");
    auto c = quotient_orbifold(5, 1);
    CHECK(c.orbifold.render() == "(ℝP²;)");
    CHECK(c.isom.render() == "SO(3)");
    auto d = quotient_orbifold(1, 1);
    CHECK(d.extrapolated);
    CHECK(d.orbifold.render() == "(S²;2,2)");
    CHECK_FALSE(a.extrapolated);
}

TEST_CASE("orbifold group order matches the action on the base") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CAPTURE(m);
            CAPTURE(n);
            auto o = quotient_orbifold(m, n);
            REQUIRE(o.image.order());
            CHECK(static_cast<std::size_t>(*o.image.order()) == base_image_order(m, n));
        }
}

TEST_CASE("Hopf fibering data") {
    for (long m = 3; m <= 12; ++m) CHECK(hopf_seifert_data(make_lens(m, 1)).circle_bundle);
    auto s = hopf_seifert_data(make_lens(5, 2));
    CHECK_FALSE(s.circle_bundle);
    CHECK(s.exceptional_fibers == 2);
    CHECK(s.exceptional_order == 5);
    CHECK(hopf_seifert_data(make_lens(9, 4)).exceptional_order == 3);
}

TEST_CASE("Diff homeomorphism types") {
    CHECK(diff_homeo_type_lens(make_lens(7, 1)).diff.render() == "P₂×S¹×S³×ℝ^∞");
    CHECK(diff_homeo_type_lens(make_lens(8, 1)).diff.render() == "P₂×S¹×SO(3)×ℝ^∞");
    CHECK(diff_homeo_type_lens(make_lens(7, 2)).diff.render() == "P₂×S¹×S¹×ℝ^∞");
    CHECK(diff_homeo_type_lens(make_lens(12, 5)).diff.render() == "P₄×S¹×S¹×ℝ^∞");
    CHECK(diff_homeo_type_lens(make_lens(5, 2)).diff.render() == "P₄×S¹×S¹×ℝ^∞");
    CHECK(diff_homeo_type_klein(2, 1).diff.render() == "P₆×SO(3)×ℝ^∞");
    CHECK(diff_homeo_type_klein(2, 3).diff.render() == "P₁₂×S¹×ℝ^∞");
    CHECK(diff_homeo_type_klein(3, 1).diff.render() == "P₂×SO(3)×ℝ^∞");
    CHECK(diff_homeo_type_klein(3, 2).diff.render() == "P₄×S¹×ℝ^∞");
}

TEST_CASE("Klein parameters") {
    CHECK(klein_m_type(1, 3) == MType::lens);
    CHECK(klein_m_type(2, 3) == MType::quaternionic);
    CHECK(klein_m_type(5, 3) == MType::prism);
    CHECK_THROWS_AS(require_klein_params(2, 4), InvariantError);
    CHECK_THROWS_AS(require_klein_params(0, 1), InvariantError);
}

TEST_CASE("descriptor algebra") {
    auto g = GroupDescriptor::product({GroupDescriptor::cyclic(2), GroupDescriptor::atom(GroupDescriptor::Atom::sym3)});
    CHECK(g.order() == 12);
    CHECK(GroupDescriptor::dihedral("2m").substitute(4, 3).render() == "D₈");
    CHECK(evaluate_index("2m", 3) == 6);
    CHECK(evaluate_index("4n", {}, 2) == 8);
    CHECK_FALSE(evaluate_index("2m").has_value());
    CHECK(display_width("S¹⋊̃S¹") == 5);
}

}  // TEST_SUITE
