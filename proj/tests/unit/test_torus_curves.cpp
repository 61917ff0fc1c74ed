#include <doctest.h>

#include <numeric>

#include "elliptic/torus_curves.hpp"

using namespace elliptic;

namespace {

CurveClass kc(long p, long q) { return {p, q, Basis::klein_level}; }
CurveClass lc(long p, long q) { return {p, q, Basis::lens_heegaard}; }

// Longitudes of R_u written as a^p b^{2q} (a^m b^{2n})^k with pn - qm = +-1.
bool longitude_by_family(const CurveClass& c, long m, long n) {
    for (long p = -12; p <= 12; ++p)
        for (long q = -12; q <= 12; ++q) {
            if (std::abs(p * n - q * m) != 1) continue;
            for (long k = -12; k <= 12; ++k)
                for (long s : {1L, -1L})
                    if (s * c.p == p + k * m && s * c.q == q + k * n) return true;
        }
    return false;
}

}  // namespace

TEST_SUITE("torus_curves") {

TEST_CASE("intersection form") {
    CHECK(intersection(kc(1, 0), kc(0, 1)) == 1);
    CHECK(intersection(kc(1, 0), kc(7, 4)) == 4);
    CHECK(intersection(kc(1, -2), kc(3, 5)) == 11);
    CHECK(intersection(kc(3, 5), kc(1, -2)) == -11);
    CHECK_THROWS_AS(intersection(kc(1, 0), lc(0, 1)), CurveError);
    CHECK(kc(0, 0).is_primitive());
    CHECK(kc(2, 3).is_primitive());
    CHECK_FALSE(kc(2, 4).is_primitive());
}

TEST_CASE("meridians") {
    auto m23 = SplittingContext::klein(2, 3);
    CHECK(is_meridian(kc(2, 3), m23, Side::v));
    CHECK(is_meridian(kc(-2, -3), m23, Side::v));
    CHECK_FALSE(is_meridian(kc(1, 0), m23, Side::v));
    auto l52 = SplittingContext::lens(5, 2);
    CHECK(is_meridian(lc(5, 2), l52, Side::w));
    CHECK(is_meridian(lc(0, 1), l52, Side::v));
}

TEST_CASE("longitudes") {
    for (long m : {2L, 3L, 7L}) CHECK(is_longitude(kc(1, 0), SplittingContext::klein(m, 1), Side::v));
    auto m23 = SplittingContext::klein(2, 3);
    CHECK_FALSE(is_longitude(kc(1, 0), m23, Side::v));
    auto m11 = SplittingContext::klein(1, 1);
    CHECK_FALSE(is_longitude(kc(1, 1), m11, Side::v));
    CHECK(is_longitude(kc(1, 0), m11, Side::v));
    CHECK(is_longitude(kc(0, 1), m11, Side::v));
}

TEST_CASE("longitude test agrees with the parameterized family") {
    for (long m = 1; m <= 5; ++m)
        for (long n = 1; n <= 5; ++n) {
            if (std::gcd(m, n) != 1) continue;
            auto ctx = SplittingContext::klein(m, n);
            for (long p = -6; p <= 6; ++p)
                for (long q = -6; q <= 6; ++q) {
                    auto c = kc(p, q);
                    if (c.is_zero() || !c.is_primitive()) continue;
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(p);
                    CAPTURE(q);
                    CHECK(is_longitude(c, ctx, Side::v) == longitude_by_family(c, m, n));
                    CHECK(is_longitude(c.negated(), ctx, Side::v) == is_longitude(c, ctx, Side::v));
                    CHECK(is_longitude(kc(p + 3 * m, q + 3 * n), ctx, Side::v) == is_longitude(c, ctx, Side::v));
                }
        }
}

TEST_CASE("longitudes are fibers") {
    CHECK_FALSE(longitudes_are_fibers_check(2, 3).anomalous());
    auto r14 = longitudes_are_fibers_check(1, 4);
    CHECK_FALSE(r14.anomalous());
    CHECK(r14.b2_is_longitude);
    CHECK_FALSE(r14.a_is_longitude);
    auto r11 = longitudes_are_fibers_check(1, 1);
    CHECK(r11.anomalous());
    CHECK(r11.a_is_longitude);
    CHECK(r11.b2_is_longitude);
    CHECK_FALSE(r11.witnesses.empty());
    int anomalies = 0;
    for (long m = 1; m <= 40; ++m)
        for (long n = 1; n <= 40; ++n)
            if (std::gcd(m, n) == 1 && longitudes_are_fibers_check(m, n).anomalous()) ++anomalies;
    CHECK(anomalies == 1);
}

TEST_CASE("bilongitudes") {
    CHECK(bilongitude_classes(5, 1) == std::vector<CurveClass>{lc(1, 0)});
    CHECK(bilongitude_classes(7, 2).empty());
    CHECK(bilongitude_classes(4, 1) == std::vector<CurveClass>{lc(1, 0)});
    CHECK_THROWS_AS(bilongitude_classes(2, 1), CurveError);
    CHECK_THROWS_AS(bilongitude_classes(6, 2), CurveError);
    CHECK_THROWS_AS(bilongitude_classes(7, 4), CurveError);
}

TEST_CASE("level automorphisms") {
    CHECK_FALSE(level_automorphisms(5, 2, true).exists());
    auto swap = level_automorphisms(5, 1, true);
    REQUIRE(swap.exists());
    for (const auto& h : swap.solutions) {
        CHECK(h.eps == -1);
        CHECK(h.swap);
    }
    for (auto [m, q] : {std::pair{5L, 1L}, {5L, 2L}, {7L, 3L}, {12L, 5L}}) {
        auto fixed = level_automorphisms(m, q, false);
        REQUIRE(fixed.solutions.size() == 1);
        CHECK(fixed.solutions[0].u == 1);
        CHECK(fixed.solutions[0].v == 0);
    }
    for (long m = 3; m <= 30; ++m)
        for (long q = 2; 2 * q < m; ++q)
            if (std::gcd(m, q) == 1) CHECK_FALSE(level_automorphisms(m, q, true).exists());
}

TEST_CASE("level pair trichotomy") {
    CHECK(classify_level_pair(lc(1, 0), SplittingContext::lens(5, 1)) == LevelPairType::bilongitudinal);
    CHECK(classify_level_pair(lc(0, 1), SplittingContext::lens(5, 2)) == LevelPairType::w_cored);
    CHECK(classify_level_pair(lc(2, 1), SplittingContext::lens(5, 2)) == LevelPairType::v_cored);
    for (long m = 3; m <= 40; ++m)
        for (long q = 1; 2 * q < m; ++q) {
            if (std::gcd(m, q) != 1) continue;
            auto ctx = SplittingContext::lens(m, q);
            for (long p = -4; p <= 4; ++p)
                for (long s = -4; s <= 4; ++s) {
                    auto c = lc(p, s);
                    if (c.is_zero() || !c.is_primitive()) continue;
                    CHECK_FALSE((is_meridian(c, ctx, Side::v) && is_meridian(c, ctx, Side::w)));
                    try {
                        if (classify_level_pair(c, ctx) == LevelPairType::bilongitudinal) CHECK(q == 1);
                    } catch (const CurveContradiction&) {
                    }
                }
        }
}

}  // TEST_SUITE
