#include "elliptic/torus_curves.hpp"

#include <cstdlib>
#include <numeric>

namespace elliptic {

namespace {

CurveClass checked(const std::optional<CurveClass>& c, const char* what) {
    if (!c) throw CurveError(what);
    return *c;
}

}  // namespace

bool CurveClass::is_primitive() const { return is_zero() || std::gcd(p, q) == 1; }

std::string CurveClass::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

long intersection(const CurveClass& x, const CurveClass& y) {
    if (x.basis != y.basis) throw CurveError("curve classes use different bases");
    return x.p * y.q - x.q * y.p;
}

bool same_isotopy_class(const CurveClass& x, const CurveClass& y) { return x == y || x == y.negated(); }

SplittingContext SplittingContext::klein(long m, long n) {
    if (m < 1 || n < 1) throw CurveError("M(m,n) needs m, n >= 1");
    SplittingContext c;
    c.basis = Basis::klein_level;
    c.m = m;
    c.n_or_q = n;
    c.meridian_v = {m, n, Basis::klein_level};
    c.fiber = n == 1 ? CurveClass{1, 0, Basis::klein_level} : CurveClass{0, 1, Basis::klein_level};
    return c;
}

SplittingContext SplittingContext::lens(long m, long q) {
    if (m < 1) throw CurveError("L(m,q) needs m >= 1");
    if (std::gcd(m, q) != 1) throw CurveError("L(m,q) needs gcd(m,q) = 1");
    SplittingContext c;
    c.basis = Basis::lens_heegaard;
    c.m = m;
    c.n_or_q = q;
    c.meridian_v = {0, 1, Basis::lens_heegaard};
    c.meridian_w = CurveClass{m, q, Basis::lens_heegaard};
    return c;
}

std::optional<CurveClass> SplittingContext::meridian(Side s) const {
    if (s == Side::v) return meridian_v;
    return meridian_w;
}

bool is_meridian(const CurveClass& c, const SplittingContext& ctx, Side side) {
    if (c.basis != ctx.basis) throw CurveError("curve class and splitting use different bases");
    if (c.is_zero()) return false;
    auto mer = ctx.meridian(side);
    if (!mer) return false;
    return same_isotopy_class(c, *mer);
}

bool is_longitude(const CurveClass& c, const SplittingContext& ctx, Side side) {
    CurveClass mer = checked(ctx.meridian(side), "this side is not a solid torus");
    return std::labs(intersection(c, mer)) == 1;
}

LongitudeFiberReport longitudes_are_fibers_check(long m, long n) {
    SplittingContext ctx = SplittingContext::klein(m, n);
    CurveClass a{1, 0, Basis::klein_level};
    CurveClass b2{0, 1, Basis::klein_level};

    LongitudeFiberReport r;
    r.m = m;
    r.n = n;
    if (is_meridian(a, ctx, Side::v) || is_meridian(b2, ctx, Side::v))
        throw std::logic_error("a basic class is a meridian of R_u");
    r.a_is_longitude = is_longitude(a, ctx, Side::v);
    r.b2_is_longitude = is_longitude(b2, ctx, Side::v);

    auto holds = [&](const CurveClass& fiber, const char* fiber_name) {
        bool ok = true;
        for (auto [c, name] : {std::pair{a, "a"}, std::pair{b2, "b^2"}}) {
            bool longitude = name == std::string("a") ? r.a_is_longitude : r.b2_is_longitude;
            if (longitude && !same_isotopy_class(c, fiber)) {
                ok = false;
                r.witnesses.push_back(std::string(name) + " is a longitude of R_u but the fiber is " + fiber_name);
            }
        }
        return ok;
    };

    r.holds_for_level_fibering = holds(*ctx.fiber, n == 1 ? "a" : "b^2");
    if (m == 1 && n == 1) r.holds_for_other_fibering = holds(b2, "b^2");
    return r;
}

std::vector<CurveClass> bilongitude_classes(long m, long q) {
    if (m < 3) throw CurveError("bilongitude classes need m >= 3");
    if (q < 1 || 2 * q >= m || std::gcd(m, q) != 1) throw CurveError("q must satisfy 1 <= q < m/2, gcd(q,m) = 1");
    std::vector<CurveClass> out;
    CurveClass mw{m, q, Basis::lens_heegaard};
    for (long k = -m; k <= m; ++k) {
        CurveClass c{1, k, Basis::lens_heegaard};
        if (std::labs(intersection(c, mw)) == 1) out.push_back(c);
    }
    return out;
}

LevelAutomorphisms level_automorphisms(long m, long q, bool swap, long window) {
    if (m < 3) throw CurveError("level automorphisms need m >= 3");
    if (q < 1 || 2 * q >= m || std::gcd(m, q) != 1) throw CurveError("q must satisfy 1 <= q < m/2, gcd(q,m) = 1");
    LevelAutomorphisms out;
    if (!swap) {
        // h(b) = b and h(m a + q b) = m a + q b, with det h = u = +-1.
        for (long u = -window; u <= window; ++u)
            for (long v = -window; v <= window; ++v) {
                bool fixes_meridian = m * u == m && m * v + q == q;
                if (fixes_meridian && std::labs(u) == 1) out.solutions.push_back({u, v, 1, false});
            }
        return out;
    }
    // h(b) = eps (m a + q b), det = -1, u = 1 mod m, -eps (q u - m v) = 1.
    for (long eps : {1L, -1L})
        for (long v = -window; v <= window; ++v) {
            long num = m * v - eps;
            if (num % q != 0) continue;
            long u = num / q;
            long det = u * eps * q - v * eps * m;
            if (det == -1 && ((u - 1) % m + m) % m == 0 && -eps * (q * u - m * v) == 1)
                out.solutions.push_back({u, v, eps, true});
        }
    return out;
}

std::string to_string(LevelPairType t) {
    switch (t) {
        case LevelPairType::v_cored: return "V-cored";
        case LevelPairType::w_cored: return "W-cored";
        case LevelPairType::bilongitudinal: return "bilongitudinal";
    }
    return "unknown";
}

LevelPairType classify_level_pair(const CurveClass& c, const SplittingContext& ctx) {
    if (!ctx.meridian_w) throw CurveError("classification needs a Heegaard splitting");
    if (c.is_zero() || !c.is_primitive()) throw CurveError("class " + c.to_string() + " is not a primitive nonzero class");
    bool mer_v = is_meridian(c, ctx, Side::v);
    bool mer_w = is_meridian(c, ctx, Side::w);
    bool lon_v = is_longitude(c, ctx, Side::v);
    bool lon_w = is_longitude(c, ctx, Side::w);
    if (mer_v && mer_w) throw CurveContradiction("class " + c.to_string() + " is a meridian of both sides");
    if (!mer_v && !lon_v) return LevelPairType::v_cored;
    if (!mer_w && !lon_w) return LevelPairType::w_cored;
    if (lon_v && lon_w) return LevelPairType::bilongitudinal;
    throw CurveContradiction("class " + c.to_string() + " is a meridian of one side and a longitude of the other");
}

}  // namespace elliptic
