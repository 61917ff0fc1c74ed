#include "elliptic/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace elliptic {

namespace {

long mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

template <class Row, class Pred>
std::size_t unique_row(std::span<const Row> rows, Pred applies, const std::string& what) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!applies(rows[i])) continue;
        if (found) throw std::logic_error("two rows of the " + what + " table apply");
        found = i;
    }
    if (!found) throw std::logic_error("no row of the " + what + " table applies");
    return *found;
}

std::string sub(long v, Notation nt) { return subscript(std::to_string(v), nt); }

}  // namespace

LensSpace make_lens(long m, long q) {
    if (m < 1) throw InvariantError("lens space needs m >= 1");
    if (m == 1) return {1, 0};
    if (std::gcd(m, q) != 1) throw InvariantError("lens space needs gcd(m, q) = 1");
    long r = mod(q, m);
    return {m, std::min(r, m - r)};
}

IsometryInvariants isometry_group_lens(const LensSpace& l) {
    auto rows = lens_table();
    std::size_t i = unique_row(rows, [&](const LensRow& r) { return r.applies(l.m, l.q); }, "lens");
    return {rows[i].isom, rows[i].pi0, i};
}

IsometryInvariants isometry_group_elliptic(const EllipticGroup& g) {
    using F = EllipticFamily;
    bool needs_m = g.family == F::d4m || g.family == F::d4m_x_cn || g.family == F::index2_diagonal;
    bool needs_n = g.family == F::q8_x_cn || g.family == F::d4m_x_cn || g.family == F::index2_diagonal ||
                   g.family == F::t24_x_cn || g.family == F::index3_diagonal || g.family == F::o48_x_cn ||
                   g.family == F::i120_x_cn;
    if (needs_m && g.m <= 2) throw InvariantError("this family needs m > 2");
    if (needs_n && g.n <= 1) throw InvariantError("this family needs n > 1");
    auto rows = elliptic_table();
    std::size_t i = unique_row(rows, [&](const EllipticRow& r) { return r.family == g.family; }, "elliptic");
    return {rows[i].isom, rows[i].pi0, i};
}

namespace {

DiffType diff_row(DiffCase key) {
    for (const auto& r : diff_table())
        if (r.key == key) return {r.diff, key};
    throw std::logic_error("missing Diff row");
}

}  // namespace

DiffType diff_homeo_type_lens(const LensSpace& l) {
    if (l.m <= 2) throw InvariantError("no Diff corollary row for m <= 2");
    if (l.q == 1) return diff_row(l.m % 2 == 1 ? DiffCase::lens_q1_m_odd : DiffCase::lens_q1_m_even);
    long sq = mod(l.q * l.q, l.m);
    if (sq == 1 || sq == l.m - 1) return diff_row(DiffCase::lens_q2_pm1);
    return diff_row(DiffCase::lens_generic);
}

void require_klein_params(long m, long n) {
    if (m < 1 || n < 1) throw InvariantError("M(m,n) needs m, n >= 1");
    if (std::gcd(m, n) != 1) throw InvariantError("M(m,n) needs gcd(m,n) = 1");
}

DiffType diff_homeo_type_klein(long m, long n) {
    require_klein_params(m, n);
    if (m == 1) return diff_homeo_type_lens(make_lens(4 * n, 2 * n - 1));
    if (m == 2) return diff_row(n == 1 ? DiffCase::klein_q8 : DiffCase::klein_q8_x_cn);
    return diff_row(n == 1 ? DiffCase::klein_d4m : DiffCase::klein_other_prism);
}

MType klein_m_type(long m, long n) {
    require_klein_params(m, n);
    if (m == 1) return MType::lens;
    return m == 2 ? MType::quaternionic : MType::prism;
}

std::optional<EllipticGroup> klein_pi1_group(long m, long n) {
    require_klein_params(m, n);
    using F = EllipticFamily;
    if (m == 1) return std::nullopt;
    if (m == 2) return EllipticGroup{n == 1 ? F::q8 : F::q8_x_cn, m, n};
    if (n == 1) return EllipticGroup{F::d4m, m, n};
    return EllipticGroup{n % 2 == 1 ? F::d4m_x_cn : F::index2_diagonal, m, n};
}

std::string klein_pi1_name(long m, long n, Notation nt) {
    auto g = klein_pi1_group(m, n);
    std::string x = nt == Notation::utf8 ? "×" : "x";
    if (!g) return "C" + sub(4 * n, nt);
    switch (g->family) {
        case EllipticFamily::q8: return "Q" + sub(8, nt);
        case EllipticFamily::q8_x_cn: return "Q" + sub(8, nt) + x + "C" + sub(n, nt);
        case EllipticFamily::d4m: return "D*" + sub(4 * m, nt);
        case EllipticFamily::d4m_x_cn: return "D*" + sub(4 * m, nt) + x + "C" + sub(n, nt);
        case EllipticFamily::index2_diagonal:
            return "index 2 diagonal of D*" + sub(4 * m, nt) + x + "C" + sub(4 * n, nt);
        default: break;
    }
    throw std::logic_error("unexpected pi_1 family");
}

KleinIsom isom_Mmn(long m, long n, Notation nt) {
    require_klein_params(m, n);
    auto rows = klein_isom_table();
    std::size_t i = unique_row(rows, [&](const KleinIsomRow& r) { return r.applies(m, n); }, "isom(M(m,n))");
    KleinIsom out{rows[i].isom, {}, rows[i].realized_as.in(nt), i};
    if (m == 1) {
        LensSpace l{4 * n, 2 * n - 1};
        out.manifold = "L(" + std::to_string(l.m) + "," + std::to_string(l.q) + ")";
    } else {
        out.manifold = to_string(klein_m_type(m, n));
    }
    return out;
}

QuotientOrbifold quotient_orbifold(long m, long n) {
    require_klein_params(m, n);
    bool extrapolated = m == 1 && n == 1;
    long nn = extrapolated ? 2 : n;
    auto rows = orbifold_table();
    std::size_t i = unique_row(rows, [&](const OrbifoldRow& r) { return r.applies(m, nn); }, "orbifold");
    const auto& r = rows[i];
    return {r.image.substitute(m, n), r.orbifold.substitute(m, n), r.isom, i, extrapolated};
}

SeifertData hopf_seifert_data(const LensSpace& l) {
    if (l.m < 1) throw InvariantError("lens space needs m >= 1");
    long g = std::gcd(l.q - 1, l.m);
    SeifertData d;
    d.exceptional_order = l.m / g;
    d.circle_bundle = d.exceptional_order == 1;
    d.exceptional_fibers = d.circle_bundle ? 0 : 2;
    d.fiber_a = l.m / g;
    d.fiber_b = (l.q - 1) / g;
    return d;
}

}  // namespace elliptic
