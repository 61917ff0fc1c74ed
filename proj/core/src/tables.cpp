#include "elliptic/tables.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace elliptic {

namespace {

using G = GroupDescriptor;
using A = GroupDescriptor::Atom;

G at(A a) { return G::atom(a); }
G c2() { return G::cyclic(2); }

bool q_squared_is(long m, long q, long r) { return ((q * q) % m + m) % m == ((r % m) + m) % m; }

bool lens_generic(long m, long q) { return m > 2 && q > 1; }

std::vector<LensRow> make_lens_table() {
    return {
        {{"m=1", "m=1"}, [](long m, long) { return m == 1; }, at(A::o4), c2()},
        {{"m=2", "m=2"}, [](long m, long) { return m == 2; }, G::extension(at(A::so3) * at(A::so3), 2), c2()},
        {{"m>2, m odd, q=1", "m>2, m odd, q=1"},
         [](long m, long q) { return m > 2 && m % 2 == 1 && q == 1; },
         G::central_product(at(A::o2_star), at(A::sphere3)), c2()},
        {{"m>2, m even, q=1", "m>2, m even, q=1"},
         [](long m, long q) { return m > 2 && m % 2 == 0 && q == 1; }, at(A::o2) * at(A::so3), c2()},
        {{"m>2, 1<q<m/2, q²≢±1 mod m", "m>2, 1<q<m/2, q^2 != +-1 mod m"},
         [](long m, long q) { return lens_generic(m, q) && !q_squared_is(m, q, 1) && !q_squared_is(m, q, -1); },
         at(A::dih_torus), c2()},
        {{"m>2, 1<q<m/2, q²≡−1 mod m", "m>2, 1<q<m/2, q^2 == -1 mod m"},
         [](long m, long q) { return lens_generic(m, q) && q_squared_is(m, q, -1); },
         G::extension(G::central_product(at(A::circle), at(A::circle)), 4), G::cyclic(4)},
        {{"m>2, 1<q<m/2, q²≡1 mod m, gcd(m,q+1)gcd(m,q−1)=m",
          "m>2, 1<q<m/2, q^2 == 1 mod m, gcd(m,q+1)gcd(m,q-1)=m"},
         [](long m, long q) {
             return lens_generic(m, q) && q_squared_is(m, q, 1) && std::gcd(m, q + 1) * std::gcd(m, q - 1) == m;
         },
         G::central_product(at(A::o2), at(A::o2)), c2() * c2()},
        {{"m>2, 1<q<m/2, q²≡1 mod m, gcd(m,q+1)gcd(m,q−1)=2m",
          "m>2, 1<q<m/2, q^2 == 1 mod m, gcd(m,q+1)gcd(m,q-1)=2m"},
         [](long m, long q) {
             return lens_generic(m, q) && q_squared_is(m, q, 1) &&
                    std::gcd(m, q + 1) * std::gcd(m, q - 1) == 2 * m;
         },
         at(A::o2) * at(A::o2), c2() * c2()},
    };
}

std::vector<EllipticRow> make_elliptic_table() {
    G s3 = at(A::sym3);
    G so3 = at(A::so3);
    G o2 = at(A::o2);
    using F = EllipticFamily;
    using M = MType;
    return {
        {F::q8, {"Q₈", "Q_8"}, M::quaternionic, so3 * s3, s3},
        {F::q8_x_cn, {"Q₈×Cₙ", "Q_8xC_n"}, M::quaternionic, o2 * s3, c2() * s3},
        {F::d4m, {"D*₄ₘ", "D*_4m"}, M::prism, so3 * c2(), c2()},
        {F::d4m_x_cn, {"D*₄ₘ×Cₙ", "D*_4mxC_n"}, M::prism, o2 * c2(), c2() * c2()},
        {F::index2_diagonal, {"index 2 diagonal of D*₄ₘ×C₄ₙ", "index 2 diagonal of D*_4mxC_4n"}, M::prism,
         o2 * c2(), c2() * c2()},
        {F::t24, {"T*₂₄", "T*_24"}, M::tetrahedral, so3 * c2(), c2()},
        {F::t24_x_cn, {"T*₂₄×Cₙ", "T*_24xC_n"}, M::tetrahedral, o2 * c2(), c2() * c2()},
        {F::index3_diagonal, {"index 3 diagonal of T*₂₄×C₃ₙ", "index 3 diagonal of T*_24xC_3n"},
         M::tetrahedral, o2, c2()},
        {F::o48, {"O*₄₈", "O*_48"}, M::octahedral, so3, G::trivial()},
        {F::o48_x_cn, {"O*₄₈×Cₙ", "O*_48xC_n"}, M::octahedral, o2, c2()},
        {F::i120, {"I*₁₂₀", "I*_120"}, M::icosahedral, so3, G::trivial()},
        {F::i120_x_cn, {"I*₁₂₀×Cₙ", "I*_120xC_n"}, M::icosahedral, o2, c2()},
    };
}

const Text kQuatOrPrism{"quaternionic (m=2) or prism (m>2)", "quaternionic (m=2) or prism (m>2)"};

std::vector<KleinIsomRow> make_klein_isom_table() {
    return {
        {{"m=n=1", "m=n=1"}, [](long m, long n) { return m == 1 && n == 1; }, {"L(4,1)", "L(4,1)"},
         at(A::so3) * at(A::circle), {"{f(q,x) | (q,x) ∈ S³×J}", "{f(q,x) | (q,x) in S^3xJ}"}},
        {{"m=1, n>1", "m=1, n>1"}, [](long m, long n) { return m == 1 && n > 1; },
         {"L(4n,2n−1)", "L(4n,2n-1)"}, at(A::circle) * at(A::circle),
         {"{f(x,y) | (x,y) ∈ S¹×J}", "{f(x,y) | (x,y) in S^1xJ}"}},
        {{"m>1, n=1", "m>1, n=1"}, [](long m, long n) { return m > 1 && n == 1; }, kQuatOrPrism, at(A::so3),
         {"{f(1,q) | q ∈ S³}", "{f(1,q) | q in S^3}"}},
        {{"m>1, n>1", "m>1, n>1"}, [](long m, long n) { return m > 1 && n > 1; }, kQuatOrPrism, at(A::circle),
         {"{f(x,1) | x ∈ S¹}", "{f(x,1) | x in S^1}"}},
    };
}

std::vector<OrbifoldRow> make_orbifold_table() {
    using B = OrbifoldDescriptor::Base;
    return {
        {{"m>1, n>1", "m>1, n>1"}, [](long m, long n) { return m > 1 && n > 1; }, G::dihedral("2m"),
         {"⟨rₘ,t⟩", "<r_m,t>"}, {B::sphere, {"2", "2", "m"}}, G::trivial()},
        {{"m=1, n>1", "m=1, n>1"}, [](long m, long n) { return m == 1 && n > 1; }, c2(), {"⟨t⟩", "<t>"},
         {B::sphere, {"2", "2"}}, at(A::so2)},
        {{"m>1, n=1", "m>1, n=1"}, [](long m, long n) { return m > 1 && n == 1; }, c2(), {"⟨α⟩", "<alpha>"},
         {B::projective_plane, {}}, at(A::so3)},
    };
}

std::vector<DiffRow> make_diff_table() {
    G r = at(A::r_inf);
    G s1 = at(A::circle);
    G so3 = at(A::so3);
    using D = DiffCase;
    return {
        {D::lens_q1_m_odd, "lens", {"m odd, q=1", "m odd, q=1"}, G::product({G::points(2), s1, at(A::sphere3), r})},
        {D::lens_q1_m_even, "lens", {"m even, q=1", "m even, q=1"}, G::product({G::points(2), s1, so3, r})},
        {D::lens_generic, "lens", {"q>1, q²≢±1 mod m", "q>1, q^2 != +-1 mod m"},
         G::product({G::points(2), s1, s1, r})},
        {D::lens_q2_pm1, "lens", {"q>1, q²≡±1 mod m", "q>1, q^2 == +-1 mod m"},
         G::product({G::points(4), s1, s1, r})},
        {D::klein_q8, "klein", {"π₁=Q₈", "pi1=Q_8"}, G::product({G::points(6), so3, r})},
        {D::klein_q8_x_cn, "klein", {"π₁=Q₈×Cₙ, n>2", "pi1=Q_8xC_n, n>2"}, G::product({G::points(12), s1, r})},
        {D::klein_d4m, "klein", {"π₁=D*₄ₘ, m≥3", "pi1=D*_4m, m>=3"}, G::product({G::points(2), so3, r})},
        {D::klein_other_prism, "klein", {"other prism", "other prism"}, G::product({G::points(4), s1, r})},
    };
}

using Grid = std::vector<std::vector<std::string>>;

Grid table_grid(TableId id, Notation nt) {
    bool u = nt == Notation::utf8;
    std::string pi0 = u ? "π₀" : "pi0";
    Grid g;
    switch (id) {
        case TableId::lens:
            g.push_back({"condition", "Isom(L(m,q))", pi0});
            for (const auto& r : lens_table()) g.push_back({r.condition.in(nt), r.isom.render(nt), r.pi0.render(nt)});
            break;
        case TableId::elliptic:
            g.push_back({"G", "M", "Isom(M)", pi0});
            for (const auto& r : elliptic_table())
                g.push_back({r.group.in(nt), to_string(r.mtype), r.isom.render(nt), r.pi0.render(nt)});
            break;
        case TableId::klein_isom:
            g.push_back({"m, n", "M(m,n)", "isom(M(m,n))", "realized as"});
            for (const auto& r : klein_isom_table())
                g.push_back({r.condition.in(nt), r.manifold.in(nt), r.isom.render(nt), r.realized_as.in(nt)});
            break;
        case TableId::orbifold:
            g.push_back({"m, n", u ? "h(π₁(M))" : "h(pi1(M))", "O", "isom(O)"});
            for (const auto& r : orbifold_table())
                g.push_back({r.condition.in(nt), r.image.render(nt) + "=" + r.image_generators.in(nt),
                             r.orbifold.render(nt), r.isom.render(nt)});
            break;
        case TableId::diff:
            g.push_back({"family", "case", "Diff(M)"});
            for (const auto& r : diff_table()) g.push_back({r.family, r.condition.in(nt), r.diff.render(nt)});
            break;
    }
    return g;
}

}  // namespace

std::optional<TableId> parse_table_id(const std::string& name) {
    for (TableId id : all_tables())
        if (table_name(id) == name) return id;
    return std::nullopt;
}

std::string table_name(TableId id) {
    switch (id) {
        case TableId::lens: return "lens";
        case TableId::elliptic: return "elliptic";
        case TableId::klein_isom: return "klein-isom";
        case TableId::orbifold: return "orbifold";
        case TableId::diff: return "diff";
    }
    return "unknown";
}

std::span<const TableId> all_tables() {
    static const std::array<TableId, 5> ids{TableId::lens, TableId::elliptic, TableId::klein_isom,
                                            TableId::orbifold, TableId::diff};
    return ids;
}

std::string to_string(MType t) {
    switch (t) {
        case MType::lens: return "lens";
        case MType::quaternionic: return "quaternionic";
        case MType::prism: return "prism";
        case MType::tetrahedral: return "tetrahedral";
        case MType::octahedral: return "octahedral";
        case MType::icosahedral: return "icosahedral";
    }
    return "unknown";
}

std::string OrbifoldDescriptor::render(Notation nt) const {
    bool u = nt == Notation::utf8;
    std::string s = "(";
    s += base == Base::sphere ? (u ? "S²" : "S^2") : (u ? "ℝP²" : "RP^2");
    s += ";";
    for (std::size_t i = 0; i < cone_orders.size(); ++i) s += (i ? "," : "") + cone_orders[i];
    return s + ")";
}

OrbifoldDescriptor OrbifoldDescriptor::substitute(long m, long n) const {
    OrbifoldDescriptor d = *this;
    for (auto& c : d.cone_orders) {
        auto v = evaluate_index(c, m, n);
        if (!v) throw std::invalid_argument("cannot evaluate cone order '" + c + "'");
        c = std::to_string(*v);
    }
    return d;
}

std::span<const LensRow> lens_table() {
    static const auto rows = make_lens_table();
    return rows;
}

std::span<const EllipticRow> elliptic_table() {
    static const auto rows = make_elliptic_table();
    return rows;
}

std::span<const KleinIsomRow> klein_isom_table() {
    static const auto rows = make_klein_isom_table();
    return rows;
}

std::span<const OrbifoldRow> orbifold_table() {
    static const auto rows = make_orbifold_table();
    return rows;
}

std::span<const DiffRow> diff_table() {
    static const auto rows = make_diff_table();
    return rows;
}

std::string render_table(TableId id, TableFormat format, Notation notation) {
    Grid g = table_grid(id, notation);
    std::ostringstream os;
    if (format == TableFormat::tsv) {
        for (const auto& row : g) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
            os << '\n';
        }
        return os.str();
    }
    std::vector<std::size_t> widths(g.front().size(), 0);
    for (const auto& row : g)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
    for (const auto& row : g) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

}  // namespace elliptic
