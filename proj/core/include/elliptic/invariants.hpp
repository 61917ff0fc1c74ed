#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "elliptic/group_descriptor.hpp"
#include "elliptic/tables.hpp"

namespace elliptic {

class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// L(m, q) with gcd(m, q) = 1, stored with q replaced by min(q, m - q) mod m
// (q = 0 for m = 1). Inverse residues are kept as distinct descriptions.
struct LensSpace {
    long m = 1;
    long q = 0;
    bool operator==(const LensSpace&) const = default;
};

LensSpace make_lens(long m, long q);

struct EllipticGroup {
    EllipticFamily family = EllipticFamily::q8;
    long m = 0;
    long n = 0;
};

struct IsometryInvariants {
    GroupDescriptor isom;
    GroupDescriptor pi0;
    std::size_t row = 0;
};

IsometryInvariants isometry_group_lens(const LensSpace& l);
IsometryInvariants isometry_group_elliptic(const EllipticGroup& g);

struct DiffType {
    GroupDescriptor diff;
    DiffCase key;
};

DiffType diff_homeo_type_lens(const LensSpace& l);
DiffType diff_homeo_type_klein(long m, long n);

// M(m, n) for coprime m, n >= 1.
void require_klein_params(long m, long n);
MType klein_m_type(long m, long n);
std::optional<EllipticGroup> klein_pi1_group(long m, long n);
std::string klein_pi1_name(long m, long n, Notation nt = Notation::utf8);

struct KleinIsom {
    GroupDescriptor group;
    std::string manifold;
    std::string realized_as;
    std::size_t row = 0;
};

KleinIsom isom_Mmn(long m, long n, Notation nt = Notation::utf8);

struct QuotientOrbifold {
    GroupDescriptor image;
    OrbifoldDescriptor orbifold;
    GroupDescriptor isom;
    std::size_t row = 0;
    bool extrapolated = false;  // (1, 1) is covered by the m = 1 row
};

QuotientOrbifold quotient_orbifold(long m, long n);

struct SeifertData {
    bool circle_bundle = false;
    long exceptional_order = 1;
    int exceptional_fibers = 0;
    // Fiber class on the Heegaard torus, in the basis where V has meridian b
    // and W has meridian m a + q b.
    long fiber_a = 1;
    long fiber_b = 0;
};

SeifertData hopf_seifert_data(const LensSpace& l);

}  // namespace elliptic
