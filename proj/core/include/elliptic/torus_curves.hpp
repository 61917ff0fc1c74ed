#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elliptic {

class CurveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a class would be a meridian of both sides, or a meridian of one
// side and a longitude of the other.
class CurveContradiction : public CurveError {
public:
    using CurveError::CurveError;
};

// Level torus of M(m, n) with basis (a, b^2), or Heegaard torus of L(m, q)
// with basis (a, b).
enum class Basis { klein_level, lens_heegaard };

struct CurveClass {
    long p = 0;
    long q = 0;
    Basis basis = Basis::klein_level;

    CurveClass negated() const { return {-p, -q, basis}; }
    bool is_zero() const { return p == 0 && q == 0; }
    bool is_primitive() const;
    std::string to_string() const;
    bool operator==(const CurveClass&) const = default;
};

// Algebraic intersection number ps - qr. Throws CurveError on mixed bases.
long intersection(const CurveClass& x, const CurveClass& y);
bool same_isotopy_class(const CurveClass& x, const CurveClass& y);

enum class Side { v, w };

struct SplittingContext {
    Basis basis = Basis::klein_level;
    long m = 1;
    long n_or_q = 1;
    CurveClass meridian_v;
    std::optional<CurveClass> meridian_w;  // W is an I-bundle for M(m, n)
    std::optional<CurveClass> fiber;

    // V is the solid torus R_u with meridian a^m b^{2n}; W is the twisted I-bundle P_u.
    static SplittingContext klein(long m, long n);
    // Genus one Heegaard splitting; V has meridian b and W has meridian a^m b^q.
    static SplittingContext lens(long m, long q);

    std::optional<CurveClass> meridian(Side s) const;
};

bool is_meridian(const CurveClass& c, const SplittingContext& ctx, Side side);
bool is_longitude(const CurveClass& c, const SplittingContext& ctx, Side side);

struct LongitudeFiberReport {
    long m = 1;
    long n = 1;
    // Longitudes of R_u among the basic curves a and b^2.
    bool a_is_longitude = false;
    bool b2_is_longitude = false;
    // For (1, 1) each fibering is checked separately.
    bool holds_for_level_fibering = false;
    bool holds_for_other_fibering = true;
    std::vector<std::string> witnesses;
    bool anomalous() const { return !(holds_for_level_fibering && holds_for_other_fibering); }
};

LongitudeFiberReport longitudes_are_fibers_check(long m, long n);

// Classes c = a + k b on the Heegaard torus of L(m, q) that are longitudes of both sides.
std::vector<CurveClass> bilongitude_classes(long m, long q);

// h(a) = u a + v b. Without swap h(b) = b; with swap h(b) = eps (m a + q b).
struct LevelAutomorphism {
    long u = 0;
    long v = 0;
    long eps = 1;
    bool swap = false;
};

struct LevelAutomorphisms {
    std::vector<LevelAutomorphism> solutions;
    bool exists() const { return !solutions.empty(); }
};

LevelAutomorphisms level_automorphisms(long m, long q, bool swap, long window = 64);

enum class LevelPairType { v_cored, w_cored, bilongitudinal };
std::string to_string(LevelPairType t);

// Classifies a level torus by the class of the curve it meets.
LevelPairType classify_level_pair(const CurveClass& c, const SplittingContext& ctx);

}  // namespace elliptic
