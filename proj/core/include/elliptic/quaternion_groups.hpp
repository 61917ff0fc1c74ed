#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <boost/version.hpp>

#if BOOST_VERSION < 107500
// Under C++20 the reversed mixed comparison in older Boost.Rational calls itself
// forever; exact non-template overloads take precedence over both templates.
namespace boost {
inline bool operator==(const rational<long long>& r, int i) { return r.denominator() == 1 && r.numerator() == i; }
inline bool operator==(const rational<long long>& r, long i) { return r.denominator() == 1 && r.numerator() == i; }
inline bool operator==(const rational<long long>& r, long long i) { return r.denominator() == 1 && r.numerator() == i; }
}  // namespace boost
#endif

namespace elliptic {

using Rational = boost::rational<long long>;

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unit quaternion w + xi + yj + zk, used for witnesses and floating point checks.
struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm() const;
};

Quaternion operator*(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& p, const Quaternion& q);

// Element xi^a or xi^a j of O(2)* with xi = exp(pi i / N).
// The exponent is kept in [0, 2N).
class O2StarElement {
public:
    O2StarElement(int half_order, long long exponent, bool j_flag = false);

    static O2StarElement one(int half_order) { return {half_order, 0, false}; }
    static O2StarElement minus_one(int half_order) { return {half_order, half_order, false}; }
    static O2StarElement j(int half_order) { return {half_order, 0, true}; }

    int half_order() const { return n_; }
    int exponent() const { return a_; }
    bool has_j() const { return j_; }

    O2StarElement inverse() const;
    O2StarElement negated() const;

    // Re(g) = cos(pi * angle) with angle in [0, 1]; exact.
    Rational real_angle() const;
    bool is_identity() const { return a_ == 0 && !j_; }

    Quaternion to_quaternion() const;
    std::string to_string() const;

    auto operator<=>(const O2StarElement&) const = default;

private:
    int n_;
    int a_;
    bool j_;
};

O2StarElement operator*(const O2StarElement& g, const O2StarElement& h);

// Rotation F(g, h): q -> g q h^{-1}. The pair (g, h) and (-g, -h) give the
// same rotation; the stored representative has left exponent in [0, N).
class SO4Element {
public:
    SO4Element(O2StarElement left, O2StarElement right);

    const O2StarElement& left() const { return left_; }
    const O2StarElement& right() const { return right_; }

    SO4Element inverse() const;
    bool is_identity() const { return left_.is_identity() && right_.is_identity(); }
    std::string to_string() const;

    auto operator<=>(const SO4Element&) const = default;

private:
    O2StarElement left_;
    O2StarElement right_;
};

SO4Element operator*(const SO4Element& x, const SO4Element& y);
SO4Element power(const SO4Element& x, long long k);

enum class EmbeddingCase { lens_type, binary_dihedral, coprime_product, diagonal, generated };

std::string to_string(EmbeddingCase c);

class FiniteSubgroup {
public:
    static constexpr std::size_t default_cap = 1'000'000;

    // Closure of the generators under multiplication. Throws GroupError if
    // the closure exceeds the cap or the generators use mixed N.
    static FiniteSubgroup generated_by(std::vector<SO4Element> generators,
                                       EmbeddingCase tag = EmbeddingCase::generated,
                                       std::size_t cap = default_cap);

    std::size_t size() const { return elements_.size(); }
    std::span<const SO4Element> elements() const { return elements_; }
    std::span<const SO4Element> generators() const { return generators_; }
    EmbeddingCase embedding_case() const { return tag_; }

    bool contains(const SO4Element& x) const;
    std::size_t index_of(const SO4Element& x) const;

    // Cayley table by element index; closure is re-checked while filling it.
    std::vector<std::vector<std::size_t>> cayley_table() const;
    bool is_associative() const;

private:
    std::vector<SO4Element> elements_;
    std::vector<SO4Element> generators_;
    EmbeddingCase tag_ = EmbeddingCase::generated;
};

// The images of the presentation generators a and b of pi_1(M(m, n)).
struct Pi1GeneratorImages {
    SO4Element a;
    SO4Element b;
};

Pi1GeneratorImages pi1_generator_images(int m, int n);
EmbeddingCase pi1_embedding_case(int m, int n);
FiniteSubgroup construct_pi1(int m, int n);

struct FreeActionWitness {
    SO4Element element;
    Quaternion fixed_point;
    std::string description;
};

struct FreeActionResult {
    bool free = true;
    std::optional<FreeActionWitness> witness;
};

// F(g, h) has a fixed point on S^3 iff Re g = Re h.
bool has_fixed_point(const SO4Element& x);
std::optional<Quaternion> fixed_point_of(const SO4Element& x);
FreeActionResult verify_free_action(const FiniteSubgroup& group);
// |g q h^{-1} - q| for the witness element F(g, h) and its point q.
double witness_residual(const FreeActionWitness& w);

struct OrderProfile {
    std::vector<long long> element_orders;  // sorted
    std::size_t center_order = 0;

    bool operator==(const OrderProfile&) const = default;
};

template <class T, class Mul>
OrderProfile order_profile(std::span<const T> elements, const T& identity, Mul mul) {
    OrderProfile profile;
    for (const T& x : elements) {
        long long k = 1;
        T y = x;
        while (!(y == identity)) {
            y = mul(y, x);
            ++k;
            if (k > static_cast<long long>(elements.size())) throw GroupError("element order exceeds group size");
        }
        profile.element_orders.push_back(k);
        bool central = true;
        for (const T& z : elements) {
            if (!(mul(x, z) == mul(z, x))) {
                central = false;
                break;
            }
        }
        if (central) ++profile.center_order;
    }
    std::sort(profile.element_orders.begin(), profile.element_orders.end());
    return profile;
}

OrderProfile subgroup_order_profile(const FiniteSubgroup& group);

// Profile of the abstract group C_n x D*_{4m}.
OrderProfile abstract_cn_times_binary_dihedral_profile(int n, int m);

}  // namespace elliptic
