#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "elliptic/quaternion_groups.hpp"

namespace elliptic {

// Normal form a^i b^j of pi_1(M(m, n)) = <a, b | a^{2m}, b^{4n}, b a b^{-1} a, a^m b^{2n}>,
// with 0 <= i < 2m and 0 <= j < 2n.
class Pi1Element {
public:
    Pi1Element(int m, int n, long long i = 0, long long j = 0);

    static Pi1Element a(int m, int n) { return {m, n, 1, 0}; }
    static Pi1Element b(int m, int n) { return {m, n, 0, 1}; }

    int m() const { return m_; }
    int n() const { return n_; }
    int a_exponent() const { return i_; }
    int b_exponent() const { return j_; }

    Pi1Element inverse() const;
    bool is_identity() const { return i_ == 0 && j_ == 0; }
    std::string to_string() const;

    auto operator<=>(const Pi1Element&) const = default;

private:
    int m_, n_, i_, j_;
};

Pi1Element operator*(const Pi1Element& x, const Pi1Element& y);
Pi1Element power(const Pi1Element& x, long long k);

std::vector<Pi1Element> pi1_elements(int m, int n);

struct Pi1RelationReport {
    bool a_order = false;      // a^{2m} = 1
    bool b_order = false;      // b^{4n} = 1
    bool conjugation = false;  // b a b^{-1} = a^{-1}
    bool central = false;      // a^m b^{2n} = 1
    bool all() const { return a_order && b_order && conjugation && central; }
};

Pi1RelationReport check_relations(int m, int n);

struct Pi1Isomorphism {
    std::size_t order = 0;
    bool bijective = false;
    bool homomorphism = false;
    bool ok() const { return bijective && homomorphism; }
};

// Checks that a^i b^j -> A^i B^j onto the quaternionic model is an isomorphism.
Pi1Isomorphism check_quaternionic_isomorphism(int m, int n);

struct LensParams {
    int p = 1;
    int q = 0;
    bool operator==(const LensParams&) const = default;
};

// M(1, n) is the lens space L(4n, 2n - 1).
LensParams lens_identification(int n);

std::vector<std::vector<std::size_t>> pi1_cayley_table(int m, int n);
bool pi1_is_associative(int m, int n);

}  // namespace elliptic
