#include "elliptic/quaternion_groups.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

namespace elliptic {

namespace {

long long mod(long long a, long long b) {
    long long r = a % b;
    return r < 0 ? r + b : r;
}

Quaternion normalized(const Quaternion& q) {
    double r = q.norm();
    return {q.w / r, q.x / r, q.y / r, q.z / r};
}

// A pure unit quaternion orthogonal to the pure quaternion r.
Quaternion orthogonal_unit(const Quaternion& r) {
    Quaternion e = std::abs(r.x) < 0.9 ? Quaternion{0, 1, 0, 0} : Quaternion{0, 0, 1, 0};
    Quaternion c{0, r.y * e.z - r.z * e.y, r.z * e.x - r.x * e.z, r.x * e.y - r.y * e.x};
    return normalized(c);
}

void require_positive(int m, int n) {
    if (m < 1 || n < 1) throw GroupError("m and n must be positive");
}

}  // namespace

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

O2StarElement::O2StarElement(int half_order, long long exponent, bool j_flag)
    : n_(half_order), a_(0), j_(j_flag) {
    if (half_order < 1) throw GroupError("O(2)* element needs N >= 1");
    a_ = static_cast<int>(mod(exponent, 2LL * half_order));
}

O2StarElement operator*(const O2StarElement& g, const O2StarElement& h) {
    if (g.half_order() != h.half_order()) throw GroupError("O(2)* elements with different N");
    int n = g.half_order();
    long long a = g.exponent();
    long long b = h.exponent();
    if (!g.has_j()) return {n, a + b, h.has_j()};
    if (!h.has_j()) return {n, a - b, true};
    return {n, a - b + n, false};
}

O2StarElement O2StarElement::inverse() const {
    if (j_) return {n_, static_cast<long long>(a_) + n_, true};
    return {n_, -static_cast<long long>(a_), false};
}

O2StarElement O2StarElement::negated() const { return {n_, static_cast<long long>(a_) + n_, j_}; }

Rational O2StarElement::real_angle() const {
    if (j_) return Rational(1, 2);
    long long t = a_;
    if (t > n_) t = 2LL * n_ - t;
    return Rational(t, n_);
}

Quaternion O2StarElement::to_quaternion() const {
    double theta = std::numbers::pi * a_ / n_;
    if (j_) return {0.0, 0.0, std::cos(theta), std::sin(theta)};
    return {std::cos(theta), std::sin(theta), 0.0, 0.0};
}

std::string O2StarElement::to_string() const {
    std::ostringstream os;
    if (a_ == 0) {
        os << (j_ ? "j" : "1");
        return os.str();
    }
    os << "z" << 2 * n_ << "^" << a_;
    if (j_) os << " j";
    return os.str();
}

SO4Element::SO4Element(O2StarElement left, O2StarElement right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (left_.exponent() >= left_.half_order()) {
        left_ = left_.negated();
        right_ = right_.negated();
    }
}

SO4Element operator*(const SO4Element& x, const SO4Element& y) {
    return {x.left() * y.left(), x.right() * y.right()};
}

SO4Element SO4Element::inverse() const { return {left_.inverse(), right_.inverse()}; }

std::string SO4Element::to_string() const {
    return "F(" + left_.to_string() + ", " + right_.to_string() + ")";
}

SO4Element power(const SO4Element& x, long long k) {
    SO4Element base = k < 0 ? x.inverse() : x;
    if (k < 0) k = -k;
    SO4Element result(O2StarElement::one(x.left().half_order()), O2StarElement::one(x.right().half_order()));
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string to_string(EmbeddingCase c) {
    switch (c) {
        case EmbeddingCase::lens_type: return "lens-type";
        case EmbeddingCase::binary_dihedral: return "binary-dihedral";
        case EmbeddingCase::coprime_product: return "coprime-product";
        case EmbeddingCase::diagonal: return "diagonal";
        case EmbeddingCase::generated: return "generated";
    }
    return "unknown";
}

FiniteSubgroup FiniteSubgroup::generated_by(std::vector<SO4Element> generators, EmbeddingCase tag,
                                            std::size_t cap) {
    if (generators.empty()) throw GroupError("at least one generator is required");
    int nl = generators.front().left().half_order();
    int nr = generators.front().right().half_order();
    for (const auto& g : generators) {
        if (g.left().half_order() != nl || g.right().half_order() != nr)
            throw GroupError("generators use different N");
    }

    SO4Element identity(O2StarElement::one(nl), O2StarElement::one(nr));
    std::set<SO4Element> seen{identity};
    std::deque<SO4Element> queue{identity};
    while (!queue.empty()) {
        SO4Element x = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            SO4Element y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw GroupError("subgroup closure exceeds the element cap");
                queue.push_back(y);
            }
        }
    }

    FiniteSubgroup group;
    group.elements_.assign(seen.begin(), seen.end());
    group.generators_ = std::move(generators);
    group.tag_ = tag;
    return group;
}

bool FiniteSubgroup::contains(const SO4Element& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t FiniteSubgroup::index_of(const SO4Element& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x)) throw GroupError("element not in subgroup: " + x.to_string());
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::vector<std::size_t>> FiniteSubgroup::cayley_table() const {
    std::vector<std::vector<std::size_t>> table(size(), std::vector<std::size_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) table[i][j] = index_of(elements_[i] * elements_[j]);
    return table;
}

bool FiniteSubgroup::is_associative() const {
    auto t = cayley_table();
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) return false;
    return true;
}

EmbeddingCase pi1_embedding_case(int m, int n) {
    require_positive(m, n);
    if (m == 1) return EmbeddingCase::lens_type;
    if (n == 1) return EmbeddingCase::binary_dihedral;
    if (n % 2 == 1) return EmbeddingCase::coprime_product;
    return EmbeddingCase::diagonal;
}

Pi1GeneratorImages pi1_generator_images(int m, int n) {
    switch (pi1_embedding_case(m, n)) {
        case EmbeddingCase::lens_type: {
            SO4Element b(O2StarElement(2 * n, n - 1), O2StarElement::j(1));
            return {power(b, -2LL * n), b};
        }
        case EmbeddingCase::binary_dihedral:
            return {SO4Element(O2StarElement(m, 1), O2StarElement::one(1)),
                    SO4Element(O2StarElement::j(m), O2StarElement::one(1))};
        case EmbeddingCase::coprime_product:
            return {SO4Element(O2StarElement::one(n), O2StarElement(m, 1)),
                    SO4Element(O2StarElement(n, 2), O2StarElement::j(m))};
        case EmbeddingCase::diagonal:
            return {SO4Element(O2StarElement::one(2 * n), O2StarElement(m, 1)),
                    SO4Element(O2StarElement(2 * n, 1), O2StarElement::j(m))};
        case EmbeddingCase::generated: break;
    }
    throw GroupError("unreachable embedding case");
}

FiniteSubgroup construct_pi1(int m, int n) {
    EmbeddingCase c = pi1_embedding_case(m, n);
    std::vector<SO4Element> gens;
    switch (c) {
        case EmbeddingCase::lens_type:
            gens = {SO4Element(O2StarElement(2 * n, n - 1), O2StarElement::j(1))};
            break;
        case EmbeddingCase::binary_dihedral:
            gens = {SO4Element(O2StarElement(m, 1), O2StarElement::one(1)),
                    SO4Element(O2StarElement::j(m), O2StarElement::one(1))};
            break;
        case EmbeddingCase::coprime_product:
            gens = {SO4Element(O2StarElement(n, 1), O2StarElement::one(m)),
                    SO4Element(O2StarElement::one(n), O2StarElement::j(m)),
                    SO4Element(O2StarElement::one(n), O2StarElement(m, 1))};
            break;
        case EmbeddingCase::diagonal:
            gens = {SO4Element(O2StarElement::one(2 * n), O2StarElement(m, 1)),
                    SO4Element(O2StarElement(2 * n, 1), O2StarElement::j(m))};
            break;
        case EmbeddingCase::generated: break;
    }
    FiniteSubgroup g = FiniteSubgroup::generated_by(std::move(gens), c);
    if (g.size() != 4ULL * static_cast<unsigned long long>(m) * static_cast<unsigned long long>(n))
        throw std::logic_error("pi_1 model has order " + std::to_string(g.size()) + ", expected 4mn");
    return g;
}

bool has_fixed_point(const SO4Element& x) { return x.left().real_angle() == x.right().real_angle(); }

std::optional<Quaternion> fixed_point_of(const SO4Element& x) {
    if (!has_fixed_point(x)) return std::nullopt;
    Quaternion g = x.left().to_quaternion();
    Quaternion h = x.right().to_quaternion();
    Quaternion p{0, g.x, g.y, g.z};
    Quaternion r{0, h.x, h.y, h.z};
    double s = p.norm();
    if (s < 1e-12) return Quaternion{1, 0, 0, 0};
    // q r q^{-1} = p, so g q = q h.
    Quaternion q = Quaternion{s * s, 0, 0, 0} - p * r;
    if (q.norm() < 1e-9 * s * s) return orthogonal_unit(r);
    return normalized(q);
}

FreeActionResult verify_free_action(const FiniteSubgroup& group) {
    for (const auto& x : group.elements()) {
        if (x.is_identity()) continue;
        if (!has_fixed_point(x)) continue;
        Quaternion q = *fixed_point_of(x);
        std::ostringstream os;
        os.precision(6);
        os << x.to_string() << " fixes q = (" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
        return {false, FreeActionWitness{x, q, os.str()}};
    }
    return {};
}

double witness_residual(const FreeActionWitness& w) {
    Quaternion g = w.element.left().to_quaternion();
    Quaternion h = w.element.right().to_quaternion();
    Quaternion moved = g * w.fixed_point * h.conjugate();
    return (moved - w.fixed_point).norm();
}

OrderProfile subgroup_order_profile(const FiniteSubgroup& group) {
    const auto& first = group.elements().front();
    SO4Element identity(O2StarElement::one(first.left().half_order()),
                        O2StarElement::one(first.right().half_order()));
    return order_profile<SO4Element>(group.elements(), identity,
                                     [](const SO4Element& x, const SO4Element& y) { return x * y; });
}

OrderProfile abstract_cn_times_binary_dihedral_profile(int n, int m) {
    require_positive(m, n);
    using Pair = std::pair<int, O2StarElement>;
    std::vector<Pair> elems;
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < 2 * m; ++a)
            for (bool j : {false, true}) elems.emplace_back(c, O2StarElement(m, a, j));
    Pair identity{0, O2StarElement::one(m)};
    return order_profile<Pair>(elems, identity, [n](const Pair& x, const Pair& y) {
        return Pair{(x.first + y.first) % n, x.second * y.second};
    });
}

}  // namespace elliptic
