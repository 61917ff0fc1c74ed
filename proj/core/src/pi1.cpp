#include "elliptic/pi1.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace elliptic {

namespace {

long long mod(long long a, long long b) {
    long long r = a % b;
    return r < 0 ? r + b : r;
}

}  // namespace

Pi1Element::Pi1Element(int m, int n, long long i, long long j) : m_(m), n_(n), i_(0), j_(0) {
    if (m < 1 || n < 1) throw GroupError("m and n must be positive");
    // b^{2n} = a^{-m} = a^m
    long long carries = j >= 0 ? j / (2LL * n) : -((-j + 2LL * n - 1) / (2LL * n));
    j -= carries * 2LL * n;
    i += carries * m;
    i_ = static_cast<int>(mod(i, 2LL * m));
    j_ = static_cast<int>(j);
}

Pi1Element operator*(const Pi1Element& x, const Pi1Element& y) {
    if (x.m() != y.m() || x.n() != y.n()) throw GroupError("elements of different groups");
    long long k = y.a_exponent();
    long long i = x.a_exponent() + (x.b_exponent() % 2 == 0 ? k : -k);
    return {x.m(), x.n(), i, static_cast<long long>(x.b_exponent()) + y.b_exponent()};
}

Pi1Element Pi1Element::inverse() const {
    // (a^i b^j)^{-1} = b^{-j} a^{-i} = a^{-(-1)^j i} b^{-j}
    long long i = (j_ % 2 == 0) ? -static_cast<long long>(i_) : i_;
    return {m_, n_, i, -static_cast<long long>(j_)};
}

std::string Pi1Element::to_string() const {
    if (is_identity()) return "1";
    std::string s;
    if (i_ != 0) s += "a^" + std::to_string(i_);
    if (j_ != 0) s += (s.empty() ? "" : " ") + std::string("b^") + std::to_string(j_);
    return s;
}

Pi1Element power(const Pi1Element& x, long long k) {
    Pi1Element base = k < 0 ? x.inverse() : x;
    if (k < 0) k = -k;
    Pi1Element result(x.m(), x.n());
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::vector<Pi1Element> pi1_elements(int m, int n) {
    std::vector<Pi1Element> out;
    out.reserve(4ULL * m * n);
    for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2 * n; ++j) out.emplace_back(m, n, i, j);
    std::sort(out.begin(), out.end());
    return out;
}

Pi1RelationReport check_relations(int m, int n) {
    Pi1Element a = Pi1Element::a(m, n);
    Pi1Element b = Pi1Element::b(m, n);
    Pi1RelationReport r;
    r.a_order = power(a, 2LL * m).is_identity();
    r.b_order = power(b, 4LL * n).is_identity();
    r.conjugation = (b * a * b.inverse()) == a.inverse();
    r.central = (power(a, m) * power(b, 2LL * n)).is_identity();
    return r;
}

Pi1Isomorphism check_quaternionic_isomorphism(int m, int n) {
    FiniteSubgroup model = construct_pi1(m, n);
    Pi1GeneratorImages img = pi1_generator_images(m, n);
    auto phi = [&](const Pi1Element& x) {
        return power(img.a, x.a_exponent()) * power(img.b, x.b_exponent());
    };

    auto elems = pi1_elements(m, n);
    std::vector<SO4Element> images;
    images.reserve(elems.size());
    for (const auto& x : elems) images.push_back(phi(x));

    Pi1Isomorphism out;
    out.order = elems.size();
    std::set<SO4Element> distinct(images.begin(), images.end());
    out.bijective = distinct.size() == elems.size() && elems.size() == model.size() &&
                    std::all_of(images.begin(), images.end(), [&](const SO4Element& y) { return model.contains(y); });

    out.homomorphism = true;
    for (std::size_t u = 0; u < elems.size() && out.homomorphism; ++u)
        for (std::size_t v = 0; v < elems.size(); ++v) {
            if (!(phi(elems[u] * elems[v]) == images[u] * images[v])) {
                out.homomorphism = false;
                break;
            }
        }
    return out;
}

LensParams lens_identification(int n) {
    if (n < 1) throw GroupError("n must be positive");
    FiniteSubgroup g = construct_pi1(1, n);
    bool cyclic = std::any_of(g.elements().begin(), g.elements().end(), [&](const SO4Element& x) {
        for (long long k = 1; k < 4LL * n; ++k)
            if (power(x, k).is_identity()) return false;
        return true;
    });
    if (!cyclic) throw std::logic_error("pi_1(M(1, n)) model is not cyclic");
    return {4 * n, 2 * n - 1};
}

std::vector<std::vector<std::size_t>> pi1_cayley_table(int m, int n) {
    auto elems = pi1_elements(m, n);
    std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t u = 0; u < elems.size(); ++u)
        for (std::size_t v = 0; v < elems.size(); ++v) {
            auto it = std::lower_bound(elems.begin(), elems.end(), elems[u] * elems[v]);
            table[u][v] = static_cast<std::size_t>(it - elems.begin());
        }
    return table;
}

bool pi1_is_associative(int m, int n) {
    auto t = pi1_cayley_table(m, n);
    std::size_t s = t.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t k = 0; k < s; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) return false;
    return true;
}

}  // namespace elliptic
