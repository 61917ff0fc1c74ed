#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Quaternion w + xi + yj + zk as the complex matrix [[w + xi, y + zi], [-y + zi, w - xi]].
struct Cx2 {
    cd a, b, c, d;

    static Cx2 from_wxyz(double w, double x, double y, double z) { return {{w, x}, {y, z}, {-y, z}, {w, -x}}; }
    static Cx2 identity() { return from_wxyz(1, 0, 0, 0); }
    // exp(pi i k / N)
    static Cx2 xi_power(int half_order, long k) {
        double t = std::numbers::pi * static_cast<double>(k) / half_order;
        return from_wxyz(std::cos(t), std::sin(t), 0, 0);
    }
    static Cx2 j() { return from_wxyz(0, 0, 1, 0); }

    Cx2 operator*(const Cx2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Cx2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

    std::array<double, 4> wxyz() const { return {a.real(), a.imag(), b.real(), b.imag()}; }
    double real_part() const { return a.real(); }
};

using Mat4 = std::array<std::array<double, 4>, 4>;

// Matrix of q -> g q h^{-1} in the basis 1, i, j, k.
inline Mat4 rotation_matrix(const Cx2& g, const Cx2& h) {
    Mat4 m{};
    for (int col = 0; col < 4; ++col) {
        std::array<double, 4> e{0, 0, 0, 0};
        e[static_cast<std::size_t>(col)] = 1;
        Cx2 q = Cx2::from_wxyz(e[0], e[1], e[2], e[3]);
        auto img = (g * q * h.adjoint()).wxyz();
        for (int row = 0; row < 4; ++row) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = img[static_cast<std::size_t>(row)];
    }
    return m;
}

inline Mat4 multiply(const Mat4& x, const Mat4& y) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
}

inline double det4(Mat4 m) {
    double det = 1;
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < 4; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        if (std::abs(m[pivot][c]) < 1e-14) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < 4; ++r) {
            double f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// A rotation of R^4 fixes a unit vector iff 1 is an eigenvalue.
inline bool has_fixed_vector(const Mat4& m) {
    Mat4 d = m;
    for (std::size_t i = 0; i < 4; ++i) d[i][i] -= 1;
    return std::abs(det4(d)) < 1e-9;
}

inline bool fixes(const Mat4& m, const std::array<double, 4>& v, double tol = 1e-9) {
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += m[i][k] * v[k];
        if (std::abs(s - v[i]) > tol) return false;
    }
    return true;
}

using Key = std::array<long long, 16>;

inline Key key_of(const Mat4& m) {
    Key k{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) k[4 * i + j] = std::llround(m[i][j] * 1e6);
    return k;
}

// Closure of a set of rotation matrices; returns all elements.
inline std::vector<Mat4> closure(const std::vector<Mat4>& gens, std::size_t cap = 100000) {
    std::map<Key, Mat4> seen;
    Mat4 id{};
    for (std::size_t i = 0; i < 4; ++i) id[i][i] = 1;
    std::vector<Mat4> frontier{id};
    seen.emplace(key_of(id), id);
    while (!frontier.empty() && seen.size() <= cap) {
        std::vector<Mat4> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Mat4 y = multiply(x, g);
                if (seen.emplace(key_of(y), y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::vector<Mat4> out;
    for (const auto& [k, m] : seen) out.push_back(m);
    return out;
}

// Generators of pi_1(M(m, n)) in SO(4), written down from the embedding:
// n odd: F(C_{2n} x D*_{4m}); n even: the index 2 diagonal subgroup of
// C_{4n} x D*_{4m}. D*_{4m} is generated by exp(pi i / m) and j.
inline std::vector<Mat4> klein_generators(int m, int n) {
    Cx2 xi2m = Cx2::xi_power(m, 1);
    Cx2 j = Cx2::j();
    Cx2 one = Cx2::identity();
    if (n % 2 == 1) {
        Cx2 c2n = Cx2::xi_power(n, 1);
        return {rotation_matrix(one, xi2m), rotation_matrix(one, j), rotation_matrix(c2n, one)};
    }
    Cx2 c4n = Cx2::xi_power(2 * n, 1);
    return {rotation_matrix(one, xi2m), rotation_matrix(c4n, j)};
}

}  // namespace oracle
