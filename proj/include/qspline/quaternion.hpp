#ifndef QSPLINE_QUATERNION_HPP
#define QSPLINE_QUATERNION_HPP

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "qspline/errors.hpp"

namespace qspline {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Quaternion with real coefficients: s + v1*e1 + v2*e2 + v3*e3.
struct RealQuaternion {
    double s = 0.0;
    Vec3 v{0.0, 0.0, 0.0};

    constexpr RealQuaternion() = default;
    constexpr RealQuaternion(double scalar) : s(scalar) {}
    constexpr RealQuaternion(double scalar, double v1, double v2, double v3)
        : s(scalar), v{v1, v2, v3} {}
    constexpr RealQuaternion(double scalar, const Vec3& vec) : s(scalar), v(vec) {}

    double scalar_part() const { return s; }
    Vec3 vector_part() const { return v; }
    double vnorm() const { return norm(v); }
    double norm_sq() const { return s * s + dot(v, v); }
    double abs() const { return std::sqrt(norm_sq()); }

    RealQuaternion conj() const { return {s, {-v[0], -v[1], -v[2]}}; }

    friend RealQuaternion operator+(const RealQuaternion& p, const RealQuaternion& q) {
        return {p.s + q.s, {p.v[0] + q.v[0], p.v[1] + q.v[1], p.v[2] + q.v[2]}};
    }
    friend RealQuaternion operator-(const RealQuaternion& p, const RealQuaternion& q) {
        return {p.s - q.s, {p.v[0] - q.v[0], p.v[1] - q.v[1], p.v[2] - q.v[2]}};
    }
    friend RealQuaternion operator-(const RealQuaternion& q) {
        return {-q.s, {-q.v[0], -q.v[1], -q.v[2]}};
    }
    friend RealQuaternion operator*(double c, const RealQuaternion& q) {
        return {c * q.s, {c * q.v[0], c * q.v[1], c * q.v[2]}};
    }

    // Hamilton product: (a + v)(b + w) = ab - <v,w> + aw + bv + v^w.
    friend RealQuaternion operator*(const RealQuaternion& p, const RealQuaternion& q) {
        const Vec3 vw = cross(p.v, q.v);
        return {p.s * q.s - dot(p.v, q.v),
                {p.s * q.v[0] + q.s * p.v[0] + vw[0],
                 p.s * q.v[1] + q.s * p.v[1] + vw[1],
                 p.s * q.v[2] + q.s * p.v[2] + vw[2]}};
    }
};

// q^{-1} = conj(q)/|q|^2; every nonzero real quaternion is invertible.
inline RealQuaternion invert(const RealQuaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) throw NonInvertibleError("invert: zero quaternion");
    return (1.0 / n2) * q.conj();
}

/// Quaternion with complex coefficients: z0 + z1*e1 + z2*e2 + z3*e3.
/// Contains zero divisors, so inverses need z0^2 + z1^2 + z2^2 + z3^2 != 0.
struct ComplexQuaternion {
    std::array<Complex, 4> z{};  // coefficients of 1, e1, e2, e3

    ComplexQuaternion() = default;
    ComplexQuaternion(const Complex& z0) { z[0] = z0; }
    ComplexQuaternion(const Complex& z0, const Complex& z1, const Complex& z2,
                      const Complex& z3)
        : z{z0, z1, z2, z3} {}
    ComplexQuaternion(const RealQuaternion& q) : z{q.s, q.v[0], q.v[1], q.v[2]} {}

    Complex scalar_part() const { return z[0]; }

    double norm_sq() const {
        return std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]) + std::norm(z[3]);
    }
    double abs() const { return std::sqrt(norm_sq()); }

    friend ComplexQuaternion operator+(const ComplexQuaternion& p, const ComplexQuaternion& q) {
        return {p.z[0] + q.z[0], p.z[1] + q.z[1], p.z[2] + q.z[2], p.z[3] + q.z[3]};
    }
    friend ComplexQuaternion operator-(const ComplexQuaternion& p, const ComplexQuaternion& q) {
        return {p.z[0] - q.z[0], p.z[1] - q.z[1], p.z[2] - q.z[2], p.z[3] - q.z[3]};
    }
    friend ComplexQuaternion operator-(const ComplexQuaternion& q) {
        return {-q.z[0], -q.z[1], -q.z[2], -q.z[3]};
    }
    friend ComplexQuaternion operator*(const Complex& c, const ComplexQuaternion& q) {
        return {c * q.z[0], c * q.z[1], c * q.z[2], c * q.z[3]};
    }

    // Same multiplication table as the real case, with complex coefficients.
    friend ComplexQuaternion operator*(const ComplexQuaternion& p, const ComplexQuaternion& q) {
        const Complex a = p.z[0], b = q.z[0];
        return {a * b - (p.z[1] * q.z[1] + p.z[2] * q.z[2] + p.z[3] * q.z[3]),
                a * q.z[1] + b * p.z[1] + (p.z[2] * q.z[3] - p.z[3] * q.z[2]),
                a * q.z[2] + b * p.z[2] + (p.z[3] * q.z[1] - p.z[1] * q.z[3]),
                a * q.z[3] + b * p.z[3] + (p.z[1] * q.z[2] - p.z[2] * q.z[1])};
    }
};

/// Conjugate-linear involution: complex-conjugate coefficients, Clifford-conjugate
/// units (e_j -> -e_j).  Satisfies star(star(q)) = q and star(pq) = star(q)star(p),
/// and the scalar part of q*star(q) is |q|^2.
inline ComplexQuaternion star(const ComplexQuaternion& q) {
    return {std::conj(q.z[0]), -std::conj(q.z[1]), -std::conj(q.z[2]), -std::conj(q.z[3])};
}

// With q = z + w (w the vector part), q * (z - w) = z^2 + w1^2 + w2^2 + w3^2,
// a complex scalar.  q is invertible iff that scalar is nonzero.
inline Complex invertibility_scalar(const ComplexQuaternion& q) {
    return q.z[0] * q.z[0] + q.z[1] * q.z[1] + q.z[2] * q.z[2] + q.z[3] * q.z[3];
}

inline ComplexQuaternion invert(const ComplexQuaternion& q) {
    const Complex d = invertibility_scalar(q);
    if (std::abs(d) == 0.0)
        throw NonInvertibleError("invert: zero divisor (z^2 + sum w_i^2 = 0)");
    const Complex r = 1.0 / d;
    return {r * q.z[0], -r * q.z[1], -r * q.z[2], -r * q.z[3]};
}

/// Exponential of a complex quaternion, via the even/odd split of the series:
/// exp(z0 + w) = e^{z0} (cos(sigma) + sinc(sigma) w) with sigma^2 = w1^2+w2^2+w3^2.
/// Both cos(sigma) and sin(sigma)/sigma are even, so the branch of sigma is
/// irrelevant.
inline ComplexQuaternion exp(const ComplexQuaternion& q) {
    const Complex s2 = q.z[1] * q.z[1] + q.z[2] * q.z[2] + q.z[3] * q.z[3];
    const Complex sigma = std::sqrt(s2);
    const Complex e0 = std::exp(q.z[0]);
    Complex c, snc;
    if (std::abs(sigma) < 1e-6) {
        c = 1.0 - s2 / 2.0 + s2 * s2 / 24.0;
        snc = 1.0 - s2 / 6.0 + s2 * s2 / 120.0;
    } else {
        c = std::cos(sigma);
        snc = std::sin(sigma) / sigma;
    }
    return {e0 * c, e0 * snc * q.z[1], e0 * snc * q.z[2], e0 * snc * q.z[3]};
}

inline std::ostream& operator<<(std::ostream& os, const RealQuaternion& q) {
    return os << q.s << " + " << q.v[0] << " e1 + " << q.v[1] << " e2 + " << q.v[2] << " e3";
}

inline std::ostream& operator<<(std::ostream& os, const ComplexQuaternion& q) {
    return os << q.z[0] << " + " << q.z[1] << " e1 + " << q.z[2] << " e2 + " << q.z[3] << " e3";
}

} // namespace qspline

#endif
