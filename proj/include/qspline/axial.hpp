#ifndef QSPLINE_AXIAL_HPP
#define QSPLINE_AXIAL_HPP

#include <cmath>
#include <complex>
#include <string>

#include "qspline/quaternion.hpp"

namespace qspline {

inline constexpr double kAxisTol = 1e-12;

/// Unit pure quaternion mu = v/|v|, or the degenerate axis for |v| = 0.
/// mu^2 = -1 as a quaternion product; fixing mu selects the commutative
/// subalgebra C + C*mu of the complex quaternions.
class Axis {
  public:
    Axis() = default;  // degenerate

    static Axis from_vector(const Vec3& v) {
        const double n = norm(v);
        if (n == 0.0) return Axis{};
        Axis a;
        a.mu_ = {v[0] / n, v[1] / n, v[2] / n};
        a.degenerate_ = false;
        return a;
    }

    static Axis e1() { return from_vector({1.0, 0.0, 0.0}); }

    bool degenerate() const { return degenerate_; }
    const Vec3& direction() const { return mu_; }

    RealQuaternion as_quaternion() const { return {0.0, mu_}; }

    // Degenerate axes are compatible with everything (their vector slot is 0).
    friend bool compatible(const Axis& a, const Axis& b) {
        if (a.degenerate_ || b.degenerate_) return true;
        return std::abs(a.mu_[0] - b.mu_[0]) <= kAxisTol &&
               std::abs(a.mu_[1] - b.mu_[1]) <= kAxisTol &&
               std::abs(a.mu_[2] - b.mu_[2]) <= kAxisTol;
    }

    friend Axis merge(const Axis& a, const Axis& b) {
        if (!compatible(a, b)) throw AxisMismatchError("merge: incompatible axes");
        return a.degenerate_ ? b : a;
    }

  private:
    Vec3 mu_{0.0, 0.0, 0.0};
    bool degenerate_ = true;
};

/// Idempotent projector chi_{+-} = (1 +- i*mu)/2.  chi_+ + chi_- = 1,
/// chi_+ chi_- = 0, and multiplication by chi_{+-} diagonalizes the axial
/// algebra into two complex lines.
inline ComplexQuaternion chi(int sign, const Axis& axis) {
    const Vec3& m = axis.direction();
    const Complex h = sign >= 0 ? Complex(0.0, 0.5) : Complex(0.0, -0.5);
    return {Complex(0.5, 0.0), h * m[0], h * m[1], h * m[2]};
}

/// Element s + mu*u of the commutative subalgebra generated by a fixed axis mu,
/// with s, u complex.  Every spline and filter quantity in this library is of
/// this form.  In the chi coordinates p = s - iu, m = s + iu the product acts
/// componentwise.
struct AxialElement {
    Axis axis;
    Complex s{0.0, 0.0};  // scalar slot
    Complex u{0.0, 0.0};  // vector slot

    AxialElement() = default;
    AxialElement(double real) : s(real) {}
    AxialElement(const Axis& ax, const Complex& sc, const Complex& vc)
        : axis(ax), s(sc), u(vc) {
        if (axis.degenerate()) u = 0.0;
    }

    static AxialElement from_chi(const Axis& ax, const Complex& plus, const Complex& minus) {
        // s - iu = plus, s + iu = minus
        return {ax, 0.5 * (plus + minus), Complex(0.0, 0.5) * (plus - minus)};
    }

    Complex chi_plus() const { return s - Complex(0.0, 1.0) * u; }
    Complex chi_minus() const { return s + Complex(0.0, 1.0) * u; }

    double norm_sq() const { return std::norm(s) + std::norm(u); }
    double abs() const { return std::sqrt(norm_sq()); }

    ComplexQuaternion embed() const {
        const Vec3& m = axis.direction();
        return {s, u * m[0], u * m[1], u * m[2]};
    }

    AxialElement star() const { return {axis, std::conj(s), -std::conj(u)}; }

    friend AxialElement operator+(const AxialElement& x, const AxialElement& y) {
        return {merge(x.axis, y.axis), x.s + y.s, x.u + y.u};
    }
    friend AxialElement operator-(const AxialElement& x, const AxialElement& y) {
        return {merge(x.axis, y.axis), x.s - y.s, x.u - y.u};
    }
    friend AxialElement operator-(const AxialElement& x) { return {x.axis, -x.s, -x.u}; }
    friend AxialElement operator*(const Complex& c, const AxialElement& x) {
        return {x.axis, c * x.s, c * x.u};
    }

    // (s1 + mu u1)(s2 + mu u2) = s1 s2 - u1 u2 + mu (s1 u2 + s2 u1), using mu^2 = -1.
    friend AxialElement operator*(const AxialElement& x, const AxialElement& y) {
        return {merge(x.axis, y.axis), x.s * y.s - x.u * y.u, x.s * y.u + y.s * x.u};
    }
};

/// Inverse through the chi coordinates: two complex divisions.  Fails when
/// either coordinate is (numerically) zero, i.e. s^2 + u^2 = 0 -- the zero
/// divisors of the axial algebra.
inline AxialElement invert(const AxialElement& x, double min_coord = 1e-14) {
    const Complex p = x.chi_plus(), m = x.chi_minus();
    if (std::abs(p) < min_coord || std::abs(m) < min_coord)
        throw NonInvertibleError("invert: axial element has a chi coordinate below " +
                                 std::to_string(min_coord));
    return AxialElement::from_chi(x.axis, 1.0 / p, 1.0 / m);
}

inline AxialElement operator/(const AxialElement& x, const AxialElement& y) {
    return x * invert(y);
}

/// A quaternionic exponent q = a + v together with its complex shadow
/// w = a + i|v| and axis mu = v/|v|.  The structure formulas route every
/// quaternionic quantity through w.
struct QuaternionicOrder {
    RealQuaternion q;
    double a = 0.0;      // Sc q
    double vnorm = 0.0;  // |Ve q|
    Axis axis;
    Complex w;           // a + i|v|
    bool degenerate = true;

    QuaternionicOrder() = default;
    explicit QuaternionicOrder(const RealQuaternion& quat)
        : q(quat), a(quat.s), vnorm(quat.vnorm()), axis(Axis::from_vector(quat.v)),
          w(quat.s, quat.vnorm()), degenerate(quat.vnorm() == 0.0) {}
    QuaternionicOrder(double s, double v1, double v2, double v3)
        : QuaternionicOrder(RealQuaternion{s, v1, v2, v3}) {}

    // Shifted order a + c + v, same axis; used by the filter derivative formulas.
    QuaternionicOrder shifted(double c) const {
        return QuaternionicOrder{RealQuaternion{a + c, q.v}};
    }

    AxialElement as_axial() const { return {axis, a, vnorm}; }

    // The two preset orders used throughout: both have |v| = 1/2, so their
    // complex shadows are 6.2 + 0.5i and 2.5 + 0.5i.
    static QuaternionicOrder preset_q1() {
        return {6.2, 1.0 / (2.0 * std::sqrt(2.0)), -0.25, 0.25};
    }
    static QuaternionicOrder preset_q2() {
        return {2.5, 1.0 / (4.0 * std::sqrt(2.0)), 0.125, -std::sqrt(13.0) / 8.0};
    }
};

namespace detail {

// Principal logarithm with the negative real axis pinned to arg = +pi.
// std::log already maps (-t, +0.0) to log t + i*pi; the pin only normalizes a
// negative zero imaginary part so that real-typed bases cannot land on -pi.
inline Complex principal_log(Complex z) {
    if (z.imag() == 0.0) z = Complex(z.real(), +0.0);
    return std::log(z);
}

} // namespace detail

/// z^(a + mu*v) for complex z != 0, with real exponent pair (a, v) and the
/// principal branch of log z:
///   z^q = z^a [ cos(v log z) + mu sin(v log z) ].
/// v may be negative (an exponent -q is (-a, -v) on the same axis).  At z = 0
/// the power is 0 when a > 0 and undefined otherwise.
inline AxialElement power(const Complex& z, double a, double v, const Axis& axis) {
    if (z == 0.0) {
        if (a > 0.0) return {axis, 0.0, 0.0};
        throw ZeroBaseError("power: 0^q with Sc q <= 0");
    }
    const Complex L = detail::principal_log(z);
    const Complex za = std::exp(a * L);
    if (v == 0.0) return {axis, za, 0.0};
    const Complex vl = v * L;
    return {axis, za * std::cos(vl), za * std::sin(vl)};
}

inline AxialElement power(const Complex& z, const QuaternionicOrder& q) {
    return power(z, q.a, q.vnorm, q.axis);
}

/// e^{lambda q} for complex lambda and real quaternion q:
///   e^{lambda a} ( cos(lambda |v|) + mu sin(lambda |v|) ).
/// Its inverse is e^{-lambda q}.
inline AxialElement exp_scaled(const Complex& lambda, const QuaternionicOrder& q) {
    const Complex ea = std::exp(lambda * q.a);
    if (q.degenerate) return {q.axis, ea, 0.0};
    const Complex lv = lambda * q.vnorm;
    return {q.axis, ea * std::cos(lv), ea * std::sin(lv)};
}

inline AxialElement exp_axial(const RealQuaternion& q) {
    return exp_scaled(1.0, QuaternionicOrder{q});
}

} // namespace qspline

#endif
