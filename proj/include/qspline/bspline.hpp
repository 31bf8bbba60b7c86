#ifndef QSPLINE_BSPLINE_HPP
#define QSPLINE_BSPLINE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qspline/axial.hpp"
#include "qspline/special.hpp"

namespace qspline {

/// Xi(xi) = (1 - e^{-i xi}) / (i xi), the frequency symbol of the unit box,
/// with the removable singularity Xi(0) = 1.  Evaluated through the identity
/// Xi(xi) = e^{-i xi/2} sin(xi/2)/(xi/2), which is exact and avoids the
/// 1 - e^{-i xi} cancellation.  Values never touch the closed negative real
/// axis, so the principal log of Xi is always defined.
inline Complex xi_symbol(double xi) {
    if (xi == 0.0) return 1.0;
    const double h = 0.5 * xi;
    const double sinc = std::sin(h) / h;
    return Complex(std::cos(h) * sinc, -std::sin(h) * sinc);
}

/// Frequency-domain B-spline of quaternionic order: Xi(xi)^q, Sc q > 1.
/// Equals 1 at xi = 0 and vanishes at nonzero multiples of 2 pi.
inline AxialElement bspline_hat(const QuaternionicOrder& q, double xi) {
    return power(xi_symbol(xi), q);
}

/// Complex binomial coefficient binom(w, k) = w(w-1)...(w-k+1)/k!.
inline Complex complex_binomial(const Complex& w, int k) {
    Complex b = 1.0;
    for (int j = 0; j < k; ++j) b *= (w - static_cast<double>(j)) / (j + 1.0);
    return b;
}

/// Quaternionic binomial coefficient through the complex shadow:
/// binom(q, k) = Re binom(w, k) + mu Im binom(w, k).
inline RealQuaternion quat_binomial(const QuaternionicOrder& q, int k) {
    if (k < 0) throw DomainError("quat_binomial: k >= 0 required");
    const Complex b = complex_binomial(q.w, k);
    const Vec3& m = q.axis.direction();
    if (q.degenerate) return RealQuaternion{b.real()};
    return {b.real(), {b.imag() * m[0], b.imag() * m[1], b.imag() * m[2]}};
}

/// Time-domain B-spline of complex order w (Re w > 1):
///   B_w(t) = 1/Gamma(w) sum_k (-1)^k binom(w,k) (t-k)_+^{w-1}.
/// Only k <= floor(t) contributes; the sum is exact, not truncated.
inline Complex bspline_time_complex(const Complex& w, double t) {
    if (w.real() <= 1.0) throw DomainError("bspline_time: requires Sc q > 1");
    if (t <= 0.0) return 0.0;
    const int kmax = static_cast<int>(std::floor(t));
    Complex total = 0.0;
    Complex binom = 1.0;
    double sign = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        const double tk = t - k;
        if (tk > 0.0) total += sign * binom * std::exp((w - 1.0) * std::log(tk));
        binom *= (w - static_cast<double>(k)) / (k + 1.0);
        sign = -sign;
    }
    return total / gamma(w);
}

/// Time-domain B-spline of quaternionic order, computed entirely in the axial
/// algebra (binomials by the product recursion, powers by the principal-branch
/// closed form, division by Gamma(q) through the chi coordinates).  Agrees
/// with the complex-shadow route Re B_w + mu Im B_w; that agreement is a
/// structure theorem, tested rather than assumed.
///
/// Absolute accuracy degrades like |t|^{Sc q - 1} * eps from the alternating
/// sum; at desk scale the affected values are far below every tolerance used.
inline AxialElement bspline_time(const QuaternionicOrder& q, double t, int trunc = -1) {
    if (q.a <= 1.0) throw DomainError("bspline_time: requires Sc q > 1");
    if (t <= 0.0) return {q.axis, 0.0, 0.0};
    int kmax = static_cast<int>(std::floor(t));
    if (trunc >= 0 && trunc < kmax) kmax = trunc;
    const AxialElement qa = q.as_axial();
    AxialElement total{q.axis, 0.0, 0.0};
    AxialElement binom{q.axis, 1.0, 0.0};
    double sign = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        const double tk = t - k;
        if (tk > 0.0) {
            const AxialElement p = power(tk, q.a - 1.0, q.vnorm, q.axis);
            total = total + Complex(sign) * (binom * p);
        }
        binom = Complex(1.0 / (k + 1.0)) * (binom * (qa - AxialElement(static_cast<double>(k))));
        sign = -sign;
    }
    return total * invert(gamma_axial(q));
}

inline AxialElement bspline_time_shadow(const QuaternionicOrder& q, double t) {
    const Complex bw = bspline_time_complex(q.w, t);
    return {q.axis, bw.real(), bw.imag()};
}

/// Integer samples b_k = B_q(k), k in [-K, K] (all k <= 0 vanish), together
/// with the symbol sum_k b_k e^{-i k xi}.  By Poisson summation the symbol
/// equals the periodized frequency spline sum_k bhat_q(xi + 2 pi k).
struct IntegerSymbol {
    QuaternionicOrder order;
    int kmax = 0;
    std::vector<AxialElement> b;  // index k + kmax, k in [-kmax, kmax]
    double tail_bound = 0.0;

    const AxialElement& at(int k) const { return b[static_cast<std::size_t>(k + kmax)]; }

    AxialElement symbol(double xi) const {
        AxialElement total{order.axis, 0.0, 0.0};
        for (int k = -kmax; k <= kmax; ++k) {
            const Complex ph(std::cos(k * xi), -std::sin(k * xi));
            total = total + ph * at(k);
        }
        return total;
    }

    /// sum_k b_k z^k for complex z (unit-circle evaluations in the inverse
    /// criterion tests).
    AxialElement symbol_z(const Complex& z) const {
        AxialElement total{order.axis, 0.0, 0.0};
        Complex zk = 1.0;  // z^0, walk upward; negative k all vanish
        for (int k = 0; k <= kmax; ++k) {
            total = total + zk * at(k);
            zk *= z;
        }
        return total;
    }

    AxialElement sum() const {
        AxialElement total{order.axis, 0.0, 0.0};
        for (const auto& x : b) total = total + x;
        return total;
    }
};

inline IntegerSymbol integer_samples(const QuaternionicOrder& q, int K) {
    IntegerSymbol sym;
    sym.order = q;
    sym.kmax = K;
    sym.b.resize(static_cast<std::size_t>(2 * K + 1), AxialElement{q.axis, 0.0, 0.0});
    for (int k = 1; k <= K; ++k)
        sym.b[static_cast<std::size_t>(k + K)] = bspline_time(q, static_cast<double>(k));
    // envelope extrapolation of the |k|^{-Sc q - 1} decay
    const double bK = sym.at(K).abs();
    sym.tail_bound = bK * K / q.a;
    return sym;
}

} // namespace qspline

#endif
