#ifndef QSPLINE_FUNDAMENTAL_HPP
#define QSPLINE_FUNDAMENTAL_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "qspline/bspline.hpp"
#include "qspline/fft.hpp"
#include "qspline/grid.hpp"
#include "qspline/special.hpp"

namespace qspline {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Truncated interpolation filter F_q^M(xi) = sum_{|k|<=M} bhat_q(xi + 2 pi k).
/// The tail obeys |F_q - F_q^M| <= 2 / (pi^a (a-1) M^{a-1}), so M can be chosen
/// a priori for a target tolerance.
inline AxialElement filter_truncated(const QuaternionicOrder& q, double xi, int M) {
    AxialElement total{q.axis, 0.0, 0.0};
    for (int k = -M; k <= M; ++k) total = total + bspline_hat(q, xi + kTwoPi * k);
    return total;
}

inline double filter_tail_bound(const QuaternionicOrder& q, int M) {
    return 2.0 / (std::pow(std::numbers::pi, q.a) * (q.a - 1.0) * std::pow(M, q.a - 1.0));
}

/// Filter through the Hurwitz-zeta route, valid on 0 < xi < 2 pi:
///   F_q(xi) = ((1 - e^{-i xi})/i)^q (2 pi)^{-q} D(q, xi/2pi)
/// with D the zeta denominator.  Exact (no truncation); agrees with
/// filter_truncated in the M -> infinity limit.
inline AxialElement filter_zeta_form(const QuaternionicOrder& q, double xi) {
    if (xi <= 0.0 || xi >= kTwoPi)
        throw DomainError("filter_zeta_form: requires 0 < xi < 2 pi");
    const double h = 0.5 * xi;
    // (1 - e^{-i xi})/i = 2 sin(xi/2) e^{-i xi/2}, principal arg in (-pi, 0)
    const Complex u = 2.0 * std::sin(h) * Complex(std::cos(h), -std::sin(h));
    return power(u, q) * power(kTwoPi, -q.a, -q.vnorm, q.axis) * zeta_denominator(q, xi / kTwoPi);
}

/// 2 pi periodic filter evaluation, stable arbitrarily close to the grid
/// points 2 pi Z (where F = 1 exactly).  The k = 0 terms of both zetas are
/// peeled off and evaluated as frequency splines, which kills the
/// alpha^{-q} / (1-alpha)^{-q} blowups of the raw zeta form.
inline AxialElement filter_periodic(const QuaternionicOrder& q, double xi) {
    double alpha = xi / kTwoPi;
    alpha -= std::floor(alpha);
    if (alpha < 1e-9 || 1.0 - alpha < 1e-9) return {q.axis, 1.0, 0.0};
    const double xr = kTwoPi * alpha;
    const double h = 0.5 * xr;
    const Complex u = 2.0 * std::sin(h) * Complex(std::cos(h), -std::sin(h));
    const AxialElement zpart =
        power(u, q) * power(kTwoPi, -q.a, -q.vnorm, q.axis) *
        (hurwitz_zeta(q, 1.0 + alpha) +
         exp_scaled(Complex(0.0, std::numbers::pi), q) * hurwitz_zeta(q, 2.0 - alpha));
    return bspline_hat(q, xr) + bspline_hat(q, xr - kTwoPi) + zpart;
}

/// First derivative of the truncated filter.  Term-by-term differentiation of
/// bhat_q(xi + 2 pi k) gives, summed over the same window,
///   (F_q^M)'(xi) = i q (1 - e^{-i xi})^{-1} [ e^{-i xi} F_q^M - F_{q+1}^M ],
/// an exact identity away from 2 pi Z; at those points the value is -i q / 2.
inline AxialElement filter_derivative_truncated(const QuaternionicOrder& q, double xi, int M) {
    const Complex emix(std::cos(xi), -std::sin(xi));
    const Complex denom = 1.0 - emix;
    if (std::abs(denom) < 1e-8)
        return Complex(0.0, -0.5) * q.as_axial();
    const AxialElement f = filter_truncated(q, xi, M);
    const AxialElement f1 = filter_truncated(q.shifted(1.0), xi, M);
    return (Complex(0.0, 1.0) / denom) * (q.as_axial() * (emix * f - f1));
}

/// Second derivative; away from 2 pi Z obtained by differentiating the first
/// derivative formula, at 2 pi Z the value is -q(3q+1)/12 (valid for Sc q > 2;
/// below that the nearest-image singularities make the limit diverge).
inline AxialElement filter_second_derivative_truncated(const QuaternionicOrder& q, double xi,
                                                       int M) {
    const Complex emix(std::cos(xi), -std::sin(xi));
    const Complex denom = 1.0 - emix;
    if (std::abs(denom) < 1e-8) {
        if (q.a <= 2.0)
            throw DomainError("filter_second_derivative: value at 2 pi Z requires Sc q > 2");
        const AxialElement qa = q.as_axial();
        return Complex(-1.0 / 12.0) * (qa * (Complex(3.0) * qa + AxialElement(1.0)));
    }
    const QuaternionicOrder q1 = q.shifted(1.0);
    const AxialElement f = filter_truncated(q, xi, M);
    const AxialElement f1 = filter_truncated(q1, xi, M);
    const AxialElement fp = filter_derivative_truncated(q, xi, M);
    const AxialElement f1p = filter_derivative_truncated(q1, xi, M);
    const Complex i(0.0, 1.0);
    const AxialElement h = emix * f - f1;                       // numerator of F'/(iq)
    const AxialElement hp = emix * fp - f1p - (i * emix) * f;   // dh/dxi
    return (i / (denom * denom)) * (q.as_axial() * (denom * hp - (i * emix) * h));
}

struct FilterScan {
    QuaternionicOrder order;
    int M = 0;
    int grid_points = 0;
    double min_modulus = 0.0;  // refined
    double argmin = 0.0;
    double sup_modulus = 0.0;
    double tail_bound = 0.0;
    std::vector<double> xi;          // scan grid on [0, 2 pi)
    std::vector<AxialElement> values;
};

/// Scan |F_q^M| on an n-point grid over [0, 2 pi), then refine tenfold around
/// the minimum.  Grid points are offset by half a step so the exact zeros of
/// the numerator at 2 pi Z never collide with the scan.
inline FilterScan filter_scan(const QuaternionicOrder& q, int M, int n) {
    FilterScan scan;
    scan.order = q;
    scan.M = M;
    scan.grid_points = n;
    scan.tail_bound = filter_tail_bound(q, M);
    scan.xi.resize(n);
    scan.values.reserve(n);
    double best = std::numeric_limits<double>::infinity();
    double sup = 0.0;
    int ibest = 0;
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) * kTwoPi / n;
        scan.xi[i] = x;
        AxialElement f = filter_truncated(q, x, M);
        scan.values.push_back(f);
        const double m = f.abs();
        if (m < best) { best = m; ibest = i; }
        sup = std::max(sup, m);
    }
    // refinement pass, 10x density across the two neighboring cells
    const double x0 = scan.xi[std::max(ibest - 1, 0)];
    const double x1 = scan.xi[std::min(ibest + 1, n - 1)];
    double rbest = best;
    double rarg = scan.xi[ibest];
    const int rn = 41;
    for (int i = 0; i < rn; ++i) {
        const double x = x0 + (x1 - x0) * i / (rn - 1);
        const double m = filter_truncated(q, x, M).abs();
        if (m < rbest) { rbest = m; rarg = x; }
    }
    scan.min_modulus = rbest;
    scan.argmin = rarg;
    scan.sup_modulus = sup;
    return scan;
}

struct ZeroFreeVerdict {
    double min_modulus = 0.0;
    double tail_bound = 0.0;
    int grid_points = 0;
    bool pass = false;
};

/// Numerical zero-free gate: the truncated filter must stay above its own
/// truncation tail with an equal margin.  This is the operational test that
/// the fundamental spline is well-defined for this order.
inline ZeroFreeVerdict zero_free_check(const QuaternionicOrder& q, int M = 64, int n = 4096) {
    const FilterScan scan = filter_scan(q, M, n);
    ZeroFreeVerdict v;
    v.min_modulus = scan.min_modulus;
    v.tail_bound = scan.tail_bound;
    v.grid_points = n;
    v.pass = scan.min_modulus > 2.0 * scan.tail_bound;
    return v;
}

struct DerivativeScan {
    double sup_scalar = 0.0;  // sup over xi of |(F')_s|
    double sup_vector = 0.0;  // sup over xi of |(F')_v|
};

inline DerivativeScan filter_derivative_scan(const QuaternionicOrder& q, int M, int n) {
    DerivativeScan d;
    // include the 2 pi Z endpoint value -iq/2 (attained in the limit)
    d.sup_scalar = 0.5 * q.a;
    d.sup_vector = 0.5 * q.vnorm;
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) * kTwoPi / n;
        const AxialElement fp = filter_derivative_truncated(q, x, M);
        d.sup_scalar = std::max(d.sup_scalar, std::abs(fp.s));
        d.sup_vector = std::max(d.sup_vector, std::abs(fp.u));
    }
    return d;
}

/// S_q = ( sup|(F_q')_s| + sup|(F_q')_v| ) / inf |F_q|^2, the multiplicative
/// constant in the Riemann-sum error bound for Fourier coefficients of 1/F_q.
inline double epstein_constant(const QuaternionicOrder& q, int M = 64, int n = 4096) {
    const FilterScan scan = filter_scan(q, M, n);
    if (scan.min_modulus <= scan.tail_bound)
        throw ZeroFilterError("epstein_constant: filter minimum within truncation tail");
    const DerivativeScan d = filter_derivative_scan(q, M, n);
    return (d.sup_scalar + d.sup_vector) / (scan.min_modulus * scan.min_modulus);
}

/// Frequency-domain fundamental spline L^_q(xi) = bhat_q(xi) / F_q(xi).
/// L^_q(0) = 1 and L^_q(2 pi k) = 0 for k != 0.
inline AxialElement lq_hat(const QuaternionicOrder& q, double xi) {
    const AxialElement f = filter_periodic(q, xi);
    if (std::min(std::abs(f.chi_plus()), std::abs(f.chi_minus())) < 1e-14)
        throw ZeroFilterError("lq_hat: filter vanishes at xi");
    return bspline_hat(q, xi) * invert(f);
}

struct LqResult {
    GridFunction grid;        // samples of L_q, step pi/Omega
    double alias_estimate = 0.0;
    bool alias_warning = false;
    double min_filter_modulus = 0.0;
};

/// Fundamental cardinal spline by inverse FFT of L^_q sampled on [-Omega, Omega].
/// Omega must be a positive multiple of 2 pi and fft_size a power of two
/// divisible by the points-per-period count; the defaults Omega = 64 pi,
/// fft_size = 2^16 give grid step 1/64.
///
/// The filter is evaluated once per period point through the zeta route; the
/// numerator is evaluated at every sample.  Discretization aliases live at
/// distance 2 pi / dxi from the origin; alias_estimate bounds the spectral
/// tail beyond Omega.
inline LqResult lq_grid(const QuaternionicOrder& q, double omega = 64.0 * std::numbers::pi,
                        std::size_t fft_size = 1u << 16) {
    const double periods = omega / kTwoPi;
    if (std::abs(periods - std::round(periods)) > 1e-9 || periods < 1.0)
        throw DomainError("lq_grid: Omega must be a positive multiple of 2 pi");
    if (!std::has_single_bit(fft_size))
        throw DomainError("lq_grid: fft_size must be a power of two");
    const double dxi = 2.0 * omega / static_cast<double>(fft_size);
    const std::size_t npp = static_cast<std::size_t>(std::llround(kTwoPi / dxi));
    if (npp == 0 || fft_size % npp != 0 ||
        std::abs(npp * dxi - kTwoPi) > 1e-9)
        throw DomainError("lq_grid: fft_size not commensurate with the 2 pi period");

    const ZeroFreeVerdict gate = zero_free_check(q);
    if (!gate.pass) throw ZeroFilterError("lq_grid: filter fails the zero-free check");

    // filter on one period, chi coordinates
    std::vector<Complex> fplus(npp), fminus(npp);
    for (std::size_t j = 0; j < npp; ++j) {
        const AxialElement f = j == 0 ? AxialElement{q.axis, 1.0, 0.0}
                                      : filter_periodic(q, static_cast<double>(j) * dxi);
        fplus[j] = f.chi_plus();
        fminus[j] = f.chi_minus();
    }

    const std::size_t half = fft_size / 2;
    std::vector<Complex> hplus(fft_size), hminus(fft_size);
    for (std::size_t j = 0; j < fft_size; ++j) {
        const double x = (static_cast<double>(j) - static_cast<double>(half)) * dxi;
        const AxialElement bh = bspline_hat(q, x);
        // period index of xi_j, i.e. (j - half) mod npp
        const std::size_t idx = (j % npp + npp - half % npp) % npp;
        hplus[j] = bh.chi_plus() / fplus[idx];
        hminus[j] = bh.chi_minus() / fminus[idx];
    }
    fft_inverse_unscaled(hplus);
    fft_inverse_unscaled(hminus);

    const double dx = std::numbers::pi / omega;
    const double scale = dxi / kTwoPi;
    GridFunction grid(q.axis, -static_cast<double>(half) * dx, dx, fft_size);
    for (std::size_t j = 0; j < fft_size; ++j) {
        const long m = j < half ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(fft_size);
        const double sgn = (m & 1L) ? -1.0 : 1.0;
        const Complex p = sgn * scale * hplus[j];
        const Complex mm = sgn * scale * hminus[j];
        const std::size_t i = static_cast<std::size_t>(m + static_cast<long>(half));
        const AxialElement val = AxialElement::from_chi(q.axis, p, mm);
        grid.s[i] = val.s;
        grid.u[i] = val.u;
    }

    LqResult out;
    out.grid = std::move(grid);
    out.min_filter_modulus = gate.min_modulus;
    // scalar-envelope estimate of the spectral mass beyond Omega
    out.alias_estimate = std::pow(2.0, q.a) * std::pow(omega, 1.0 - q.a) / (q.a - 1.0) /
                         (std::numbers::pi * gate.min_modulus);
    out.alias_warning = out.alias_estimate > 1e-3;
    return out;
}

/// Time-domain B-spline samples by inverse FFT of the frequency spline; the
/// same discretization as lq_grid without the filter.  Complements the
/// alternating time series, whose absolute accuracy floor ~ |t|^{Sc q - 1} eps
/// makes it unusable for measuring the far tail of high orders.
inline GridFunction bspline_grid_fourier(const QuaternionicOrder& q,
                                         double omega = 1024.0 * std::numbers::pi,
                                         std::size_t fft_size = 1u << 20) {
    const double periods = omega / kTwoPi;
    if (std::abs(periods - std::round(periods)) > 1e-9 || periods < 1.0)
        throw DomainError("bspline_grid_fourier: Omega must be a positive multiple of 2 pi");
    if (!std::has_single_bit(fft_size))
        throw DomainError("bspline_grid_fourier: fft_size must be a power of two");
    const double dxi = 2.0 * omega / static_cast<double>(fft_size);
    const std::size_t half = fft_size / 2;
    std::vector<Complex> hplus(fft_size), hminus(fft_size);
    for (std::size_t j = 0; j < fft_size; ++j) {
        const double x = (static_cast<double>(j) - static_cast<double>(half)) * dxi;
        const AxialElement bh = bspline_hat(q, x);
        hplus[j] = bh.chi_plus();
        hminus[j] = bh.chi_minus();
    }
    fft_inverse_unscaled(hplus);
    fft_inverse_unscaled(hminus);
    const double dx = std::numbers::pi / omega;
    const double scale = dxi / kTwoPi;
    GridFunction grid(q.axis, -static_cast<double>(half) * dx, dx, fft_size);
    for (std::size_t j = 0; j < fft_size; ++j) {
        const long m = j < half ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(fft_size);
        const double sgn = (m & 1L) ? -1.0 : 1.0;
        const AxialElement val = AxialElement::from_chi(q.axis, sgn * scale * hplus[j],
                                                        sgn * scale * hminus[j]);
        grid.set(static_cast<std::size_t>(m + static_cast<long>(half)), val);
    }
    return grid;
}

/// Interpolation coefficients by DFT of the reciprocal truncated filter:
///   c_{N,M,k} = (1/N) sum_j e^{+2 pi i jk/N} / F_q^M(2 pi j / N),
/// stored for k in [-N/2, N/2).  With the periodization convention
/// F_q(xi) = sum_k B_q(k) e^{-i k xi} these are the coefficients whose series
/// sum_k c_k e^{-i k xi} inverts F_q, i.e. sum_k c_k B_q(m-k) = delta_{m,0}.
/// error_bound combines the filter-truncation part O(M^{1-a}) with the
/// Riemann-sum part (2 pi)(12/N) S_q (both per unit Fourier coefficient).
struct CoeffTable {
    QuaternionicOrder order;
    int N = 0;
    int M = 0;
    Axis axis;
    std::vector<Complex> s, u;  // index k + N/2
    double error_bound = 0.0;
    double min_filter_modulus = 0.0;

    AxialElement at(int k) const {
        const long i = static_cast<long>(k) + N / 2;
        if (i < 0 || i >= static_cast<long>(s.size()))
            throw DomainError("CoeffTable::at: k outside [-N/2, N/2)");
        return {axis, s[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)]};
    }
};

inline CoeffTable coeffs_dft(const QuaternionicOrder& q, int N, int M,
                             std::optional<double> epstein = std::nullopt) {
    if (N <= 0 || !std::has_single_bit(static_cast<unsigned>(N)))
        throw DomainError("coeffs_dft: N must be a positive power of two");
    const double tail = filter_tail_bound(q, M);
    std::vector<Complex> gplus(static_cast<std::size_t>(N)), gminus(gplus);
    double fmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < N; ++j) {
        const AxialElement f = filter_truncated(q, kTwoPi * j / N, M);
        fmin = std::min(fmin, f.abs());
        if (std::min(std::abs(f.chi_plus()), std::abs(f.chi_minus())) < 1e-14)
            throw ZeroFilterError("coeffs_dft: truncated filter vanishes on the DFT grid");
        const AxialElement g = invert(f);
        gplus[static_cast<std::size_t>(j)] = g.chi_plus();
        gminus[static_cast<std::size_t>(j)] = g.chi_minus();
    }
    if (fmin <= tail) throw ZeroFilterError("coeffs_dft: filter minimum within truncation tail");
    fft_inverse_unscaled(gplus);
    fft_inverse_unscaled(gminus);

    CoeffTable table;
    table.order = q;
    table.N = N;
    table.M = M;
    table.axis = q.axis;
    table.min_filter_modulus = fmin;
    table.s.resize(static_cast<std::size_t>(N));
    table.u.resize(static_cast<std::size_t>(N));
    const double scale = 1.0 / N;
    for (int k = -N / 2; k < N / 2; ++k) {
        const std::size_t src = static_cast<std::size_t>(k < 0 ? k + N : k);
        const AxialElement c =
            AxialElement::from_chi(q.axis, scale * gplus[src], scale * gminus[src]);
        const std::size_t dst = static_cast<std::size_t>(k + N / 2);
        table.s[dst] = c.s;
        table.u[dst] = c.u;
    }
    const double S = epstein ? *epstein : epstein_constant(q, M, 512);
    table.error_bound = tail / (fmin * fmin) + kTwoPi * (12.0 / N) * S;
    return table;
}

struct DecayReport {
    double exponent = 0.0;      // fitted slope of log|f| vs log|x|
    double constant = 0.0;      // fitted amplitude
    double max_residual = 0.0;  // worst log-space deviation of the window maxima
    int windows = 0;
};

/// Least-squares envelope fit of log y against log x.  The data are reduced to
/// per-window maxima first (the functions here oscillate through near-zeros,
/// which would otherwise dominate the fit), and window maxima below the noise
/// floor are discarded.
inline DecayReport fit_decay_envelope(const std::vector<double>& x, const std::vector<double>& y,
                                      double lo, double hi, int windows = 10,
                                      double floor_abs = 0.0) {
    std::vector<double> wx, wy;
    for (int w = 0; w < windows; ++w) {
        const double a = lo * std::pow(hi / lo, static_cast<double>(w) / windows);
        const double b = lo * std::pow(hi / lo, static_cast<double>(w + 1) / windows);
        double best = -1.0, bx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < a || x[i] >= b) continue;
            if (y[i] > best) { best = y[i]; bx = x[i]; }
        }
        if (best > floor_abs && best > 0.0) {
            wx.push_back(std::log(bx));
            wy.push_back(std::log(best));
        }
    }
    DecayReport rep;
    rep.windows = static_cast<int>(wx.size());
    if (wx.size() < 2) return rep;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < wx.size(); ++i) {
        sx += wx[i]; sy += wy[i]; sxx += wx[i] * wx[i]; sxy += wx[i] * wy[i];
    }
    const double n = static_cast<double>(wx.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double inter = (sy - slope * sx) / n;
    rep.exponent = slope;
    rep.constant = std::exp(inter);
    for (std::size_t i = 0; i < wx.size(); ++i)
        rep.max_residual = std::max(rep.max_residual, std::abs(wy[i] - (slope * wx[i] + inter)));
    return rep;
}

/// Envelope decay of a fundamental-spline grid over |x| in [lo, hi], both
/// sides combined.
inline DecayReport decay_check(const GridFunction& L, double lo = 5.0, double hi = 20.0) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const double x = std::abs(L.t(i));
        if (x < lo || x > hi) continue;
        xs.push_back(x);
        ys.push_back(L.at(i).abs());
    }
    double peak = 0.0;
    for (double v : ys) peak = std::max(peak, v);
    return fit_decay_envelope(xs, ys, lo, hi, 10, 1e-13 * std::max(peak, 1.0));
}

/// Envelope decay of |c_k| over |k| in [lo, hi].
inline DecayReport decay_check(const CoeffTable& c, double lo = 4.0, double hi = 128.0) {
    std::vector<double> xs, ys;
    const int top = std::min(c.N / 2 - 1, static_cast<int>(hi));
    double peak = 0.0;
    for (int k = 1; k <= top; ++k) {
        const double m = std::max(c.at(k).abs(), c.at(-k).abs());
        xs.push_back(static_cast<double>(k));
        ys.push_back(m);
        peak = std::max(peak, m);
    }
    return fit_decay_envelope(xs, ys, lo, hi, 8, 1e-12 * std::max(peak, 1.0));
}

} // namespace qspline

#endif
