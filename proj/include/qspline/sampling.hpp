#ifndef QSPLINE_SAMPLING_HPP
#define QSPLINE_SAMPLING_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "qspline/bspline.hpp"
#include "qspline/fundamental.hpp"
#include "qspline/grid.hpp"

namespace qspline {

/// Finitely supported coefficient sequence of an element of the shift-invariant
/// space V_q = span{ B_q(. - k) }.
struct SplineSignal {
    QuaternionicOrder order;
    int kmin = 0;
    std::vector<Complex> ds, du;  // d_k slots, k = kmin .. kmin + n - 1

    int kmax() const { return kmin + static_cast<int>(ds.size()) - 1; }
    AxialElement coeff(int k) const {
        const long i = k - kmin;
        if (i < 0 || i >= static_cast<long>(ds.size())) return {order.axis, 0.0, 0.0};
        return {order.axis, ds[static_cast<std::size_t>(i)], du[static_cast<std::size_t>(i)]};
    }
};

struct GridSpec {
    double start = 0.0;
    double step = 1.0;
    std::size_t n = 0;
};

/// Single-point synthesis sum_k d_k B_q(t - k); the brute-force route.
inline AxialElement synthesize_at(const SplineSignal& sig, double t) {
    AxialElement total{sig.order.axis, 0.0, 0.0};
    for (int k = sig.kmin; k <= sig.kmax(); ++k) {
        if (t - k <= 0.0) continue;  // B_q vanishes on (-inf, 0]
        total = total + sig.coeff(k) * bspline_time(sig.order, t - k);
    }
    return total;
}

/// Grid synthesis of sum_k d_k B_q(. - k).  The grid pitch must subdivide the
/// integers so that every shifted argument lands on one shared B_q lattice,
/// which is filled once and reused.
inline GridFunction synthesize(const SplineSignal& sig, const GridSpec& g) {
    const double per_unit = 1.0 / g.step;
    if (std::abs(per_unit - std::round(per_unit)) > 1e-9)
        throw DomainError("synthesize: grid step must divide 1");
    const double tmax = g.start + (g.n - 1) * g.step;
    // B_q lattice covering every t - k, positive offsets only
    const double bmax = tmax - sig.kmin;
    GridFunction btab(sig.order.axis, g.step, g.step,
                      bmax > 0 ? static_cast<std::size_t>(std::ceil(bmax / g.step)) + 1 : 0);
    for (std::size_t i = 0; i < btab.size(); ++i)
        btab.set(i, bspline_time(sig.order, btab.t(i)));

    GridFunction out(sig.order.axis, g.start, g.step, g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        AxialElement total{sig.order.axis, 0.0, 0.0};
        for (int k = sig.kmin; k <= sig.kmax(); ++k) {
            const double off = out.t(i) - k;
            if (off <= 0.0) continue;
            const long bi = btab.index_of(off);
            if (bi < 0) throw DomainError("synthesize: offset fell off the B lattice");
            total = total + sig.coeff(k) * btab.at(static_cast<std::size_t>(bi));
        }
        out.set(i, total);
    }
    return out;
}

/// Truncated sampling expansion sum_{|k| <= n_terms} f(k) L_q(t - k) on a grid.
/// samples[i] is f(m0 + i); L is a fundamental-spline grid whose pitch the
/// output grid must share.
inline GridFunction reconstruct(const GridFunction& L, const std::vector<AxialElement>& samples,
                                int m0, const GridSpec& g, int n_terms) {
    GridFunction out(L.axis, g.start, g.step, g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        AxialElement total{L.axis, 0.0, 0.0};
        for (std::size_t si = 0; si < samples.size(); ++si) {
            const int k = m0 + static_cast<int>(si);
            if (std::abs(k) > n_terms) continue;
            const long li = L.index_of(out.t(i) - k);
            if (li < 0) throw DomainError("reconstruct: argument outside the L grid");
            total = total + samples[si] * L.at(static_cast<std::size_t>(li));
        }
        out.set(i, total);
    }
    return out;
}

struct FrameBounds {
    double lower = 0.0;      // c
    double upper = 0.0;      // C
    int scan_points = 0;     // resolution of the extremum scan over [-pi, pi]
    int periodization_terms = 0;
};

/// Riesz/frame bounds of {B_q(. - k)}:
///   c = inf_xi sum_k |bhat_q(xi+2pik)|^2 / sup_xi |F_q(xi)|^2,
///   C = sup_xi sum_k |bhat_q(xi+2pik)|^2 / inf_xi |F_q(xi)|^2,
/// scanned over |xi| <= pi.  The scan resolution is reported alongside the
/// bounds since the extrema are located numerically.
inline FrameBounds frame_bounds(const QuaternionicOrder& q, int scan_points = 2048,
                                int K = 128) {
    double s2min = std::numeric_limits<double>::infinity(), s2max = 0.0;
    double fmin = std::numeric_limits<double>::infinity(), fmax = 0.0;
    for (int i = 0; i < scan_points; ++i) {
        const double xi = -std::numbers::pi + kTwoPi * 0.5 * (2.0 * i + 1.0) / scan_points;
        double s2 = 0.0;
        for (int k = -K; k <= K; ++k) s2 += bspline_hat(q, xi + kTwoPi * k).norm_sq();
        const double fm = filter_periodic(q, xi).abs();
        s2min = std::min(s2min, s2);
        s2max = std::max(s2max, s2);
        fmin = std::min(fmin, fm);
        fmax = std::max(fmax, fm);
    }
    if (fmin < 1e-12) throw ZeroFilterError("frame_bounds: filter vanishes on the scan");
    FrameBounds fb;
    fb.lower = s2min / (fmax * fmax);
    fb.upper = s2max / (fmin * fmin);
    fb.scan_points = scan_points;
    fb.periodization_terms = K;
    return fb;
}

struct PairingResult {
    ComplexQuaternion value;  // integral of f star(g)
    Complex scalar;           // its scalar part: the L^2 inner product
};

/// Trapezoidal H_C-valued pairing  integral of f(x) star(g(x)) dx  on a shared
/// grid; the scalar part is the inner product, nonnegative for f = g.
inline PairingResult l2_pairing(const GridFunction& f, const GridFunction& g) {
    if (!same_grid(f, g)) throw GridMismatchError("l2_pairing: grids differ");
    const Axis ax = merge(f.axis, g.axis);
    AxialElement acc{ax, 0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double wgt = (i == 0 || i + 1 == f.size()) ? 0.5 : 1.0;
        acc = acc + Complex(wgt) * (f.at(i) * g.at(i).star());
    }
    acc = Complex(f.step) * acc;
    PairingResult r;
    r.value = acc.embed();
    r.scalar = acc.s;
    return r;
}

} // namespace qspline

#endif
