#include <catch2/catch_amalgamated.hpp>

#include "qspline/sampling.hpp"

#include "oracles.hpp"

using namespace qspline;
using Catch::Approx;

namespace {
const QuaternionicOrder kQ1 = QuaternionicOrder::preset_q1();
const QuaternionicOrder kQ2 = QuaternionicOrder::preset_q2();

SplineSignal random_signal(oracles::Rng& rng, const QuaternionicOrder& q, int K) {
    SplineSignal sig;
    sig.order = q;
    sig.kmin = -K;
    sig.ds.resize(2 * K + 1);
    sig.du.resize(2 * K + 1);
    for (auto& v : sig.ds) v = rng.complex_in_disk(1.0);
    for (auto& v : sig.du) v = rng.complex_in_disk(1.0);
    return sig;
}

double rel_l2_error(const GridFunction& got, const GridFunction& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += (got.at(i) - want.at(i)).norm_sq();
        den += want.at(i).norm_sq();
    }
    return std::sqrt(num / den);
}

// interpolation coefficients from the exact (zeta-route) filter; test-only
std::vector<AxialElement> exact_coeffs(const QuaternionicOrder& q, int N) {
    std::vector<Complex> gp(static_cast<std::size_t>(N)), gm(gp);
    for (int j = 0; j < N; ++j) {
        const AxialElement g = invert(filter_periodic(q, kTwoPi * j / N));
        gp[static_cast<std::size_t>(j)] = g.chi_plus();
        gm[static_cast<std::size_t>(j)] = g.chi_minus();
    }
    fft_inverse_unscaled(gp);
    fft_inverse_unscaled(gm);
    std::vector<AxialElement> c(static_cast<std::size_t>(N));
    for (int k = -N / 2; k < N / 2; ++k) {
        const std::size_t src = static_cast<std::size_t>(k < 0 ? k + N : k);
        c[static_cast<std::size_t>(k + N / 2)] = AxialElement::from_chi(
            q.axis, gp[src] / static_cast<double>(N), gm[src] / static_cast<double>(N));
    }
    return c;
}
} // namespace

TEST_CASE("synthesis of a delta sequence is the spline itself") {
    SplineSignal sig;
    sig.order = kQ2;
    sig.kmin = 0;
    sig.ds = {Complex(1.0)};
    sig.du = {Complex(0.0)};
    const GridFunction g = synthesize(sig, {-2.0, 1.0 / 32.0, 320});
    for (std::size_t i = 0; i < g.size(); i += 7) {
        const AxialElement want = bspline_time(kQ2, g.t(i));
        CHECK((g.at(i) - want).abs() < 1e-12);
    }
}

TEST_CASE("adjacent unit coefficients reach the partition plateau") {
    // enough adjacent shifts that the splines omitted on the left vanish
    // (negative arguments) and the ones omitted on the right sit in the tail;
    // the sum then reproduces the partition-of-unity segment
    SplineSignal sig;
    sig.order = kQ1;
    sig.kmin = -4;
    sig.ds.assign(9, Complex(1.0));
    sig.du.assign(9, Complex(0.0));
    const GridFunction g = synthesize(sig, {3.0, 1.0 / 64.0, 65});
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK((g.at(i) - AxialElement(1.0)).abs() < 1e-5);

    SplineSignal sig2;
    sig2.order = kQ2;
    sig2.kmin = -2;
    sig2.ds.assign(5, Complex(1.0));
    sig2.du.assign(5, Complex(0.0));
    const GridFunction g2 = synthesize(sig2, {2.0, 1.0 / 64.0, 58});
    for (std::size_t i = 0; i < g2.size(); ++i)
        CHECK((g2.at(i) - AxialElement(1.0)).abs() < 5e-3);
}

TEST_CASE("grid synthesis matches the per-point brute force") {
    oracles::Rng rng;
    for (const auto& q : {kQ1, kQ2}) {
        const SplineSignal sig = random_signal(rng, q, 6);
        const GridSpec spec{-8.0, 1.0 / 16.0, 400};
        const GridFunction g = synthesize(sig, spec);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t i = static_cast<std::size_t>(rng.uniform(0.0, 399.99));
            const AxialElement want = synthesize_at(sig, g.t(i));
            CHECK((g.at(i) - want).abs() < 1e-11);
        }
    }
}

TEST_CASE("spline samples equal the coefficient/sample convolution") {
    // f(m) = sum_k d_k b_{m-k}
    oracles::Rng rng;
    for (const auto& [q, K] : {std::pair{kQ1, 40}, std::pair{kQ2, 300}}) {
        const SplineSignal sig = random_signal(rng, q, 8);
        const IntegerSymbol b = integer_samples(q, K);
        for (int m = -4; m <= 20; ++m) {
            AxialElement conv{q.axis, 0.0, 0.0};
            for (int k = sig.kmin; k <= sig.kmax(); ++k) {
                const int off = m - k;
                if (off >= -b.kmax && off <= b.kmax) conv = conv + sig.coeff(k) * b.at(off);
            }
            const AxialElement direct = synthesize_at(sig, static_cast<double>(m));
            CHECK((direct - conv).abs() < 1e-8);
        }
    }
}

TEST_CASE("reconstruction of the spline from its integer samples") {
    for (const auto& q : {kQ1, kQ2}) {
        const LqResult L = lq_grid(q);

        SECTION("f = B_q") {
            std::vector<AxialElement> samples;
            const int m0 = -20, m1 = 60;
            for (int m = m0; m <= m1; ++m)
                samples.push_back(bspline_time(q, static_cast<double>(m)));
            const GridSpec out{-5.0, 1.0 / 64.0, 641};
            const GridFunction rec = reconstruct(L.grid, samples, m0, out, 64);
            double worst = 0.0;
            for (std::size_t i = 0; i < rec.size(); ++i)
                worst = std::max(worst, (rec.at(i) - bspline_time(q, rec.t(i))).abs());
            CAPTURE(q.a);
            CHECK(worst < 2e-3);
        }

        SECTION("f = L_q reconstructs exactly from delta samples") {
            std::vector<AxialElement> samples(41, AxialElement{q.axis, 0.0, 0.0});
            samples[20] = AxialElement(1.0);
            const GridSpec out{-5.0, 1.0 / 64.0, 641};
            const GridFunction rec = reconstruct(L.grid, samples, -20, out, 64);
            for (std::size_t i = 0; i < rec.size(); i += 11) {
                const long li = L.grid.index_of(rec.t(i));
                CHECK((rec.at(i) - L.grid.at(static_cast<std::size_t>(li))).abs() < 1e-15);
            }
        }
    }
}

TEST_CASE("random signals: reconstruction error small and shrinking") {
    oracles::Rng rng(7);
    for (const auto& q : {kQ1, kQ2}) {
        const LqResult L = lq_grid(q);
        for (int trial = 0; trial < 3; ++trial) {
            const SplineSignal sig = random_signal(rng, q, 16);
            const GridSpec spec{-40.0, 1.0 / 64.0, 64 * 80 + 1};
            const GridFunction f = synthesize(sig, spec);
            std::vector<AxialElement> samples;
            const int m0 = -64;
            for (int m = m0; m <= 64; ++m)
                samples.push_back(synthesize_at(sig, static_cast<double>(m)));
            double prev = -1.0;
            for (const int terms : {16, 32, 64}) {
                const GridFunction rec = reconstruct(L.grid, samples, m0, spec, terms);
                const double err = rel_l2_error(rec, f);
                if (terms == 64) CHECK(err < 1e-2);
                if (prev >= 0.0) CHECK(err <= prev * 1.1);
                prev = err;
            }
        }
    }
}

TEST_CASE("two-space equality: B-expansion -> L-coefficients -> back") {
    oracles::Rng rng(11);
    for (const auto& [q, Kb, exact] : {std::tuple{kQ1, 40, false}, std::tuple{kQ2, 300, true}}) {
        const SplineSignal sig = random_signal(rng, q, 8);
        const IntegerSymbol b = integer_samples(q, Kb);
        const int N = 1024;
        std::vector<AxialElement> c;
        if (exact) {
            c = exact_coeffs(q, N);
        } else {
            const CoeffTable tab = coeffs_dft(q, N, 64);
            for (int k = -N / 2; k < N / 2; ++k) c.push_back(tab.at(k));
        }
        const auto c_at = [&](int k) {
            const long i = static_cast<long>(k) + N / 2;
            return (i >= 0 && i < N) ? c[static_cast<std::size_t>(i)]
                                     : AxialElement{q.axis, 0.0, 0.0};
        };
        // e = d * b (coefficients of f in the L basis), then d' = e * c
        double worst = 0.0;
        for (int j = -8; j <= 8; ++j) {
            AxialElement dj{q.axis, 0.0, 0.0};
            for (int l = j - 350; l <= j + 350; ++l) {
                AxialElement el{q.axis, 0.0, 0.0};
                for (int k = sig.kmin; k <= sig.kmax(); ++k) {
                    const int off = l - k;
                    if (off >= -b.kmax && off <= b.kmax) el = el + sig.coeff(k) * b.at(off);
                }
                dj = dj + el * c_at(j - l);
            }
            worst = std::max(worst, (dj - sig.coeff(j)).abs());
        }
        CAPTURE(q.a);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("frame bounds") {
    SECTION("finite and ordered for the presets") {
        for (const auto& q : {kQ1, kQ2}) {
            const FrameBounds fb = frame_bounds(q);
            CAPTURE(q.a, fb.lower, fb.upper);
            CHECK(fb.lower > 0.0);
            CHECK(fb.upper < 1e6);
            CHECK(fb.lower <= fb.upper);
            CHECK(fb.scan_points == 2048);
        }
    }

    SECTION("lower bound against the periodized-modulus estimate") {
        // c >= (2/pi)^{2 Sc q} / sup ( sum_k |bhat(xi+2pik)| )^2; the squared
        // base reflects |bhat(xi)|^2 >= |Xi(xi)|^{2 Sc q} on |xi| <= pi
        for (const auto& q : {kQ1, kQ2}) {
            const FrameBounds fb = frame_bounds(q);
            double sup_abs_sum = 0.0;
            for (int i = 0; i < 512; ++i) {
                const double xi = -std::numbers::pi + kTwoPi * 0.5 * (2.0 * i + 1.0) / 512.0;
                double s = 0.0;
                for (int k = -64; k <= 64; ++k) s += bspline_hat(q, xi + kTwoPi * k).abs();
                sup_abs_sum = std::max(sup_abs_sum, s);
            }
            const double bound =
                std::pow(2.0 / std::numbers::pi, 2.0 * q.a) / (sup_abs_sum * sup_abs_sum);
            CAPTURE(q.a, fb.lower, bound);
            CHECK(fb.lower >= bound);
        }
    }

    SECTION("classical order 2 matches the known Riesz bounds 1/3 and 1") {
        // sum_k |bhat_2(xi+2pik)|^2 = (2 + cos xi)/3 and |F_2| = 1
        const FrameBounds fb = frame_bounds(QuaternionicOrder{RealQuaternion{2.0}}, 4096, 512);
        CHECK(fb.lower == Approx(1.0 / 3.0).epsilon(1e-6));
        CHECK(fb.upper == Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("L2 pairing") {
    oracles::Rng rng;
    const Axis ax = kQ2.axis;
    GridFunction f(ax, 0.0, 0.01, 200), g(ax, 0.0, 0.01, 200);
    for (std::size_t i = 0; i < f.size(); ++i) {
        f.set(i, {ax, rng.complex_in_disk(1.0), rng.complex_in_disk(1.0)});
        g.set(i, {ax, rng.complex_in_disk(1.0), rng.complex_in_disk(1.0)});
    }

    SECTION("positivity and definiteness") {
        const PairingResult ff = l2_pairing(f, f);
        CHECK(ff.scalar.real() > 0.0);
        CHECK(std::abs(ff.scalar.imag()) < 1e-12 * ff.scalar.real());
        GridFunction zero(ax, 0.0, 0.01, 200);
        CHECK(l2_pairing(zero, zero).scalar == Complex(0.0));
    }

    SECTION("conjugate symmetry <f,g> = star(<g,f>)") {
        const PairingResult fg = l2_pairing(f, g);
        const PairingResult gf = l2_pairing(g, f);
        CHECK((fg.value - star(gf.value)).abs() < 1e-12);
    }

    SECTION("grid mismatch is rejected") {
        GridFunction h(ax, 0.0, 0.02, 200);
        CHECK_THROWS_AS(l2_pairing(f, h), GridMismatchError);
    }

    SECTION("Plancherel: time norm of B_q vs frequency quadrature") {
        for (const auto& q : {kQ1, kQ2}) {
            GridFunction bt(q.axis, 0.0, 1.0 / 64.0, 64 * 45 + 1);
            for (std::size_t i = 0; i < bt.size(); ++i) bt.set(i, bspline_time(q, bt.t(i)));
            const double time_norm = l2_pairing(bt, bt).scalar.real();
            // (1/2pi) integral of |bhat|^2 by trapezoid over [-256 pi, 256 pi]
            const double W = 256.0 * std::numbers::pi, dxi = 1.0 / 32.0;
            double freq_norm = 0.0;
            for (double x = -W; x <= W; x += dxi) freq_norm += bspline_hat(q, x).norm_sq() * dxi;
            freq_norm /= kTwoPi;
            CAPTURE(q.a, time_norm, freq_norm);
            CHECK(std::abs(time_norm - freq_norm) < 1e-3);
        }
    }
}
