// Command-line front end: evaluates the quaternionic splines and filters,
// exports CSV (and optional SVG) data, and runs the verification suite.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qspline/qspline.hpp"
#include "svgplot.hpp"

using namespace qspline;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string q_text;
    std::string preset;
    std::string out_dir = ".";
    bool plots = false;
    std::uint64_t seed = 12345;
    int grid_n = 1024;
    double xmax = 8.0;
    std::size_t fft_size = 1u << 16;
    int trunc_m = 64;
    int dft_n = 1024;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_q = true) {
    if (wants_q) {
        cmd->add_option("--q", o.q_text, "order as 'a,v1,v2,v3' (or a single scalar)");
        cmd->add_option("--preset", o.preset, "named order: q1 or q2")
            ->check(CLI::IsMember({"q1", "q2"}));
    }
    cmd->add_option("--out", o.out_dir, "output directory for CSV/SVG files");
    cmd->add_flag("--plots", o.plots, "emit SVG quick-look plots next to the CSVs");
    cmd->add_option("--seed", o.seed, "seed for randomized checks/signals");
    cmd->add_option("--grid-n", o.grid_n, "points for dense scans/exports");
    cmd->add_option("--xmax", o.xmax, "time-domain half-span for exports");
    cmd->add_option("--fft-size", o.fft_size, "FFT length for the fundamental spline");
    cmd->add_option("--trunc-m", o.trunc_m, "filter truncation order M");
    cmd->add_option("--dft-n", o.dft_n, "DFT length N for the coefficients");
}

QuaternionicOrder parse_order(const CommonOpts& o) {
    if (!o.preset.empty())
        return o.preset == "q1" ? QuaternionicOrder::preset_q1()
                                : QuaternionicOrder::preset_q2();
    if (o.q_text.empty())
        throw CLI::ValidationError("--q or --preset is required");
    std::vector<double> parts;
    std::stringstream ss(o.q_text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(cell, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--q: cannot parse '" + cell + "'");
        }
        if (used != cell.size())
            throw CLI::ValidationError("--q: trailing characters in '" + cell + "'");
        parts.push_back(v);
    }
    if (parts.size() != 1 && parts.size() != 4)
        throw CLI::ValidationError("--q: expected 'a' or 'a,v1,v2,v3'");
    RealQuaternion q{parts[0]};
    if (parts.size() == 4) q = RealQuaternion{parts[0], parts[1], parts[2], parts[3]};
    if (q.s <= 1.0)
        throw CLI::ValidationError("--q: the scalar part must exceed 1");
    return QuaternionicOrder{q};
}

fs::path prep_out(const CommonOpts& o) {
    fs::path dir(o.out_dir);
    fs::create_directories(dir);
    return dir;
}

void dump(const fs::path& p, const std::string& text) {
    write_file(p.string(), text);
    std::cout << "wrote " << p.string() << "\n";
}

std::string order_tag(const CommonOpts& o) {
    if (!o.preset.empty()) return o.preset;
    return "q";
}

// --- export helpers ---------------------------------------------------------

std::string time_csv(const GridFunction& g) {
    std::ostringstream os;
    write_time_csv(os, g);
    return os.str();
}

void plot_time_grid(const fs::path& p, const std::string& title, const GridFunction& g) {
    qsplot::Series sc{"scalar", "#1f4e9c", {}, {}}, e1{"e1", "#c03020", {}, {}};
    const Vec3& m = g.axis.direction();
    for (std::size_t i = 0; i < g.size(); ++i) {
        sc.x.push_back(g.t(i));
        sc.y.push_back(g.s[i].real());
        e1.x.push_back(g.t(i));
        e1.y.push_back(g.u[i].real() * m[0]);
    }
    qsplot::write_svg(p.string(), title, {sc, e1});
}

GridFunction window(const GridFunction& g, double lo, double hi) {
    const long i0 = std::max<long>(0, static_cast<long>(std::ceil((lo - g.start) / g.step)));
    const long i1 = std::min<long>(static_cast<long>(g.size()) - 1,
                                   static_cast<long>(std::floor((hi - g.start) / g.step)));
    GridFunction out(g.axis, g.t(static_cast<std::size_t>(i0)), g.step,
                     static_cast<std::size_t>(i1 - i0 + 1));
    for (long i = i0; i <= i1; ++i) out.set(static_cast<std::size_t>(i - i0), g.at(static_cast<std::size_t>(i)));
    return out;
}

// --- subcommands -------------------------------------------------------------

int cmd_bspline(const CommonOpts& o) {
    const QuaternionicOrder q = parse_order(o);
    const fs::path dir = prep_out(o);

    GridFunction bt(q.axis, 0.0, o.xmax / o.grid_n, static_cast<std::size_t>(o.grid_n) + 1);
    for (std::size_t i = 0; i < bt.size(); ++i) bt.set(i, bspline_time(q, bt.t(i)));
    dump(dir / ("bspline_time_" + order_tag(o) + ".csv"), time_csv(bt));

    std::vector<double> xi(static_cast<std::size_t>(o.grid_n));
    std::vector<AxialElement> bh;
    bh.reserve(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        xi[i] = -4.0 * kTwoPi + 8.0 * kTwoPi * static_cast<double>(i) / (xi.size() - 1);
        bh.push_back(bspline_hat(q, xi[i]));
    }
    std::ostringstream os;
    write_freq_csv(os, xi, bh);
    dump(dir / ("bspline_hat_" + order_tag(o) + ".csv"), os.str());

    if (o.plots) {
        plot_time_grid(dir / ("bspline_time_" + order_tag(o) + ".svg"),
                       "B_q scalar and e1 channels", bt);
        qsplot::Series mod{"|bhat|", "#1f4e9c", {}, {}};
        for (std::size_t i = 0; i < xi.size(); ++i) {
            mod.x.push_back(xi[i]);
            mod.y.push_back(bh[i].abs());
        }
        qsplot::write_svg((dir / ("bspline_hat_" + order_tag(o) + ".svg")).string(),
                          "|bhat_q|", {mod});
    }
    return 0;
}

int cmd_filter(const CommonOpts& o) {
    const QuaternionicOrder q = parse_order(o);
    const fs::path dir = prep_out(o);

    std::vector<double> xi(static_cast<std::size_t>(o.grid_n));
    std::vector<AxialElement> fv, dv;
    fv.reserve(xi.size());
    dv.reserve(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        xi[i] = (static_cast<double>(i) + 0.5) * kTwoPi / static_cast<double>(o.grid_n);
        fv.push_back(filter_truncated(q, xi[i], o.trunc_m));
        dv.push_back(filter_derivative_truncated(q, xi[i], o.trunc_m));
    }
    std::ostringstream osf, osd;
    write_freq_csv(osf, xi, fv);
    write_freq_csv(osd, xi, dv);
    dump(dir / ("filter_" + order_tag(o) + ".csv"), osf.str());
    dump(dir / ("filter_derivative_" + order_tag(o) + ".csv"), osd.str());

    const FilterScan scan = filter_scan(q, o.trunc_m, o.grid_n);
    const DerivativeScan ds = filter_derivative_scan(q, o.trunc_m, o.grid_n);
    std::cout << "min |F| = " << scan.min_modulus << " at xi = " << scan.argmin
              << " (truncation tail <= " << scan.tail_bound << ")\n"
              << "sup |(F')_s| + sup |(F')_v| = " << ds.sup_scalar + ds.sup_vector << "\n"
              << "S_q = " << (ds.sup_scalar + ds.sup_vector) /
                                 (scan.min_modulus * scan.min_modulus)
              << "\n";

    if (o.plots) {
        qsplot::Series ms{"|F_s|", "#1f4e9c", {}, {}}, mv{"|F_v|", "#207030", {}, {}},
            mm{"|F|", "#c03020", {}, {}};
        for (std::size_t i = 0; i < xi.size(); ++i) {
            ms.x.push_back(xi[i]); ms.y.push_back(std::abs(fv[i].s));
            mv.x.push_back(xi[i]); mv.y.push_back(std::abs(fv[i].u));
            mm.x.push_back(xi[i]); mm.y.push_back(fv[i].abs());
        }
        qsplot::write_svg((dir / ("filter_" + order_tag(o) + ".svg")).string(),
                          "interpolation filter moduli", {ms, mv, mm});
        qsplot::Series ps{"|F'_s|", "#1f4e9c", {}, {}}, pv{"|F'_v|", "#c03020", {}, {}};
        for (std::size_t i = 0; i < xi.size(); ++i) {
            ps.x.push_back(xi[i]); ps.y.push_back(std::abs(dv[i].s));
            pv.x.push_back(xi[i]); pv.y.push_back(std::abs(dv[i].u));
        }
        qsplot::write_svg((dir / ("filter_derivative_" + order_tag(o) + ".svg")).string(),
                          "filter derivative moduli", {ps, pv});
    }
    return 0;
}

int cmd_fundamental(const CommonOpts& o) {
    const QuaternionicOrder q = parse_order(o);
    const fs::path dir = prep_out(o);
    const LqResult L = lq_grid(q, 64.0 * std::numbers::pi, o.fft_size);
    if (L.alias_warning)
        std::cout << "warning: alias estimate " << L.alias_estimate
                  << " exceeds 1e-3; increase the bandwidth\n";

    const GridFunction win = window(L.grid, -o.xmax, o.xmax);
    dump(dir / ("fundamental_" + order_tag(o) + ".csv"), time_csv(win));

    // scalar versus e1 channel, as a parametric curve
    std::ostringstream pc;
    pc << "t,scalar,e1\n";
    const Vec3& m = win.axis.direction();
    for (std::size_t i = 0; i < win.size(); ++i)
        pc << fmt_double(win.t(i)) << ',' << fmt_double(win.s[i].real()) << ','
           << fmt_double(win.u[i].real() * m[0]) << '\n';
    dump(dir / ("phase_curve_" + order_tag(o) + ".csv"), pc.str());

    const long i0 = L.grid.index_of(0.0);
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        worst = std::max(worst, L.grid.at(static_cast<std::size_t>(L.grid.index_of(k))).abs());
        worst = std::max(worst, L.grid.at(static_cast<std::size_t>(L.grid.index_of(-k))).abs());
    }
    std::cout << "|L(0) - 1| = " << (L.grid.at(static_cast<std::size_t>(i0)) - AxialElement(1.0)).abs()
              << ", max |L(m)| over 1 <= |m| <= 20: " << worst << "\n";

    if (o.plots) {
        plot_time_grid(dir / ("fundamental_" + order_tag(o) + ".svg"),
                       "fundamental spline channels", win);
        qsplot::Series ph{"scalar vs e1", "#1f4e9c", {}, {}};
        for (std::size_t i = 0; i < win.size(); ++i) {
            ph.x.push_back(win.s[i].real());
            ph.y.push_back(win.u[i].real() * m[0]);
        }
        qsplot::write_svg((dir / ("phase_curve_" + order_tag(o) + ".svg")).string(),
                          "scalar/e1 phase curve", {ph});
    }
    return 0;
}

int cmd_coeffs(const CommonOpts& o) {
    const QuaternionicOrder q = parse_order(o);
    const fs::path dir = prep_out(o);
    const CoeffTable c = coeffs_dft(q, o.dft_n, o.trunc_m);
    std::ostringstream os;
    write_coeff_csv(os, c);
    dump(dir / ("coeffs_" + order_tag(o) + ".csv"), os.str());
    const DecayReport rep = decay_check(c, 4.0, std::min(256.0, o.dft_n / 4.0));
    std::cout << "error bound: " << c.error_bound << "\n"
              << "decay-envelope exponent: " << rep.exponent << " over " << rep.windows
              << " windows (amplitude " << rep.constant << ")\n";
    return 0;
}

int cmd_reconstruct(const CommonOpts& o, int terms, int signal_k) {
    const QuaternionicOrder q = parse_order(o);
    const fs::path dir = prep_out(o);

    std::mt19937_64 gen(o.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SplineSignal sig;
    sig.order = q;
    sig.kmin = -signal_k;
    for (int k = -signal_k; k <= signal_k; ++k) {
        sig.ds.push_back(Complex(uni(gen), uni(gen)));
        sig.du.push_back(Complex(uni(gen), uni(gen)));
    }

    const GridSpec spec{-o.xmax, 1.0 / 64.0, static_cast<std::size_t>(128 * o.xmax) + 1};
    const GridFunction f = synthesize(sig, spec);
    const LqResult L = lq_grid(q);
    std::vector<AxialElement> samples;
    const int m0 = -terms;
    for (int m = m0; m <= terms; ++m)
        samples.push_back(synthesize_at(sig, static_cast<double>(m)));
    const GridFunction rec = reconstruct(L.grid, samples, m0, spec, terms);

    dump(dir / "original.csv", time_csv(f));
    dump(dir / "reconstruction.csv", time_csv(rec));

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        num += (rec.at(i) - f.at(i)).norm_sq();
        den += f.at(i).norm_sq();
    }
    std::cout << "relative L2 reconstruction error with " << terms
              << " terms: " << std::sqrt(num / den) << "\n";
    return 0;
}

// --- verify -------------------------------------------------------------------

struct Verifier {
    int failures = 0;
    void report(const std::string& name, bool ok, double measured, double tol) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (measured " << measured
                  << ", tolerance " << tol << ")\n";
        if (!ok) ++failures;
    }
};

int cmd_verify(const CommonOpts& o) {
    const QuaternionicOrder q = parse_order(o);
    Verifier v;
    std::cout << "verifying order a = " << q.a << ", |v| = " << q.vnorm << "\n";

    const ZeroFreeVerdict gate = zero_free_check(q, o.trunc_m, o.grid_n);
    v.report("zero-free filter gate (min > 2*tail)", gate.pass, gate.min_modulus,
             2.0 * gate.tail_bound);
    if (!gate.pass) {
        std::cout << "filter fails the zero-free gate; stopping\n";
        return 2;
    }

    if (!o.preset.empty()) {
        const bool is_q1 = o.preset == "q1";
        const double want_min = is_q1 ? 0.1568 : 0.7799;
        const double want_sup = is_q1 ? 3.7889 : 2.1753;
        const FilterScan scan = filter_scan(q, 64, 4096);
        v.report("documented min |F|", std::abs(scan.min_modulus - want_min) <= 0.002,
                 scan.min_modulus, 0.002);
        const DerivativeScan ds = filter_derivative_scan(q, 64, 4096);
        v.report("documented sup |(F')_s| + sup |(F')_v|",
                 std::abs(ds.sup_scalar + ds.sup_vector - want_sup) <= 0.01,
                 ds.sup_scalar + ds.sup_vector, 0.01);
    }

    {
        std::mt19937_64 gen(o.seed);
        std::uniform_real_distribution<double> uni(0.05, kTwoPi - 0.05);
        double worst = 0.0;
        for (int i = 0; i < 16; ++i) {
            const double x = uni(gen);
            const AxialElement ft = filter_truncated(q, x, 4096);
            const AxialElement fz = filter_zeta_form(q, x);
            worst = std::max(worst, (ft - fz).abs() / fz.abs());
        }
        v.report("filter route equivalence (truncated vs zeta form)", worst <= 1e-6, worst,
                 1e-6);
    }

    {
        const LqResult L = lq_grid(q, 64.0 * std::numbers::pi, o.fft_size);
        const long i0 = L.grid.index_of(0.0);
        const double at0 = (L.grid.at(static_cast<std::size_t>(i0)) - AxialElement(1.0)).abs();
        double worst = 0.0;
        for (int k = 1; k <= 20; ++k) {
            worst = std::max(worst,
                             L.grid.at(static_cast<std::size_t>(L.grid.index_of(k))).abs());
            worst = std::max(worst,
                             L.grid.at(static_cast<std::size_t>(L.grid.index_of(-k))).abs());
        }
        v.report("interpolation |L(0) - 1|", at0 <= 1e-3, at0, 1e-3);
        v.report("interpolation max |L(m)|, 1 <= |m| <= 20", worst <= 1e-3, worst, 1e-3);

        const DecayReport rep = decay_check(L.grid);
        const double want = -std::floor(q.a) + 0.5;
        if (rep.windows >= 2)
            v.report("fundamental spline decay exponent", rep.exponent <= want, rep.exponent,
                     want);
        else
            v.report("fundamental spline decay (tail below measurement floor)", true, 0.0,
                     want);
    }

    {
        std::mt19937_64 gen(o.seed + 1);
        std::uniform_real_distribution<double> uni(-1.5, 1.5);
        std::uniform_real_distribution<double> pos(0.05, 4.0);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const RealQuaternion r{uni(gen), uni(gen), uni(gen), uni(gen)};
            const QuaternionicOrder qq{r};
            const Complex lam(uni(gen), uni(gen));
            // scaled exponential inverse
            const AxialElement e = exp_scaled(lam, qq) * exp_scaled(-lam, qq);
            worst = std::max(worst, (e - AxialElement(1.0)).abs());
            // |e^r| = e^{Sc r}
            worst = std::max(worst,
                             std::abs(exp_axial(r).abs() - std::exp(r.s)) / std::exp(r.s));
            // negative-real-base power identity
            const double t = pos(gen);
            const AxialElement lhs = power(Complex(-t, 0.0), qq);
            const AxialElement rhs =
                exp_scaled(Complex(0.0, std::numbers::pi), qq) * power(t, qq);
            worst = std::max(worst, (lhs - rhs).abs() / std::max(1.0, rhs.abs()));
            // star involution on a random complex quaternion
            const ComplexQuaternion cq{Complex(uni(gen), uni(gen)), Complex(uni(gen), uni(gen)),
                                       Complex(uni(gen), uni(gen)), Complex(uni(gen), uni(gen))};
            worst = std::max(worst, (star(star(cq)) - cq).abs());
        }
        v.report("algebra spot checks (exp/power/star)", worst <= 1e-12, worst, 1e-12);
    }

    std::cout << (v.failures == 0 ? "verification passed\n"
                                  : "verification FAILED\n");
    return v.failures == 0 ? 0 : 2;
}

int cmd_figures(const CommonOpts& o) {
    for (const std::string preset : {"q1", "q2"}) {
        CommonOpts po = o;
        po.preset = preset;
        po.xmax = std::max(po.xmax, 6.0);
        if (const int rc = cmd_fundamental(po); rc != 0) return rc;
        if (const int rc = cmd_filter(po); rc != 0) return rc;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic B-splines, fundamental cardinal splines, and sampling"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value configuration file; flags override");

    CommonOpts o;
    int terms = 64, signal_k = 16;

    add_common(app.add_subcommand("bspline", "export B_q in time and frequency"), o);
    add_common(app.add_subcommand("filter", "export the interpolation filter and derivative"), o);
    add_common(app.add_subcommand("fundamental", "export the fundamental cardinal spline"), o);
    add_common(app.add_subcommand("coeffs", "export interpolation coefficients"), o);
    auto* rec = app.add_subcommand("reconstruct", "reconstruct a random spline from samples");
    add_common(rec, o);
    rec->add_option("--terms", terms, "number of sampling-series terms");
    rec->add_option("--signal-k", signal_k, "coefficient half-support of the test signal");
    add_common(app.add_subcommand("verify", "run the verification suite"), o);
    add_common(app.add_subcommand("figures", "export the preset figure data"), o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("bspline")) return cmd_bspline(o);
        if (app.got_subcommand("filter")) return cmd_filter(o);
        if (app.got_subcommand("fundamental")) return cmd_fundamental(o);
        if (app.got_subcommand("coeffs")) return cmd_coeffs(o);
        if (app.got_subcommand("reconstruct")) return cmd_reconstruct(o, terms, signal_k);
        if (app.got_subcommand("verify")) return cmd_verify(o);
        if (app.got_subcommand("figures")) return cmd_figures(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ZeroFilterError& e) {
        std::cerr << "numerical gate failure: " << e.what() << "\n";
        return 2;
    } catch (const NonInvertibleError& e) {
        std::cerr << "numerical gate failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
