#ifndef QSPLINE_GRID_HPP
#define QSPLINE_GRID_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "qspline/axial.hpp"

namespace qspline {

/// Uniform grid of axial values sharing one axis.  Stored as separate
/// scalar-slot / vector-slot arrays.
struct GridFunction {
    Axis axis;
    double start = 0.0;
    double step = 1.0;
    std::vector<Complex> s;
    std::vector<Complex> u;

    GridFunction() = default;
    GridFunction(const Axis& ax, double t0, double dt, std::size_t n)
        : axis(ax), start(t0), step(dt), s(n), u(n) {}

    std::size_t size() const { return s.size(); }
    double t(std::size_t i) const { return start + static_cast<double>(i) * step; }

    AxialElement at(std::size_t i) const { return {axis, s[i], u[i]}; }
    void set(std::size_t i, const AxialElement& x) {
        s[i] = x.s;
        u[i] = x.u;
    }

    /// Index of grid point t, or -1 if t is off-grid (beyond 1e-9 * step).
    long index_of(double tt) const {
        const double r = (tt - start) / step;
        const long i = std::lround(r);
        if (i < 0 || static_cast<std::size_t>(i) >= size()) return -1;
        if (std::abs(r - static_cast<double>(i)) > 1e-9) return -1;
        return i;
    }

    friend bool same_grid(const GridFunction& f, const GridFunction& g) {
        return f.size() == g.size() && f.start == g.start && f.step == g.step;
    }
};

} // namespace qspline

#endif
