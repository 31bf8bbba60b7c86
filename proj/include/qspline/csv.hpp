#ifndef QSPLINE_CSV_HPP
#define QSPLINE_CSV_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qspline/fundamental.hpp"
#include "qspline/grid.hpp"

namespace qspline {

// %.17g round-trips doubles exactly through strtod.
inline std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Time-domain schema: header `t,scalar,e1,e2,e3`; the vector slot is expanded
/// along the axis into the three imaginary-unit channels.  Time-domain splines
/// are real-quaternion valued, so only real parts are written.
inline void write_time_csv(std::ostream& os, const GridFunction& g) {
    os << "t,scalar,e1,e2,e3\n";
    const Vec3& m = g.axis.direction();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double uval = g.u[i].real();
        os << fmt_double(g.t(i)) << ',' << fmt_double(g.s[i].real()) << ','
           << fmt_double(uval * m[0]) << ',' << fmt_double(uval * m[1]) << ','
           << fmt_double(uval * m[2]) << '\n';
    }
}

/// Frequency-domain schema: `xi,s_re,s_im,u_re,u_im` in axial coordinates.
inline void write_freq_csv(std::ostream& os, const std::vector<double>& xi,
                           const std::vector<AxialElement>& vals) {
    os << "xi,s_re,s_im,u_re,u_im\n";
    for (std::size_t i = 0; i < xi.size(); ++i) {
        os << fmt_double(xi[i]) << ',' << fmt_double(vals[i].s.real()) << ','
           << fmt_double(vals[i].s.imag()) << ',' << fmt_double(vals[i].u.real()) << ','
           << fmt_double(vals[i].u.imag()) << '\n';
    }
}

inline void write_coeff_csv(std::ostream& os, const CoeffTable& c) {
    os << "k,s_re,s_im,u_re,u_im\n";
    for (int k = -c.N / 2; k < c.N / 2; ++k) {
        const AxialElement v = c.at(k);
        os << k << ',' << fmt_double(v.s.real()) << ',' << fmt_double(v.s.imag()) << ','
           << fmt_double(v.u.real()) << ',' << fmt_double(v.u.imag()) << '\n';
    }
}

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline CsvData read_csv(std::istream& is) {
    CsvData data;
    std::string line;
    if (std::getline(is, line)) {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) data.header.push_back(cell);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        data.rows.push_back(std::move(row));
    }
    return data;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << contents;
}

} // namespace qspline

#endif
