#ifndef QSPLINE_TOOLS_SVGPLOT_HPP
#define QSPLINE_TOOLS_SVGPLOT_HPP

// Minimal SVG polyline plotting for the optional --plots output.  CSV is the
// real data contract; these are quick-look images.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

namespace qsplot {

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x, y;
};

inline void write_svg(const std::string& path, const std::string& title,
                      const std::vector<Series>& series, int width = 720, int height = 420) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) {
            if (!std::isfinite(v)) continue;
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!(xmax > xmin)) { xmin = 0; xmax = 1; }
    if (!(ymax > ymin)) { ymin = 0; ymax = 1; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const int ml = 60, mr = 15, mt = 35, mb = 40;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto X = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * pw; };
    const auto Y = [&](double v) { return mt + ph - (v - ymin) / (ymax - ymin) * ph; };

    std::ofstream f(path);
    f << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
      << "' viewBox='0 0 " << width << ' ' << height << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << width / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
      << "</text>\n";
    // axes box and a few ticks
    f << "<rect x='" << ml << "' y='" << mt << "' width='" << pw << "' height='" << ph
      << "' fill='none' stroke='black' stroke-width='1'/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        const double yv = ymin + (ymax - ymin) * i / 4.0;
        f << "<text x='" << X(xv) << "' y='" << height - 18
          << "' text-anchor='middle' font-size='11'>" << xv << "</text>\n";
        f << "<text x='" << ml - 6 << "' y='" << Y(yv) + 4
          << "' text-anchor='end' font-size='11'>" << yv << "</text>\n";
    }
    if (ymin < 0.0 && ymax > 0.0)
        f << "<line x1='" << ml << "' y1='" << Y(0.0) << "' x2='" << ml + pw << "' y2='"
          << Y(0.0) << "' stroke='#bbbbbb' stroke-width='1'/>\n";

    int li = 0;
    for (const auto& s : series) {
        f << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.3' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            f << X(s.x[i]) << ',' << Y(s.y[i]) << ' ';
        }
        f << "'/>\n";
        f << "<text x='" << ml + 8 << "' y='" << mt + 16 + 16 * li << "' font-size='12' fill='"
          << s.color << "'>" << s.label << "</text>\n";
        ++li;
    }
    f << "</svg>\n";
}

} // namespace qsplot

#endif
