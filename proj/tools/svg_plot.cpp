// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace triplewalk::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

/// 1, 2 or 5 times a power of ten, giving roughly five ticks.
double tick_step(double span) {
    if (!(span > 0.0)) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0})
        if (raw <= m * mag) return m * mag;
    return 10.0 * mag;
}

}  // namespace

std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       std::span<const double> x, const std::vector<Series>& series) {
    const double x_min = x.empty() ? 0.0 : x.front();
    double x_max = x.empty() ? 1.0 : x.back();
    if (x_max <= x_min) x_max = x_min + 1.0;
    const double y_min = 0.0;
    const double y_max = 1.0;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + (v - x_min) / (x_max - x_min) * pw; };
    auto py = [&](double v) { return kTop + (1.0 - (v - y_min) / (y_max - y_min)) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
       << "</text>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double xs = tick_step(x_max - x_min);
    for (double t = std::ceil(x_min / xs) * xs; t <= x_max + 1e-9 * xs; t += xs) {
        os << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(px(t)) << "\" y2=\""
           << num(kTop + ph + 5) << "\" stroke=\"black\"/>";
        os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">" << t
           << "</text>\n";
    }
    for (int k = 0; k <= 5; ++k) {
        const double v = y_min + k * (y_max - y_min) / 5.0;
        os << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(v)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
           << num(py(v)) << "\" stroke=\"black\"/>";
        os << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(v) + 4) << "\" text-anchor=\"end\">" << v
           << "</text>\n";
    }
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 15) << "\" text-anchor=\"middle\">"
       << escape(x_label) << "</text>\n";
    os << "<text transform=\"translate(18," << num(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
       << escape(y_label) << "</text>\n";

    double legend_y = kTop + 16;
    for (const Series& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.2\" points=\"";
        const std::size_t n = std::min(x.size(), s.y.size());
        for (std::size_t i = 0; i < n; ++i) os << num(px(x[i])) << ',' << num(py(std::clamp(s.y[i], y_min, y_max))) << ' ';
        os << "\"/>\n";
        os << "<line x1=\"" << num(kLeft + pw - 110) << "\" y1=\"" << num(legend_y) << "\" x2=\"" << num(kLeft + pw - 85)
           << "\" y2=\"" << num(legend_y) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>";
        os << "<text x=\"" << num(kLeft + pw - 80) << "\" y=\"" << num(legend_y + 4) << "\">" << escape(s.label)
           << "</text>\n";
        legend_y += 18;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace triplewalk::cli
