#include "evobound/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace evobound {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr double kMarginLeft = 72;
constexpr double kMarginRight = 24;
constexpr double kMarginTop = 44;
constexpr double kMarginBottom = 56;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

std::string render_svg_chart(const std::vector<SvgSeries>& series,
                             const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label) {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) {
            throw std::invalid_argument("render_svg_chart: series x/y length mismatch");
        }
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_min = std::min(y_min, s.y[i]);
            y_max = std::max(y_max, s.y[i]);
        }
    }
    if (!(x_min <= x_max)) {  // no points at all
        x_min = 0;
        x_max = 1;
        y_min = 0;
        y_max = 1;
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;
    y_max += 0.05 * (y_max - y_min);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) {
        return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2.0) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // axes
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) + "\" x2=\"" +
           num(kMarginLeft) + "\" y2=\"" + num(kMarginTop + plot_h) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop + plot_h) + "\" x2=\"" +
           num(kMarginLeft + plot_w) + "\" y2=\"" + num(kMarginTop + plot_h) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / n_ticks;
        const double fy = y_min + (y_max - y_min) * i / n_ticks;
        const double px = sx(fx);
        const double py = sy(fy);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kMarginTop + plot_h) + "\" x2=\"" +
               num(px) + "\" y2=\"" + num(kMarginTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px) + "\" y=\"" + num(kMarginTop + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(fx) + "</text>\n";
        svg += "<line x1=\"" + num(kMarginLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
               num(kMarginLeft) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft - 8) + "\" y=\"" + num(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               tick_label(fy) + "</text>\n";
    }

    svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";
    svg += "<text x=\"18\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num(kMarginTop + plot_h / 2) + ")\">" + y_label +
           "</text>\n";

    double legend_y = kMarginTop + 14;
    for (const auto& s : series) {
        std::string poly = "<polyline fill=\"none\" stroke=\"" + s.color +
                           "\" stroke-width=\"1.8\"";
        if (s.dashed) poly += " stroke-dasharray=\"6,4\"";
        poly += " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) poly += ' ';
            poly += num(sx(s.x[i])) + "," + num(sy(s.y[i]));
        }
        poly += "\"/>\n";
        svg += poly;

        if (!s.name.empty()) {
            const double lx = kMarginLeft + 16;
            svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(legend_y) + "\" x2=\"" +
                   num(lx + 28) + "\" y2=\"" + num(legend_y) + "\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.8\"" +
                   (s.dashed ? std::string(" stroke-dasharray=\"6,4\"") : std::string()) + "/>\n";
            svg += "<text x=\"" + num(lx + 34) + "\" y=\"" + num(legend_y + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + s.name + "</text>\n";
            legend_y += 18;
        }
    }

    svg += "</svg>\n";
    return svg;
}

void write_svg_chart(const std::string& path, const std::vector<SvgSeries>& series,
                     const std::string& title, const std::string& x_label,
                     const std::string& y_label) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open SVG output file: " + path);
    }
    out << render_svg_chart(series, title, x_label, y_label);
    if (!out) {
        throw std::runtime_error("failed writing SVG output file: " + path);
    }
}

}  // namespace evobound
