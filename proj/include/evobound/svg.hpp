#pragma once

#include <string>
#include <vector>

namespace evobound {

/// One polyline on an SVG chart.
struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "red";
    bool dashed = false;
    std::string name;
};

/// Minimal self-contained line chart: axes, ticks, legend, one polyline per
/// series. Decoration only; nothing downstream parses these files.
std::string render_svg_chart(const std::vector<SvgSeries>& series,
                             const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label);

/// Renders and writes; throws std::runtime_error on I/O failure.
void write_svg_chart(const std::string& path, const std::vector<SvgSeries>& series,
                     const std::string& title, const std::string& x_label,
                     const std::string& y_label);

}  // namespace evobound
