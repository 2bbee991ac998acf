#include "spreadlab/plot.hpp"

#include <algorithm>
#include <cstdio>

#include "spreadlab/io.hpp"

namespace spreadlab {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 48.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string render_csv(const ScanTable& table) {
    std::string out = "x,f\n";
    for (const auto& row : table.rows) out += format_real(row.x) + "," + format_real(row.f) + "\n";
    return out;
}

std::string render_svg(const ScanTable& table, double threshold, const IntervalSet& markers) {
    const double x_lo = table.rows.empty() ? 0.0 : table.rows.front().x;
    const double x_hi = table.rows.empty() ? 1.0 : table.rows.back().x;
    double y_lo = threshold;
    double y_hi = threshold;
    for (const auto& row : table.rows) {
        y_lo = std::min(y_lo, row.f);
        y_hi = std::max(y_hi, row.f);
    }
    y_hi += 0.03;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;

    auto px = [&](double x) { return kMargin + (x - x_lo) / x_span * (kWidth - 2 * kMargin); };
    auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) + "\" height=\"" +
           fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(kHeight) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
           "\" fill=\"white\"/>\n";
    // Axes.
    svg += "  <line x1=\"" + fixed(kMargin) + "\" y1=\"" + fixed(kHeight - kMargin) + "\" x2=\"" +
           fixed(kWidth - kMargin) + "\" y2=\"" + fixed(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
    svg += "  <line x1=\"" + fixed(kMargin) + "\" y1=\"" + fixed(kMargin) + "\" x2=\"" + fixed(kMargin) +
           "\" y2=\"" + fixed(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
    svg += "  <text x=\"" + fixed(kWidth / 2) + "\" y=\"" + fixed(kHeight - 12) +
           "\" text-anchor=\"middle\" font-size=\"14\">x = lambda_max / n (eta = " + format_real(table.eta) +
           ")</text>\n";
    svg += "  <text x=\"" + fixed(kMargin) + "\" y=\"" + fixed(kMargin - 10) + "\" font-size=\"12\">" +
           fixed(y_hi) + "</text>\n";
    svg += "  <text x=\"" + fixed(kMargin) + "\" y=\"" + fixed(kHeight - kMargin + 16) + "\" font-size=\"12\">" +
           fixed(x_lo) + "</text>\n";
    svg += "  <text x=\"" + fixed(kWidth - kMargin) + "\" y=\"" + fixed(kHeight - kMargin + 16) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fixed(x_hi) + "</text>\n";

    svg += "  <line id=\"threshold\" x1=\"" + fixed(px(x_lo)) + "\" y1=\"" + fixed(py(threshold)) + "\" x2=\"" +
           fixed(px(x_hi)) + "\" y2=\"" + fixed(py(threshold)) + "\" stroke=\"orange\" stroke-width=\"2\"/>\n";

    svg += "  <polyline id=\"curve\" fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        if (k) svg += ' ';
        svg += fixed(px(table.rows[k].x)) + "," + fixed(py(table.rows[k].f));
    }
    svg += "\"/>\n";

    for (const auto& iv : markers.intervals) {
        for (double x : {iv.lo, iv.hi}) {
            if (x < x_lo || x > x_hi) continue;
            svg += "  <line class=\"marker\" x1=\"" + fixed(px(x)) + "\" y1=\"" + fixed(py(y_lo)) + "\" x2=\"" +
                   fixed(px(x)) + "\" y2=\"" + fixed(py(threshold)) +
                   "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace spreadlab
