#include "uavgame/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace uavgame {

namespace {

constexpr int kWidth = 720;
constexpr int kPanelHeight = 300;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 46;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void pad() {
        if (!(lo < hi)) {
            lo -= 1.0;
            hi += 1.0;
        } else {
            const double d = 0.05 * (hi - lo);
            lo -= d;
            hi += d;
        }
    }
    double frac(double v) const { return (v - lo) / (hi - lo); }
};

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

void render_panel(std::string& out, const PlotPanel& panel, int y_off) {
    Range xr, yr;
    for (const auto& s : panel.series) {
        for (double v : s.x) xr.include(v);
        for (double v : s.y) yr.include(v);
    }
    xr.pad();
    yr.pad();

    const int plot_w = kWidth - kMarginLeft - kMarginRight;
    const int plot_h = kPanelHeight - kMarginTop - kMarginBottom;
    auto px = [&](double v) { return kMarginLeft + xr.frac(v) * plot_w; };
    auto py = [&](double v) { return y_off + kMarginTop + (1.0 - yr.frac(v)) * plot_h; };

    out += "<text x=\"" + std::to_string(kMarginLeft) + "\" y=\"" +
           std::to_string(y_off + 18) + "\" font-size=\"14\" font-family=\"sans-serif\">" +
           escape(panel.title) + "</text>\n";

    // frame and ticks
    out += "<rect x=\"" + std::to_string(kMarginLeft) + "\" y=\"" +
           std::to_string(y_off + kMarginTop) + "\" width=\"" + std::to_string(plot_w) +
           "\" height=\"" + std::to_string(plot_h) +
           "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double fx = xr.lo + (xr.hi - xr.lo) * k / 4;
        const double fy = yr.lo + (yr.hi - yr.lo) * k / 4;
        out += "<line x1=\"" + num(px(fx)) + "\" y1=\"" +
               std::to_string(y_off + kMarginTop + plot_h) + "\" x2=\"" + num(px(fx)) +
               "\" y2=\"" + std::to_string(y_off + kMarginTop + plot_h + 4) +
               "\" stroke=\"#333\"/>\n";
        out += "<text x=\"" + num(px(fx)) + "\" y=\"" +
               std::to_string(y_off + kMarginTop + plot_h + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
               num(fx) + "</text>\n";
        out += "<text x=\"" + std::to_string(kMarginLeft - 6) + "\" y=\"" + num(py(fy) + 4) +
               "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">" + num(fy) +
               "</text>\n";
    }
    out += "<text x=\"" + std::to_string(kMarginLeft + plot_w / 2) + "\" y=\"" +
           std::to_string(y_off + kPanelHeight - 8) +
           "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
           escape(panel.x_label) + "</text>\n";
    out += "<text x=\"16\" y=\"" + std::to_string(y_off + kMarginTop + plot_h / 2) +
           "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 16 " +
           std::to_string(y_off + kMarginTop + plot_h / 2) + ")\">" + escape(panel.y_label) +
           "</text>\n";

    int legend_x = kMarginLeft + 8;
    for (const auto& s : panel.series) {
        if (s.x.empty()) continue;
        out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            out += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
        }
        out += "\"/>\n";
        out += "<line x1=\"" + std::to_string(legend_x) + "\" y1=\"" +
               std::to_string(y_off + kMarginTop + 12) + "\" x2=\"" +
               std::to_string(legend_x + 18) + "\" y2=\"" +
               std::to_string(y_off + kMarginTop + 12) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + std::to_string(legend_x + 22) + "\" y=\"" +
               std::to_string(y_off + kMarginTop + 16) +
               "\" font-size=\"11\" font-family=\"sans-serif\">" + escape(s.label) +
               "</text>\n";
        legend_x += 30 + 8 * static_cast<int>(s.label.size());
    }
}

}  // namespace

std::string render_svg(const std::vector<PlotPanel>& panels, const std::string& description) {
    const int height = kPanelHeight * static_cast<int>(panels.size());
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(kWidth) + "\" height=\"" + std::to_string(height) +
                      "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
                      std::to_string(height) + "\">\n<desc>" + escape(description) +
                      "</desc>\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    int y = 0;
    for (const auto& p : panels) {
        render_panel(out, p, y);
        y += kPanelHeight;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace uavgame
