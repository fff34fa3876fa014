#include "cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace finkin::cli {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
constexpr int kLeft = 80;
constexpr int kRight = 20;
constexpr int kTop = 36;
constexpr int kBottom = 48;

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    void pad() {
        if (!(lo <= hi)) {
            lo = -1.0;
            hi = 1.0;
            return;
        }
        double span = hi - lo;
        if (span == 0.0) span = std::abs(lo) > 0.0 ? std::abs(lo) : 1.0;
        lo -= 0.05 * span;
        hi += 0.05 * span;
    }

    void widen_to(double span) {
        const double mid = 0.5 * (lo + hi);
        lo = mid - 0.5 * span;
        hi = mid + 0.5 * span;
    }
};

}  // namespace

std::string SvgFigure::render() const {
    const int height = panel_height_ * static_cast<int>(std::max<std::size_t>(panels_.size(), 1));
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width_) +
           " " + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width_) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";

    for (std::size_t pi = 0; pi < panels_.size(); ++pi) {
        const PlotPanel& panel = panels_[pi];
        const double top = static_cast<double>(pi) * panel_height_;
        const double plot_x0 = kLeft;
        const double plot_x1 = width_ - kRight;
        const double plot_y0 = top + kTop;
        const double plot_y1 = top + panel_height_ - kBottom;
        const double plot_w = plot_x1 - plot_x0;
        const double plot_h = plot_y1 - plot_y0;

        Range xr, yr;
        for (const auto& s : panel.series) {
            for (double v : s.x) xr.add(v);
            for (double v : s.y) yr.add(v);
        }
        xr.pad();
        yr.pad();
        if (panel.equal_aspect) {
            const double per_px = std::max((xr.hi - xr.lo) / plot_w, (yr.hi - yr.lo) / plot_h);
            xr.widen_to(per_px * plot_w);
            yr.widen_to(per_px * plot_h);
        }
        auto px = [&](double v) { return plot_x0 + (v - xr.lo) / (xr.hi - xr.lo) * plot_w; };
        auto py = [&](double v) { return plot_y1 - (v - yr.lo) / (yr.hi - yr.lo) * plot_h; };

        out += "<g class=\"panel\">\n";
        out += "<text x=\"" + fmt("%.1f", 0.5 * (plot_x0 + plot_x1)) + "\" y=\"" +
               fmt("%.1f", top + 22) + "\" text-anchor=\"middle\" font-size=\"14\">" +
               escape(panel.title) + "</text>\n";
        out += "<rect x=\"" + fmt("%.1f", plot_x0) + "\" y=\"" + fmt("%.1f", plot_y0) +
               "\" width=\"" + fmt("%.1f", plot_w) + "\" height=\"" + fmt("%.1f", plot_h) +
               "\" fill=\"none\" stroke=\"black\"/>\n";

        for (int k = 0; k <= 4; ++k) {
            const double xv = xr.lo + (xr.hi - xr.lo) * k / 4.0;
            const double yv = yr.lo + (yr.hi - yr.lo) * k / 4.0;
            const double gx = px(xv), gy = py(yv);
            out += "<line x1=\"" + fmt("%.2f", gx) + "\" y1=\"" + fmt("%.2f", plot_y1) + "\" x2=\"" +
                   fmt("%.2f", gx) + "\" y2=\"" + fmt("%.2f", plot_y0) +
                   "\" stroke=\"#dddddd\"/>\n";
            out += "<line x1=\"" + fmt("%.2f", plot_x0) + "\" y1=\"" + fmt("%.2f", gy) + "\" x2=\"" +
                   fmt("%.2f", plot_x1) + "\" y2=\"" + fmt("%.2f", gy) + "\" stroke=\"#dddddd\"/>\n";
            out += "<text x=\"" + fmt("%.2f", gx) + "\" y=\"" + fmt("%.2f", plot_y1 + 16) +
                   "\" text-anchor=\"middle\">" + fmt("%.4g", xv) + "</text>\n";
            out += "<text x=\"" + fmt("%.2f", plot_x0 - 6) + "\" y=\"" + fmt("%.2f", gy + 4) +
                   "\" text-anchor=\"end\">" + fmt("%.4g", yv) + "</text>\n";
        }
        out += "<text x=\"" + fmt("%.1f", 0.5 * (plot_x0 + plot_x1)) + "\" y=\"" +
               fmt("%.1f", plot_y1 + 36) + "\" text-anchor=\"middle\">" + escape(panel.x_label) +
               "</text>\n";
        const double label_y = 0.5 * (plot_y0 + plot_y1);
        out += "<text x=\"16\" y=\"" + fmt("%.1f", label_y) +
               "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + fmt("%.1f", label_y) +
               ")\">" + escape(panel.y_label) + "</text>\n";

        for (std::size_t si = 0; si < panel.series.size(); ++si) {
            const PlotSeries& s = panel.series[si];
            const std::size_t n = std::min(s.x.size(), s.y.size());
            out += "<polyline fill=\"none\" stroke=\"" +
                   std::string(kPalette[si % kPalette.size()]) + "\" stroke-width=\"1.5\"";
            if (s.dashed) out += " stroke-dasharray=\"6 4\"";
            out += " points=\"";
            for (std::size_t i = 0; i < n; ++i) {
                if (i) out += ' ';
                out += fmt("%.2f", px(s.x[i])) + "," + fmt("%.2f", py(s.y[i]));
            }
            out += "\"><title>" + escape(s.name) + "</title></polyline>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace finkin::cli
