#pragma once

#include <string>
#include <vector>

namespace finkin::cli {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

struct PlotPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    bool equal_aspect = false;
};

/// Static line-plot figure. Panels stack vertically; each auto-fits its axes to
/// the data with a 5% margin. Output carries no timestamps or random ids.
class SvgFigure {
public:
    SvgFigure(int width, int panel_height) : width_(width), panel_height_(panel_height) {}

    void add_panel(PlotPanel panel) { panels_.push_back(std::move(panel)); }

    std::string render() const;

private:
    int width_;
    int panel_height_;
    std::vector<PlotPanel> panels_;
};

}  // namespace finkin::cli
