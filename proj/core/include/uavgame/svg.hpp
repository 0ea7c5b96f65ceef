#pragma once

#include <string>
#include <vector>

namespace uavgame {

/// One polyline on a plot panel.
struct Series {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

/// A labelled axis pair with its series; panels stack vertically.
struct PlotPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// Render stacked line-plot panels as one standalone SVG document (no
/// external references). `description` is embedded in a <desc> element for
/// provenance.
std::string render_svg(const std::vector<PlotPanel>& panels, const std::string& description);

}  // namespace uavgame
