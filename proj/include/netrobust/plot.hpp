#pragma once

#include <string>
#include <vector>

#include "netrobust/experiment.hpp"

namespace netrobust {

struct PlotSpec {
    std::string title;
    std::string x_label = "corrupted nodes (%)";
    std::string y_label = "fraction of honest nodes in largest component";
    std::vector<MetricsOver> metrics = {MetricsOver::All};
};

// Self-contained SVG line chart: one curve per (protocol, m, q, metric)
// series, x = corruption percentage, y = per-point mean of the metric.
// Data rows are averaged on the fly when no mean rows are present.
// Throws std::invalid_argument on empty input.
std::string emit_plot_svg(const std::vector<SweepRow>& rows, const PlotSpec& spec);

}  // namespace netrobust
