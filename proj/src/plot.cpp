#include "netrobust/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace netrobust {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double metric_value(const SweepRow& r, MetricsOver m) {
    switch (m) {
        case MetricsOver::All: return r.frac_all;
        case MetricsOver::Participants: return r.frac_participants;
        case MetricsOver::NonParticipants: return r.frac_nonparticipants;
    }
    return 0.0;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string emit_plot_svg(const std::vector<SweepRow>& rows, const PlotSpec& spec) {
    if (rows.empty()) throw std::invalid_argument("nothing to plot: no rows");

    // Prefer the appended mean rows; otherwise aggregate data rows.
    std::vector<SweepRow> means;
    for (const SweepRow& r : rows)
        if (r.kind == SweepRow::Kind::Mean) means.push_back(r);
    if (means.empty()) {
        std::map<int, std::pair<SweepRow, int>> by_point;
        for (const SweepRow& r : rows) {
            if (r.kind != SweepRow::Kind::Data) continue;
            auto [it, fresh] = by_point.try_emplace(r.point, std::make_pair(r, 0));
            if (!fresh) {
                it->second.first.frac_all += r.frac_all;
                it->second.first.frac_participants += r.frac_participants;
                it->second.first.frac_nonparticipants += r.frac_nonparticipants;
            }
            ++it->second.second;
        }
        for (auto& [point, acc] : by_point) {
            acc.first.frac_all /= acc.second;
            acc.first.frac_participants /= acc.second;
            acc.first.frac_nonparticipants /= acc.second;
            means.push_back(acc.first);
        }
    }
    if (means.empty()) throw std::invalid_argument("nothing to plot: no data rows");

    // Series keyed by (protocol, m, q, metric); points sorted by fraction.
    using Key = std::tuple<int, int, double, int>;
    std::map<Key, std::vector<std::pair<double, double>>> series;
    for (const SweepRow& r : means)
        for (MetricsOver metric : spec.metrics)
            series[{static_cast<int>(r.protocol), r.m, r.q, static_cast<int>(metric)}]
                .emplace_back(r.fraction * 100.0, metric_value(r, metric));
    for (auto& [key, pts] : series) std::sort(pts.begin(), pts.end());

    double x_max = 0.0;
    for (const auto& [key, pts] : series)
        for (const auto& [x, y] : pts) x_max = std::max(x_max, x);
    if (x_max <= 0.0) x_max = 1.0;

    const double width = 860, height = 560;
    const double left = 70, right = width - 230, top = 50, bottom = height - 60;
    auto sx = [&](double x) { return left + (x / x_max) * (right - left); };
    auto sy = [&](double y) { return bottom - y * (bottom - top); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (left + (right - left) / 2) << "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << xml_escape(spec.title) << "</text>\n";

    // Axes
    svg << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n";

    // y ticks every 0.1
    for (int i = 0; i <= 10; ++i) {
        const double y = i / 10.0;
        svg << "<line x1=\"" << (left - 4) << "\" y1=\"" << sy(y) << "\" x2=\"" << right
            << "\" y2=\"" << sy(y) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << (left - 8) << "\" y=\"" << (sy(y) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(y)
            << "</text>\n";
    }
    // x ticks at the distinct corruption percentages
    std::vector<double> xticks;
    for (const auto& [key, pts] : series)
        for (const auto& [x, y] : pts) xticks.push_back(x);
    std::sort(xticks.begin(), xticks.end());
    xticks.erase(std::unique(xticks.begin(), xticks.end()), xticks.end());
    for (double x : xticks) {
        svg << "<line x1=\"" << sx(x) << "\" y1=\"" << bottom << "\" x2=\"" << sx(x)
            << "\" y2=\"" << (bottom + 4) << "\" stroke=\"black\"/>\n";
        char label[32];
        std::snprintf(label, sizeof(label), "%g", x);
        svg << "<text x=\"" << sx(x) << "\" y=\"" << (bottom + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << label
            << "</text>\n";
    }
    svg << "<text x=\"" << (left + (right - left) / 2) << "\" y=\"" << (height - 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xml_escape(spec.x_label) << "</text>\n";
    svg << "<text x=\"20\" y=\"" << (top + (bottom - top) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 "
        << (top + (bottom - top) / 2) << ")\">" << xml_escape(spec.y_label) << "</text>\n";

    // Curves and legend
    int idx = 0;
    for (const auto& [key, pts] : series) {
        const auto& [proto, m, q, metric] = key;
        const char* color = kPalette[idx % 10];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : pts) svg << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
        svg << "\"/>\n";
        for (const auto& [x, y] : pts)
            svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";

        std::ostringstream label;
        label << protocol_name(static_cast<ProtocolKind>(proto)) << " m=" << m << " q=" << q
              << ' ' << metric_name(static_cast<MetricsOver>(metric));
        const double ly = top + 16 + 18 * idx;
        svg << "<line x1=\"" << (right + 12) << "\" y1=\"" << ly << "\" x2=\"" << (right + 36)
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << (right + 42) << "\" y=\"" << (ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(label.str())
            << "</text>\n";
        ++idx;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace netrobust
