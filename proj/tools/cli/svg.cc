// Copyright 2026 The qram_repair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "config.h"

namespace qrr::cli {

namespace {

const std::array<const char *, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string data_attrs(const YieldReport &r) {
    std::ostringstream out;
    out << "data-d=\"" << r.spec.qec.distance() << "\" data-n=\"" << r.spec.num_logical << "\" data-x=\""
        << r.spec.num_spares << "\" data-p=\"" << fixed(r.spec.fab.error_rate(), 6) << "\" data-yield=\""
        << fixed(r.yield_mean_pct, 2) << "\" data-analytic=\"" << fixed(r.analytic_pct, 2) << "\"";
    return out.str();
}

// Piecewise-linear ramp from indigo (low yield) through teal and green to yellow.
std::string ramp(double yield_pct) {
    static const std::array<std::array<double, 3>, 5> stops{{{49, 17, 110}, {49, 104, 142}, {33, 145, 140},
                                                             {94, 201, 98}, {253, 231, 37}}};
    const double t = std::clamp(yield_pct / 100.0, 0.0, 1.0) * (stops.size() - 1);
    const size_t i = std::min(static_cast<size_t>(t), stops.size() - 2);
    const double f = t - static_cast<double>(i);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]))),
                  static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]))),
                  static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]))));
    return buf;
}

}  // namespace

std::string render_line_chart(const std::vector<YieldReport> &rows, const std::string &title) {
    constexpr double width = 720, height = 440, left = 70, right = 190, top = 50, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    std::set<int> sizes;
    using Key = std::tuple<int, int, double>;
    std::map<Key, std::vector<const YieldReport *>> series;
    for (const auto &r : rows) {
        sizes.insert(r.spec.num_logical);
        series[{r.spec.qec.distance(), r.spec.num_spares, r.spec.fab.error_rate()}].push_back(&r);
    }
    const double lo = sizes.empty() ? 0.0 : std::log2(*sizes.begin());
    const double hi = sizes.empty() ? 1.0 : std::log2(*sizes.rbegin());
    auto sx = [&](int n) {
        return hi > lo ? left + (std::log2(n) - lo) / (hi - lo) * plot_w : left + plot_w / 2;
    };
    auto sy = [&](double y) { return top + (1.0 - y / 100.0) * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
        << "</text>\n";
    for (int tick = 0; tick <= 100; tick += 20) {
        out << "<line x1=\"" << left << "\" x2=\"" << left + plot_w << "\" y1=\"" << sy(tick) << "\" y2=\""
            << sy(tick) << "\" stroke=\"#e0e0e0\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << sy(tick) + 4 << "\" text-anchor=\"end\">" << tick
            << "</text>\n";
    }
    for (int n : sizes) {
        out << "<text x=\"" << sx(n) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">" << n
            << "</text>\n";
    }
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\">Number of logical qubits</text>\n";
    out << "<text transform=\"translate(18," << top + plot_h / 2
        << ") rotate(-90)\" text-anchor=\"middle\">Yield (%)</text>\n";

    size_t idx = 0;
    for (const auto &[key, pts] : series) {
        const auto &[d, x, p] = key;
        const char *color = kPalette[idx % kPalette.size()];
        std::string label = "QEC " + std::to_string(d);
        if (x > 0) {
            label += ", RR(" + std::to_string(x) + ")";
        }
        label += ", p=" + fixed(100.0 * p, 1) + "%";
        out << "<g class=\"series\" data-series=\"" << escape(label) << "\">\n";
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto *r : pts) {
            out << sx(r->spec.num_logical) << "," << sy(r->yield_mean_pct) << " ";
        }
        out << "\"/>\n";
        for (const auto *r : pts) {
            out << "<circle cx=\"" << sx(r->spec.num_logical) << "\" cy=\"" << sy(r->yield_mean_pct)
                << "\" r=\"3.5\" fill=\"" << color << "\" " << data_attrs(*r) << "/>\n";
        }
        const double ly = top + 14 + 18.0 * static_cast<double>(idx);
        out << "<line x1=\"" << left + plot_w + 12 << "\" x2=\"" << left + plot_w + 32 << "\" y1=\"" << ly
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly + 4 << "\">" << escape(label) << "</text>\n";
        out << "</g>\n";
        idx++;
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_heatmap(const std::vector<YieldReport> &rows, const std::string &title) {
    using Panel = std::pair<int, int>;
    std::map<Panel, std::vector<const YieldReport *>> panels;
    std::set<int> sizes;
    std::set<double> rates;
    for (const auto &r : rows) {
        panels[{r.spec.qec.distance(), r.spec.num_spares}].push_back(&r);
        sizes.insert(r.spec.num_logical);
        rates.insert(r.spec.fab.error_rate());
    }
    constexpr double cell_w = 56, cell_h = 30, left = 70, top = 60, gap = 40;
    const double panel_w = cell_w * static_cast<double>(sizes.size());
    const double panel_h = cell_h * static_cast<double>(rates.size());
    const double width = left + (panel_w + gap) * static_cast<double>(std::max<size_t>(panels.size(), 1)) + 20;
    const double height = top + panel_h + 60;

    std::map<int, size_t> col;
    for (int n : sizes) {
        col.emplace(n, col.size());
    }
    std::map<double, size_t> row;
    for (double p : rates) {
        row.emplace(p, row.size());
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
        << "</text>\n";

    size_t pi = 0;
    for (const auto &[key, cells] : panels) {
        const double x0 = left + (panel_w + gap) * static_cast<double>(pi);
        out << "<g class=\"panel\" data-d=\"" << key.first << "\" data-x=\"" << key.second << "\">\n";
        out << "<text x=\"" << x0 + panel_w / 2 << "\" y=\"" << top - 10 << "\" text-anchor=\"middle\">QEC "
            << key.first << ", " << key.second << " redundant</text>\n";
        for (const auto *r : cells) {
            const double x = x0 + cell_w * static_cast<double>(col[r->spec.num_logical]);
            // Highest error rate at the top, as in a conventional y axis.
            const double y =
                top + cell_h * static_cast<double>(rates.size() - 1 - row[r->spec.fab.error_rate()]);
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w << "\" height=\"" << cell_h
                << "\" fill=\"" << ramp(r->yield_mean_pct) << "\" " << data_attrs(*r) << "/>\n";
            out << "<text x=\"" << x + cell_w / 2 << "\" y=\"" << y + cell_h / 2 + 4
                << "\" text-anchor=\"middle\" fill=\"" << (r->yield_mean_pct > 60 ? "black" : "white") << "\">"
                << fixed(r->yield_mean_pct, 1) << "</text>\n";
        }
        for (int n : sizes) {
            out << "<text x=\"" << x0 + cell_w * (static_cast<double>(col[n]) + 0.5) << "\" y=\""
                << top + panel_h + 16 << "\" text-anchor=\"middle\">" << n << "</text>\n";
        }
        if (pi == 0) {
            for (double p : rates) {
                out << "<text x=\"" << x0 - 6 << "\" y=\""
                    << top + cell_h * (static_cast<double>(rates.size() - 1 - row[p]) + 0.5) + 4
                    << "\" text-anchor=\"end\">" << fixed(100.0 * p, 1) << "%</text>\n";
            }
        }
        out << "</g>\n";
        pi++;
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 14
        << "\" text-anchor=\"middle\">Number of logical qubits</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace qrr::cli
