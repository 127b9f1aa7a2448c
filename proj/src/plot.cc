// Copyright 2026 The colorseam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colorseam/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

namespace colorseam {

namespace {

constexpr double kWidth = 720, kHeight = 520;
constexpr double kLeft = 80, kRight = 130, kTop = 40, kBottom = 60;
constexpr int kFitSamples = 21;

const char *kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                          "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

struct Axes {
    double x_lo, x_hi, y_lo, y_hi;  // log10 bounds
    double x(double p) const { return kLeft + (std::log10(p) - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight); }
    double y(double q) const {
        return kHeight - kBottom - (std::log10(q) - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
    }
};

// Ticks at 1, 2 and 5 times each power of ten inside [lo, hi] (log10 units).
std::vector<double> ticks(double lo, double hi) {
    std::vector<double> out;
    for (int e = static_cast<int>(std::floor(lo)); e <= static_cast<int>(std::ceil(hi)); e++) {
        for (double m : {1.0, 2.0, 5.0}) {
            double v = m * std::pow(10.0, e);
            double l = std::log10(v);
            if (l >= lo - 1e-12 && l <= hi + 1e-12) out.push_back(v);
        }
    }
    return out;
}

}  // namespace

void write_plot_csv(const std::vector<ResultRow> &rows, const std::vector<LineFit> &lines, std::ostream &out) {
    out << "series,distance,p,p_fail,stderr\n";
    double p_lo = 0, p_hi = 0;
    bool any = false;
    for (const auto &r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "data,%d,%.17g,%.17g,%.17g\n", r.distance, r.p, r.p_fail, r.std_err);
        out << buf;
        if (r.p > 0) {
            p_lo = any ? std::min(p_lo, r.p) : r.p;
            p_hi = any ? std::max(p_hi, r.p) : r.p;
            any = true;
        }
    }
    if (!any) return;
    for (const auto &l : lines) {
        for (int i = 0; i < kFitSamples; i++) {
            double lp = std::log10(p_lo) + (std::log10(p_hi) - std::log10(p_lo)) * i / (kFitSamples - 1);
            char buf[160];
            std::snprintf(buf, sizeof(buf), "fit,%d,%.17g,%.17g,0\n", l.distance, std::pow(10.0, lp),
                          std::pow(10.0, l.slope * lp + l.intercept));
            out << buf;
        }
    }
}

void write_plot_svg(const std::vector<ResultRow> &rows, const std::vector<LineFit> &lines, std::ostream &out,
                    const std::string &title, double p_star) {
    std::map<int, std::vector<const ResultRow *>> series;
    double px_lo = INFINITY, px_hi = -INFINITY, py_lo = INFINITY, py_hi = -INFINITY;
    for (const auto &r : rows) {
        if (r.p <= 0 || r.p_fail <= 0) continue;
        series[r.distance].push_back(&r);
        px_lo = std::min(px_lo, r.p);
        px_hi = std::max(px_hi, r.p);
        py_lo = std::min(py_lo, std::max(r.p_fail - r.std_err, r.p_fail / 2));
        py_hi = std::max(py_hi, r.p_fail + r.std_err);
    }
    if (series.empty()) {
        px_lo = 0.01;
        px_hi = 0.1;
        py_lo = 0.001;
        py_hi = 1.0;
    }
    Axes ax{std::log10(px_lo) - 0.02, std::log10(px_hi) + 0.02, std::log10(py_lo) - 0.05, std::log10(py_hi) + 0.05};
    if (ax.x_hi - ax.x_lo < 0.1) ax.x_hi = ax.x_lo + 0.1;
    if (ax.y_hi - ax.y_lo < 0.3) ax.y_hi = ax.y_lo + 0.3;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
            << "</text>\n";
    }
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    out << "<defs><clipPath id=\"plot\"><rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0
        << "\" height=\"" << y0 - y1 << "\"/></clipPath></defs>\n";
    for (double t : ticks(ax.x_lo, ax.x_hi)) {
        double x = ax.x(t);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << y1 << "\" x2=\"" << num(x) << "\" y2=\"" << y0
            << "\" stroke=\"#e0e0e0\"/>\n";
        out << "<text x=\"" << num(x) << "\" y=\"" << y0 + 18 << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    }
    for (double t : ticks(ax.y_lo, ax.y_hi)) {
        double y = ax.y(t);
        out << "<line x1=\"" << x0 << "\" y1=\"" << num(y) << "\" x2=\"" << x1 << "\" y2=\"" << num(y)
            << "\" stroke=\"#e0e0e0\"/>\n";
        out << "<text x=\"" << x0 - 6 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
    }
    out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">p</text>\n";
    out << "<text x=\"20\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << (y0 + y1) / 2 << ")\">p_fail</text>\n";

    std::set<int> distances;
    for (const auto &[d, pts] : series) distances.insert(d);
    for (const auto &l : lines) distances.insert(l.distance);
    std::map<int, const char *> color;
    int k = 0;
    for (int d : distances) color[d] = kPalette[k++ % 10];

    out << "<g clip-path=\"url(#plot)\">\n";
    for (const auto &l : lines) {
        double a = ax.x_lo, b = ax.x_hi;
        double pa = std::pow(10.0, a), pb = std::pow(10.0, b);
        double qa = std::pow(10.0, l.slope * a + l.intercept), qb = std::pow(10.0, l.slope * b + l.intercept);
        out << "<line x1=\"" << num(ax.x(pa)) << "\" y1=\"" << num(ax.y(qa)) << "\" x2=\"" << num(ax.x(pb))
            << "\" y2=\"" << num(ax.y(qb)) << "\" stroke=\"" << color[l.distance]
            << "\" stroke-dasharray=\"5,4\"/>\n";
    }
    for (const auto &[d, pts] : series) {
        for (const ResultRow *r : pts) {
            double x = ax.x(r->p), y = ax.y(r->p_fail);
            double lo = std::max(r->p_fail - r->std_err, std::pow(10.0, ax.y_lo));
            out << "<line x1=\"" << num(x) << "\" y1=\"" << num(ax.y(lo)) << "\" x2=\"" << num(x) << "\" y2=\""
                << num(ax.y(r->p_fail + r->std_err)) << "\" stroke=\"" << color[d] << "\"/>\n";
            out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << color[d] << "\"/>\n";
        }
    }
    if (p_star > 0) {
        double x = ax.x(p_star);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << y1 << "\" x2=\"" << num(x) << "\" y2=\"" << y0
            << "\" stroke=\"black\" stroke-dasharray=\"2,3\"/>\n";
    }
    out << "</g>\n";
    if (p_star > 0) {
        out << "<text x=\"" << num(ax.x(p_star) + 4) << "\" y=\"" << y1 + 14 << "\">p* = " << num(p_star) << "</text>\n";
    }
    int row = 0;
    for (int d : distances) {
        double y = y1 + 10 + 18 * row++;
        out << "<circle cx=\"" << x1 + 20 << "\" cy=\"" << y << "\" r=\"4\" fill=\"" << color[d] << "\"/>\n";
        out << "<text x=\"" << x1 + 30 << "\" y=\"" << y + 4 << "\">d = " << d << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace colorseam
