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

#include "colorseam/threshold_fit.h"

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "colorseam/noise.h"
#include "json.hpp"

namespace colorseam {

std::vector<ResultRow> select_rows(const std::vector<ResultRow> &rows, const std::string &decoder,
                                   double lambda) {
    std::vector<ResultRow> out;
    for (const auto &r : rows) {
        if (r.decoder == decoder && r.lambda == lambda) out.push_back(r);
    }
    return out;
}

std::vector<LineFit> fit_lines(const std::vector<ResultRow> &rows, const FitWindow &window,
                               std::vector<std::string> *warnings) {
    std::map<int, std::vector<std::pair<double, double>>> by_distance;
    std::set<std::pair<int, double>> seen;
    for (const auto &r : rows) {
        if (r.distance < window.d_min || r.distance > window.d_max) continue;
        if (r.p < window.p_lo || r.p > window.p_hi) continue;
        if (!seen.insert({r.distance, r.p}).second) {
            throw std::invalid_argument("duplicate rows for d=" + std::to_string(r.distance) +
                                        " p=" + std::to_string(r.p));
        }
        auto &pts = by_distance[r.distance];
        if (r.failures > 0 && r.p > 0.0) pts.emplace_back(std::log10(r.p), std::log10(r.p_fail));
    }

    std::vector<LineFit> lines;
    for (const auto &[d, pts] : by_distance) {
        if (pts.size() < 2) {
            if (warnings) warnings->push_back("d=" + std::to_string(d) + " dropped: fewer than 2 usable points");
            continue;
        }
        const double n = static_cast<double>(pts.size());
        double mx = 0.0, my = 0.0;
        for (const auto &[x, y] : pts) {
            mx += x;
            my += y;
        }
        mx /= n;
        my /= n;
        double sxx = 0.0, sxy = 0.0;
        for (const auto &[x, y] : pts) {
            sxx += (x - mx) * (x - mx);
            sxy += (x - mx) * (y - my);
        }
        if (sxx == 0.0) {
            if (warnings) warnings->push_back("d=" + std::to_string(d) + " dropped: all points share one p");
            continue;
        }
        LineFit line;
        line.distance = d;
        line.slope = sxy / sxx;
        line.intercept = my - line.slope * mx;
        line.points = static_cast<int>(pts.size());
        lines.push_back(line);
    }
    if (lines.size() < 2) throw std::runtime_error("fewer than two distances have usable points in the fit window");
    return lines;
}

ThresholdEstimate estimate_threshold(const std::vector<LineFit> &lines, const FitWindow *window) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (window) {
        lo = std::log10(window->p_lo / 2);
        hi = std::log10(window->p_hi * 2);
    }
    double sum = 0.0;
    int pairs = 0;
    for (size_t i = 0; i < lines.size(); i++) {
        for (size_t j = i + 1; j < lines.size(); j++) {
            double da = lines[i].slope - lines[j].slope;
            if (std::fabs(da) < 1e-6) continue;
            double x = (lines[j].intercept - lines[i].intercept) / da;
            if (x < lo || x > hi) continue;
            sum += x;
            pairs++;
        }
    }
    if (pairs == 0) throw std::runtime_error("no usable intersection between fitted lines");
    return {std::pow(10.0, sum / pairs), 0.0, pairs};
}

ThresholdEstimate bootstrap_threshold(const std::vector<ResultRow> &rows, const FitWindow &window,
                                      int replicates, uint64_t seed, int *failed) {
    if (replicates < 50) throw std::invalid_argument("bootstrap needs at least 50 replicates");
    std::vector<double> estimates;
    int broken = 0;
    for (int r = 0; r < replicates; r++) {
        std::mt19937_64 rng(mix64(seed ^ mix64(static_cast<uint64_t>(r) + 1)));
        std::vector<ResultRow> sample = rows;
        for (auto &row : sample) {
            std::binomial_distribution<uint64_t> draw(row.trials, row.p_fail);
            row = make_row(row.decoder, row.distance, row.lambda, row.p, row.trials, draw(rng), row.seed);
        }
        try {
            estimates.push_back(estimate_threshold(fit_lines(sample, window), &window).p_star);
        } catch (const std::runtime_error &) {
            broken++;
        }
    }
    if (failed) *failed = broken;
    if (estimates.empty()) throw std::runtime_error("every bootstrap replicate failed to fit");
    double mean = 0.0;
    for (double x : estimates) mean += x;
    mean /= static_cast<double>(estimates.size());
    double var = 0.0;
    for (double x : estimates) var += (x - mean) * (x - mean);
    if (estimates.size() > 1) var /= static_cast<double>(estimates.size() - 1);
    return {mean, std::sqrt(var), static_cast<int>(estimates.size())};
}

FitResult fit_threshold(const std::vector<ResultRow> &rows, const FitWindow &window, int replicates,
                        uint64_t seed) {
    FitResult fit;
    fit.window = window;
    fit.lines = fit_lines(rows, window, &fit.warnings);
    for (const auto &line : fit.lines) fit.distances.push_back(line.distance);
    fit.p_star = estimate_threshold(fit.lines, &window).p_star;
    ThresholdEstimate boot = bootstrap_threshold(rows, window, replicates, seed, &fit.failed_replicates);
    fit.sigma = boot.sigma;
    fit.bootstrap_mean = boot.p_star;
    fit.replicates = replicates;
    fit.seed = seed;
    fit.method = "ols-log10-pairwise-intersection-mean; sigma: parametric binomial bootstrap";
    return fit;
}

std::string fit_to_json(const FitResult &fit) {
    nlohmann::ordered_json j;
    j["p_star"] = fit.p_star;
    j["sigma"] = fit.sigma;
    j["bootstrap_mean"] = fit.bootstrap_mean;
    j["window"] = {{"p_lo", fit.window.p_lo},
                   {"p_hi", fit.window.p_hi},
                   {"d_min", fit.window.d_min},
                   {"d_max", fit.window.d_max}};
    j["distances"] = fit.distances;
    auto lines = nlohmann::ordered_json::array();
    for (const auto &l : fit.lines) {
        lines.push_back({{"distance", l.distance}, {"a", l.slope}, {"b", l.intercept}, {"points", l.points}});
    }
    j["lines"] = lines;
    j["method"] = fit.method;
    j["replicates"] = fit.replicates;
    j["failed_replicates"] = fit.failed_replicates;
    j["seed"] = fit.seed;
    j["warnings"] = fit.warnings;
    j["version"] = COLORSEAM_VERSION;
    return j.dump(2);
}

}  // namespace colorseam
