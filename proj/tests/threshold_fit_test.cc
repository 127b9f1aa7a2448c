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
#include <random>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace colorseam;

namespace {

// Noise-free rows following p_fail = amp * (p / p_star)^(d / 2).
std::vector<ResultRow> power_law(const std::vector<int> &distances, const std::vector<double> &ps, double amp,
                                 double p_star, uint64_t trials = 100000000) {
    std::vector<ResultRow> rows;
    for (int d : distances) {
        for (double p : ps) {
            ResultRow r;
            r.decoder = "mps";
            r.distance = d;
            r.p = p;
            r.trials = trials;
            r.p_fail = amp * std::pow(p / p_star, d / 2.0);
            r.failures = static_cast<uint64_t>(std::llround(r.p_fail * static_cast<double>(trials)));
            r.std_err = std::sqrt(r.p_fail * (1 - r.p_fail) / static_cast<double>(trials));
            rows.push_back(r);
        }
    }
    return rows;
}

const std::vector<double> kGrid = {0.08, 0.085, 0.09, 0.095, 0.1, 0.105, 0.11, 0.115, 0.12};

}  // namespace

TEST(threshold_fit, RecoversExactPowerLaw) {
    auto rows = power_law({3, 5, 7, 9}, kGrid, 0.5, 0.1);
    auto lines = fit_lines(rows, {0.08, 0.12});
    ASSERT_EQ(lines.size(), 4u);
    for (const auto &l : lines) {
        EXPECT_NEAR(l.slope, l.distance / 2.0, 1e-10);
        EXPECT_NEAR(l.intercept, std::log10(0.5) - l.distance / 2.0 * std::log10(0.1), 1e-10);
        EXPECT_EQ(l.points, 9);
    }
    EXPECT_NEAR(estimate_threshold(lines).p_star, 0.1, 1e-10);
}

TEST(threshold_fit, IdenticalDataGivesIdenticalLines) {
    auto rows = power_law({5}, kGrid, 0.3, 0.1);
    auto more = rows;
    for (auto &r : more) r.distance = 7;
    rows.insert(rows.end(), more.begin(), more.end());
    auto lines = fit_lines(rows, {});
    EXPECT_EQ(lines[0].slope, lines[1].slope);
    EXPECT_EQ(lines[0].intercept, lines[1].intercept);
    EXPECT_THROW(estimate_threshold(lines), std::runtime_error);
}

TEST(threshold_fit, TwoLinesCrossing) {
    std::vector<LineFit> lines = {{3, 1.5, 1.5 * 1.0 + std::log10(0.2), 2}, {5, 2.5, 2.5 * 1.0 + std::log10(0.2), 2}};
    EXPECT_NEAR(estimate_threshold(lines).p_star, 0.1, 1e-12);
    EXPECT_EQ(estimate_threshold(lines).pairs, 1);
}

/// Intersections outside [p_lo / 2, 2 p_hi] are dropped when a window is given.
TEST(threshold_fit, WindowBoundsIntersections) {
    std::vector<LineFit> lines = {{3, 1.5, 1.5 + std::log10(0.2), 2},
                                  {5, 2.5, 2.5 + std::log10(0.2), 2},
                                  {7, 2.5 + 1e-3, (2.5 + 1e-3) * 5.0 + 2.5 * -4.0 + std::log10(0.2) - 2.5, 2}};
    FitWindow window{0.08, 0.12};
    auto bounded = estimate_threshold(lines, &window);
    auto unbounded = estimate_threshold(lines);
    EXPECT_EQ(unbounded.pairs, 3);
    EXPECT_GT(bounded.pairs, 0);
    EXPECT_LT(bounded.pairs, 3);
    EXPECT_GT(bounded.p_star, window.p_lo / 2);
    EXPECT_LT(bounded.p_star, window.p_hi * 2);
    std::vector<LineFit> apart = {lines[1], lines[2]};
    EXPECT_THROW(estimate_threshold(apart, &window), std::runtime_error);
}

TEST(threshold_fit, EveryPairMeetsAtTheThreshold) {
    auto lines = fit_lines(power_law({3, 5, 7, 9, 11}, kGrid, 0.2, 0.093), {});
    for (size_t i = 0; i < lines.size(); i++) {
        for (size_t j = i + 1; j < lines.size(); j++) {
            EXPECT_NEAR(estimate_threshold({lines[i], lines[j]}).p_star, 0.093, 1e-10);
        }
    }
}

TEST(threshold_fit, ScaleConsistency) {
    auto rows = power_law({7, 9, 11}, kGrid, 0.1, 0.1);
    auto base = fit_lines(rows, {});
    for (auto &r : rows) r.p_fail *= 0.37;
    auto scaled = fit_lines(rows, {});
    for (size_t i = 0; i < base.size(); i++) {
        EXPECT_NEAR(scaled[i].slope, base[i].slope, 1e-10);
        EXPECT_NEAR(scaled[i].intercept - base[i].intercept, std::log10(0.37), 1e-10);
    }
    EXPECT_NEAR(estimate_threshold(scaled).p_star, estimate_threshold(base).p_star, 1e-10);
}

TEST(threshold_fit, WindowAndDroppedDistances) {
    auto rows = power_law({3, 5, 7}, kGrid, 0.5, 0.1);
    for (auto &r : rows) {
        if (r.distance == 7 && r.p > 0.08) {
            r.failures = 0;
            r.p_fail = 0;
        }
    }
    std::vector<std::string> warnings;
    auto lines = fit_lines(rows, {0.08, 0.12, 3, 7}, &warnings);
    EXPECT_EQ(lines.size(), 2u);
    EXPECT_EQ(warnings.size(), 1u);
    EXPECT_THROW(fit_lines(rows, {0.08, 0.12, 5, 7}), std::runtime_error);
    EXPECT_EQ(fit_lines(rows, {0.09, 0.1})[0].points, 3);
    auto dup = rows;
    dup.push_back(rows[0]);
    EXPECT_THROW(fit_lines(dup, {}), std::invalid_argument);
}

TEST(threshold_fit, SyntheticRecovery) {
    const double p_star = 0.082;
    std::mt19937_64 rng(82);
    std::vector<ResultRow> rows;
    for (int d = 7; d <= 19; d += 2) {
        for (double p = 0.074; p < 0.0905; p += 0.002) {
            double pf = 0.1 * std::pow(p / p_star, d / 2.0);
            std::binomial_distribution<uint64_t> draw(20000, pf);
            rows.push_back(make_row("cmwpm", d, 1.0, p, 20000, draw(rng), 1));
        }
    }
    FitWindow window{0.074, 0.090, 7};
    auto fit = fit_threshold(rows, window, 200, 3);
    EXPECT_NEAR(fit.p_star, p_star, 0.003);
    EXPECT_GT(fit.sigma, 0.0);
    EXPECT_LT(fit.sigma, 0.01);
}

TEST(threshold_fit, BootstrapIsDeterministic) {
    std::mt19937_64 rng(1);
    std::vector<ResultRow> rows;
    for (int d : {5, 7, 9}) {
        for (double p : kGrid) {
            std::binomial_distribution<uint64_t> draw(4000, 0.2 * std::pow(p / 0.1, d / 2.0));
            rows.push_back(make_row("mps", d, 1.0, p, 4000, draw(rng), 1));
        }
    }
    auto a = bootstrap_threshold(rows, {}, 100, 9);
    auto b = bootstrap_threshold(rows, {}, 100, 9);
    EXPECT_EQ(a.p_star, b.p_star);
    EXPECT_EQ(a.sigma, b.sigma);
    EXPECT_NE(bootstrap_threshold(rows, {}, 100, 10).p_star, a.p_star);
    EXPECT_THROW(bootstrap_threshold(rows, {}, 49, 9), std::invalid_argument);
}

TEST(threshold_fit, BootstrapSpreadVanishesWithTrials) {
    auto rows = power_law({5, 7, 9}, kGrid, 0.3, 0.1, 100000000);
    auto boot = bootstrap_threshold(rows, {}, 60, 1);
    EXPECT_LT(boot.sigma, 2e-4);
    EXPECT_NEAR(boot.p_star, 0.1, 2e-4);
}

TEST(threshold_fit, JsonHasTheFitFields) {
    auto rows = power_law({5, 7, 9}, kGrid, 0.3, 0.1, 1000000);
    auto fit = fit_threshold(rows, {0.08, 0.12, 5}, 50, 2);
    auto j = nlohmann::json::parse(fit_to_json(fit));
    EXPECT_NEAR(j["p_star"].get<double>(), 0.1, 1e-3);
    EXPECT_EQ(j["lines"].size(), 3u);
    EXPECT_EQ(j["distances"].get<std::vector<int>>(), (std::vector<int>{5, 7, 9}));
    EXPECT_EQ(j["window"]["d_min"].get<int>(), 5);
    EXPECT_EQ(j["replicates"].get<int>(), 50);
    EXPECT_TRUE(j.contains("sigma"));
    EXPECT_TRUE(j.contains("method"));
}

TEST(threshold_fit, SelectRows) {
    std::vector<ResultRow> rows = {make_row("mps", 3, 1.0, 0.1, 10, 1, 0), make_row("mps", 3, 4.0, 0.1, 10, 1, 0),
                                   make_row("cmwpm", 3, 1.0, 0.1, 10, 1, 0)};
    EXPECT_EQ(select_rows(rows, "mps", 1.0).size(), 1u);
    EXPECT_EQ(select_rows(rows, "mps", 4.0)[0].lambda, 4.0);
}
