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

#ifndef COLORSEAM_THRESHOLD_FIT_H
#define COLORSEAM_THRESHOLD_FIT_H

#include <cstdint>
#include <string>
#include <vector>

#include "colorseam/harness.h"

namespace colorseam {

/// Rows used by a fit: p in [p_lo, p_hi] and d in [d_min, d_max].
struct FitWindow {
    double p_lo = 0.0;
    double p_hi = 1.0;
    int d_min = 3;
    int d_max = 1 << 30;
};

/// log10(p_fail) = slope * log10(p) + intercept for one distance.
struct LineFit {
    int distance = 0;
    double slope = 0.0;
    double intercept = 0.0;
    int points = 0;
};

struct ThresholdEstimate {
    double p_star = 0.0;
    /// Standard deviation of p_star over bootstrap replicates; 0 for a point estimate.
    double sigma = 0.0;
    int pairs = 0;
};

struct FitResult {
    std::vector<LineFit> lines;
    FitWindow window;
    std::vector<int> distances;
    double p_star = 0.0;
    double sigma = 0.0;
    double bootstrap_mean = 0.0;
    int replicates = 0;
    int failed_replicates = 0;
    uint64_t seed = 0;
    std::string method;
    std::vector<std::string> warnings;
};

/// Rows of one decoder and lambda.
std::vector<ResultRow> select_rows(const std::vector<ResultRow> &rows, const std::string &decoder,
                                   double lambda);

/// Least-squares lines per distance over the rows inside the window with
/// failures > 0. Distances with fewer than two such points are dropped with a
/// warning. Throws std::invalid_argument on duplicate (distance, p) rows and
/// std::runtime_error when fewer than two distances remain.
std::vector<LineFit> fit_lines(const std::vector<ResultRow> &rows, const FitWindow &window,
                               std::vector<std::string> *warnings = nullptr);

/// 10 to the mean of all pairwise line intersections in log10 p. Pairs whose
/// slopes differ by less than 1e-6 are skipped, and so are intersections
/// outside [p_lo / 2, 2 p_hi] when a window is given. Throws
/// std::runtime_error if no pair remains.
ThresholdEstimate estimate_threshold(const std::vector<LineFit> &lines, const FitWindow *window = nullptr);

/// Parametric bootstrap: each failure count is redrawn from
/// Binomial(trials, p_fail) and the fit repeated. Returns the mean and
/// standard deviation of p_star over replicates. Replicates where the fit
/// breaks down are skipped and counted in *failed.
ThresholdEstimate bootstrap_threshold(const std::vector<ResultRow> &rows, const FitWindow &window,
                                      int replicates, uint64_t seed, int *failed = nullptr);

/// Point estimate plus bootstrap sigma.
FitResult fit_threshold(const std::vector<ResultRow> &rows, const FitWindow &window,
                        int replicates = 200, uint64_t seed = 1);

std::string fit_to_json(const FitResult &fit);

}  // namespace colorseam

#endif
