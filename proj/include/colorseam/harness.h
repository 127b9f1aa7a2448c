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

#ifndef COLORSEAM_HARNESS_H
#define COLORSEAM_HARNESS_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "colorseam/decoder.h"

namespace colorseam {

struct TrialPoint {
    DecoderSpec decoder;
    int distance = 3;
    double lambda = 1.0;
    double p_bulk = 0.0;
    /// Position of p_bulk in its campaign grid; enters the per-trial seeds.
    uint64_t p_index = 0;
    uint64_t trials = 1;
    uint64_t master_seed = 0;
};

struct ResultRow {
    std::string decoder;
    int distance = 0;
    double lambda = 1.0;
    double p = 0.0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double p_fail = 0.0;
    double std_err = 0.0;
    uint64_t seed = 0;

    bool operator==(const ResultRow &) const = default;
};

struct ResultTable {
    /// Free-form provenance lines, written as '#' comments.
    std::vector<std::string> metadata;
    std::vector<ResultRow> rows;

    bool operator==(const ResultTable &) const = default;
};

/// Fills p_fail and std_err from trials and failures.
ResultRow make_row(std::string decoder, int distance, double lambda, double p, uint64_t trials,
                   uint64_t failures, uint64_t seed);

/// Samples one error, decodes its syndrome and reports a logical failure.
bool run_trial(const CodeLattice &lattice, const NoiseProfile &profile, const Decoder &decoder,
               uint64_t seed);

/// Runs all trials of a point on up to `threads` workers (0 = hardware
/// concurrency). The failure count does not depend on the thread count.
ResultRow run_point(const TrialPoint &point, int threads = 1);

struct Campaign {
    DecoderSpec decoder;
    std::vector<int> distances;
    std::vector<double> lambdas;
    std::vector<double> p_values;
    uint64_t trials = 1;
    uint64_t seed = 0;
    int threads = 1;
};

/// Runs every (lambda, distance, p) point of the campaign in that nesting
/// order. Points already present in `done` (same decoder, distance, lambda,
/// p, trials and seed) are copied rather than rerun. on_row is called after
/// each point with the table so far, which makes it a checkpoint hook.
ResultTable run_campaign(const Campaign &campaign, const ResultTable &done = {},
                         const std::function<void(const ResultTable &)> &on_row = {});

}  // namespace colorseam

#endif
