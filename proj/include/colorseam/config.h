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

#ifndef COLORSEAM_CONFIG_H
#define COLORSEAM_CONFIG_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colorseam/harness.h"

namespace colorseam {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Inclusive grid min, min + step, ... up to max.
struct PGrid {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;

    std::vector<double> values() const;
};

struct CampaignConfig {
    DecoderSpec decoder;
    std::vector<int> distances;
    std::vector<double> lambdas = {1.0};
    PGrid p_grid;
    uint64_t trials = 1;
    uint64_t seed = 1;
    std::string out = "results.csv";
    /// Worker threads; 0 uses every hardware thread.
    int threads = 0;

    Campaign campaign() const;
};

/// Names accepted by preset().
std::vector<std::string> preset_names();
/// Throws ConfigError for an unknown name.
CampaignConfig preset(std::string_view name);

/// Parses the JSON schema
///   {decoder, chi?, distances: [...], lambda: number or [...],
///    p_grid: {min, max, step}, trials, seed, out, threads?}
/// Unknown keys and missing required keys are reported together.
CampaignConfig parse_config(std::string_view json_text);
CampaignConfig load_config(const std::string &path);

/// Throws ConfigError on an inconsistent configuration.
void validate(const CampaignConfig &config);

std::string config_to_json(const CampaignConfig &config);

/// Odd distances lo, lo + step, ..., hi.
std::vector<int> distance_range(int lo, int hi, int step = 2);

}  // namespace colorseam

#endif
