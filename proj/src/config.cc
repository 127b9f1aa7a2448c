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

#include "colorseam/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace colorseam {

using nlohmann::json;

std::vector<double> PGrid::values() const {
    if (!(step > 0.0)) throw ConfigError("p grid step must be positive");
    if (!(min < max)) throw ConfigError("p grid needs min < max");
    const auto n = static_cast<int64_t>(std::floor((max - min) / step + 1e-9));
    std::vector<double> out;
    for (int64_t i = 0; i <= n; i++) {
        double p = min + static_cast<double>(i) * step;
        out.push_back(std::round(p * 1e12) / 1e12);
    }
    return out;
}

Campaign CampaignConfig::campaign() const {
    Campaign c;
    c.decoder = decoder;
    c.distances = distances;
    c.lambdas = lambdas;
    c.p_values = p_grid.values();
    c.trials = trials;
    c.seed = seed;
    c.threads = threads;
    return c;
}

std::vector<int> distance_range(int lo, int hi, int step) {
    if (step <= 0) throw ConfigError("distance step must be positive");
    std::vector<int> out;
    for (int d = lo; d <= hi; d += step) out.push_back(d);
    return out;
}

std::vector<std::string> preset_names() { return {"paper-mps", "paper-cmwpm", "desk-mps", "desk-cmwpm"}; }

CampaignConfig preset(std::string_view name) {
    CampaignConfig c;
    c.lambdas = {1.0, 4.0};
    if (name == "paper-mps" || name == "desk-mps") {
        c.decoder = {DecoderKind::Mps, 8};
        c.p_grid = {0.08, 0.12, 0.005};
        bool paper = name == "paper-mps";
        c.distances = distance_range(3, paper ? 15 : 11);
        c.trials = paper ? 20000 : 4000;
        c.out = std::string(name) + ".csv";
        return c;
    }
    if (name == "paper-cmwpm") {
        c.decoder = {DecoderKind::Cmwpm, 8};
        c.p_grid = {0.05, 0.09, 0.002};
        c.distances = distance_range(3, 45);
        c.trials = 100000;
        c.out = "paper-cmwpm.csv";
        return c;
    }
    if (name == "desk-cmwpm") {
        c.decoder = {DecoderKind::Cmwpm, 8};
        c.p_grid = {0.074, 0.090, 0.002};
        c.distances = distance_range(7, 19);
        c.trials = 20000;
        c.out = "desk-cmwpm.csv";
        return c;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

namespace {

const std::set<std::string> kRequired = {"decoder", "distances", "lambda", "p_grid", "trials", "seed", "out"};
const std::set<std::string> kOptional = {"chi", "threads"};

template <typename T>
T get_as(const json &j, const std::string &key) {
    try {
        return j.get<T>();
    } catch (const json::exception &) {
        throw ConfigError("config key '" + key + "' has the wrong type");
    }
}

uint64_t get_count(const json &j, const std::string &key) {
    if (!j.is_number_unsigned()) throw ConfigError("config key '" + key + "' must be a non-negative integer");
    return j.get<uint64_t>();
}

}  // namespace

CampaignConfig parse_config(std::string_view json_text) {
    json j;
    bool blank = json_text.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) {
        j = json::object();
    } else {
        try {
            j = json::parse(json_text);
        } catch (const json::parse_error &e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    std::string problems;
    for (const auto &[key, value] : j.items()) {
        if (!kRequired.count(key) && !kOptional.count(key)) problems += " unknown key '" + key + "';";
    }
    std::string missing;
    for (const auto &key : kRequired) {
        if (!j.contains(key)) missing += (missing.empty() ? "" : ", ") + key;
    }
    if (!missing.empty()) problems += " missing required keys: " + missing + ";";
    if (!problems.empty()) throw ConfigError("invalid config:" + problems.substr(0, problems.size() - 1));

    CampaignConfig c;
    try {
        c.decoder.kind = parse_decoder_kind(get_as<std::string>(j["decoder"], "decoder"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (j.contains("chi")) c.decoder.chi = get_as<int>(j["chi"], "chi");
    c.distances = get_as<std::vector<int>>(j["distances"], "distances");
    if (j["lambda"].is_array()) {
        c.lambdas = get_as<std::vector<double>>(j["lambda"], "lambda");
    } else {
        c.lambdas = {get_as<double>(j["lambda"], "lambda")};
    }
    const json &grid = j["p_grid"];
    if (!grid.is_object()) throw ConfigError("config key 'p_grid' must be an object");
    for (const auto &[key, value] : grid.items()) {
        if (key != "min" && key != "max" && key != "step") throw ConfigError("unknown key 'p_grid." + key + "'");
    }
    for (const char *key : {"min", "max", "step"}) {
        if (!grid.contains(key)) throw ConfigError(std::string("missing key 'p_grid.") + key + "'");
    }
    c.p_grid = {get_as<double>(grid["min"], "p_grid.min"), get_as<double>(grid["max"], "p_grid.max"),
                get_as<double>(grid["step"], "p_grid.step")};
    c.trials = get_count(j["trials"], "trials");
    c.seed = get_count(j["seed"], "seed");
    c.out = get_as<std::string>(j["out"], "out");
    if (j.contains("threads")) c.threads = get_as<int>(j["threads"], "threads");
    validate(c);
    return c;
}

CampaignConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void validate(const CampaignConfig &c) {
    if (c.decoder.chi < 0) throw ConfigError("chi must be >= 0");
    if (c.distances.empty()) throw ConfigError("no distances given");
    for (int d : c.distances) {
        if (d < 3 || d > 49 || d % 2 == 0) throw ConfigError("distance " + std::to_string(d) + " is not odd in [3, 49]");
        if (c.decoder.kind == DecoderKind::Oracle && d > 7) throw ConfigError("the oracle decoder is limited to d <= 7");
    }
    if (c.lambdas.empty()) throw ConfigError("no lambda given");
    std::vector<double> ps = c.p_grid.values();
    if (ps.front() < 0.0) throw ConfigError("p grid must be non-negative");
    for (double lambda : c.lambdas) {
        if (!(lambda >= 1.0)) throw ConfigError("lambda must be >= 1");
        if (!(lambda * ps.back() < 0.5)) throw ConfigError("lambda * p must stay below 0.5");
    }
    if (c.trials < 1) throw ConfigError("trials must be >= 1");
    if (c.threads < 0) throw ConfigError("threads must be >= 0");
}

std::string config_to_json(const CampaignConfig &c) {
    nlohmann::ordered_json j;
    j["decoder"] = std::string(decoder_name(c.decoder.kind));
    j["chi"] = c.decoder.chi;
    j["distances"] = c.distances;
    j["lambda"] = c.lambdas;
    j["p_grid"] = {{"min", c.p_grid.min}, {"max", c.p_grid.max}, {"step", c.p_grid.step}};
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["out"] = c.out;
    j["threads"] = c.threads;
    return j.dump();
}

}  // namespace colorseam
