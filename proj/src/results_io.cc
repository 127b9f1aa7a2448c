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

#include "colorseam/results_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace colorseam {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

template <typename T>
bool parse_number(const std::string &text, T &value) {
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc() && ptr == end;
}

}  // namespace

ResultsParseError::ResultsParseError(const std::string &source, int line, const std::string &what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

void write_results(const ResultTable &table, std::ostream &out) {
    for (const auto &m : table.metadata) out << "# " << m << "\n";
    out << kResultsHeader << "\n";
    for (const auto &r : table.rows) {
        out << r.decoder << ',' << r.distance << ',' << format_double(r.lambda) << ',' << format_double(r.p)
            << ',' << r.trials << ',' << r.failures << ',' << format_double(r.p_fail) << ','
            << format_double(r.std_err) << ',' << r.seed << "\n";
    }
}

void write_results(const ResultTable &table, const std::string &path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        write_results(table, out);
        out.flush();
        if (!out) throw std::runtime_error("error writing '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

ResultTable read_results(std::istream &in, const std::string &source) {
    ResultTable table;
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            if (!header) table.metadata.push_back(line.substr(start));
            continue;
        }
        if (!header) {
            if (line != kResultsHeader) throw ResultsParseError(source, lineno, "expected header '" + std::string(kResultsHeader) + "'");
            header = true;
            continue;
        }
        auto fields = split(line);
        if (fields.size() != 9) {
            throw ResultsParseError(source, lineno, "expected 9 fields, found " + std::to_string(fields.size()));
        }
        ResultRow r;
        r.decoder = fields[0];
        if (r.decoder.empty()) throw ResultsParseError(source, lineno, "empty decoder name");
        const char *names[] = {"distance", "lambda", "p", "trials", "failures", "p_fail", "stderr", "seed"};
        bool ok[8] = {parse_number(fields[1], r.distance), parse_number(fields[2], r.lambda),
                      parse_number(fields[3], r.p),        parse_number(fields[4], r.trials),
                      parse_number(fields[5], r.failures), parse_number(fields[6], r.p_fail),
                      parse_number(fields[7], r.std_err),  parse_number(fields[8], r.seed)};
        for (int i = 0; i < 8; i++) {
            if (!ok[i]) throw ResultsParseError(source, lineno, std::string("bad ") + names[i] + " '" + fields[i + 1] + "'");
        }
        if (r.trials == 0) throw ResultsParseError(source, lineno, "trials must be positive");
        if (r.failures > r.trials) throw ResultsParseError(source, lineno, "failures exceed trials");
        double expected = static_cast<double>(r.failures) / static_cast<double>(r.trials);
        if (std::fabs(r.p_fail - expected) > 1e-9 * std::max(expected, 1e-300) + 1e-15) {
            throw ResultsParseError(source, lineno, "p_fail does not equal failures / trials");
        }
        table.rows.push_back(std::move(r));
    }
    if (!header) throw ResultsParseError(source, lineno, "missing header");
    return table;
}

ResultTable read_results(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_results(in, path);
}

}  // namespace colorseam
