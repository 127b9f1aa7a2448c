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

#ifndef COLORSEAM_RESULTS_IO_H
#define COLORSEAM_RESULTS_IO_H

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "colorseam/harness.h"

namespace colorseam {

inline constexpr const char *kResultsHeader = "decoder,distance,lambda,p,trials,failures,p_fail,stderr,seed";

class ResultsParseError : public std::runtime_error {
   public:
    ResultsParseError(const std::string &source, int line, const std::string &what);
    int line() const { return line_; }

   private:
    int line_;
};

/// Metadata lines first (each prefixed "# "), then the header and one row
/// per point. Doubles are written with 17 significant digits so reading the
/// file back reproduces the table exactly.
void write_results(const ResultTable &table, std::ostream &out);
/// Writes through a temporary file and renames it into place.
void write_results(const ResultTable &table, const std::string &path);

ResultTable read_results(std::istream &in, const std::string &source = "<stream>");
ResultTable read_results(const std::string &path);

}  // namespace colorseam

#endif
