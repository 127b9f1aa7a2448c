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

#ifndef COLORSEAM_PLOT_H
#define COLORSEAM_PLOT_H

#include <ostream>
#include <string>
#include <vector>

#include "colorseam/threshold_fit.h"

namespace colorseam {

/// Columns series,distance,p,p_fail,stderr. "data" rows are the measured
/// points; "fit" rows sample each fitted line across the data's p range.
void write_plot_csv(const std::vector<ResultRow> &rows, const std::vector<LineFit> &lines, std::ostream &out);

/// Log-log plot of p_fail against p, one color per distance, with error bars
/// and the fitted lines dashed. A positive p_star is drawn as a vertical line.
void write_plot_svg(const std::vector<ResultRow> &rows, const std::vector<LineFit> &lines, std::ostream &out,
                    const std::string &title = "", double p_star = 0.0);

}  // namespace colorseam

#endif
