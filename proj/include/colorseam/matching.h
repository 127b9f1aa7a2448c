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

#ifndef COLORSEAM_MATCHING_H
#define COLORSEAM_MATCHING_H

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace colorseam {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();
/// Partner index used for a defect matched to the boundary.
inline constexpr int kBoundary = -1;

/// Dense minimum-weight perfect matching instance. Weights are symmetric and
/// non-negative; kUnreachable marks a missing edge. With a boundary, any
/// number of defects may be matched to it, each paying its own boundary
/// weight.
class MatchingProblem {
   public:
    MatchingProblem(int num_defects, bool has_boundary);

    int num_defects() const { return n_; }
    bool has_boundary() const { return has_boundary_; }

    double weight(int a, int b) const { return weights_[static_cast<size_t>(a) * n_ + b]; }
    double boundary_weight(int a) const { return boundary_[a]; }
    void set_weight(int a, int b, double w);
    void set_boundary_weight(int a, double w);

   private:
    int n_;
    bool has_boundary_;
    std::vector<double> weights_;
    std::vector<double> boundary_;
};

struct Matching {
    /// (a, b) with a < b, or (a, kBoundary); sorted by first element.
    std::vector<std::pair<int, int>> pairs;
    double total_weight = 0.0;
};

/// Exact minimum-weight perfect matching (blossom algorithm). Throws
/// std::invalid_argument for an odd defect count without a boundary and
/// std::runtime_error when no perfect matching exists.
Matching mwpm(const MatchingProblem &problem);

/// Exhaustive search over all pairings; returns the lexicographically smallest
/// optimum (boundary sorts after every defect, ties within relative 1e-9).
/// Limited to 12 defects.
Matching brute_force_matching(const MatchingProblem &problem);

/// Integer edge for the general matcher.
struct WeightedEdge {
    int u;
    int v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm
/// with the O(n^3) dual bookkeeping). With max_cardinality set, the result is
/// a maximum-weight matching among maximum-cardinality ones. Returns the mate
/// of every vertex, or -1.
std::vector<int> max_weight_matching(int num_vertices, const std::vector<WeightedEdge> &edges,
                                     bool max_cardinality);

}  // namespace colorseam

#endif
