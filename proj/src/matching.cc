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

#include "colorseam/matching.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace colorseam {

namespace {

// Port of Joris van Rantwijk's reference implementation of the primal-dual
// weighted matching algorithm. Vertices are 0..n-1, blossoms n..2n-1. Edge k
// has endpoints 2k and 2k+1; endpoint p belongs to vertex endpoint_[p].
class BlossomMatcher {
   public:
    BlossomMatcher(int n, const std::vector<WeightedEdge> &edges, bool max_cardinality)
        : n_(n), edges_(edges), max_cardinality_(max_cardinality) {}

    std::vector<int> solve() {
        const int n = n_;
        const int m = static_cast<int>(edges_.size());
        if (m == 0) return std::vector<int>(n, -1);

        int64_t max_weight = 0;
        for (const auto &e : edges_) max_weight = std::max(max_weight, e.weight);
        endpoint_.resize(2 * m);
        neighbend_.assign(n, {});
        for (int k = 0; k < m; k++) {
            endpoint_[2 * k] = edges_[k].u;
            endpoint_[2 * k + 1] = edges_[k].v;
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        mate_.assign(n, -1);
        label_.assign(2 * n, 0);
        labelend_.assign(2 * n, -1);
        inblossom_.resize(n);
        for (int v = 0; v < n; v++) inblossom_[v] = v;
        blossomparent_.assign(2 * n, -1);
        blossomchilds_.assign(2 * n, {});
        blossombase_.assign(2 * n, -1);
        for (int v = 0; v < n; v++) blossombase_[v] = v;
        blossomendps_.assign(2 * n, {});
        bestedge_.assign(2 * n, -1);
        blossombestedges_.assign(2 * n, {});
        has_bestlist_.assign(2 * n, false);
        unused_.clear();
        for (int b = n; b < 2 * n; b++) unused_.push_back(b);
        dualvar_.assign(2 * n, 0);
        for (int v = 0; v < n; v++) dualvar_[v] = max_weight;
        allowedge_.assign(m, false);
        queue_.clear();

        for (int stage = 0; stage < n; stage++) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n; b < 2 * n; b++) {
                blossombestedges_[b].clear();
                has_bestlist_[b] = false;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < n; v++) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            }

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = true;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = -1;
                int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                if (!max_cardinality_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n);
                }
                for (int v = 0; v < n; v++) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n; b++) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        int64_t d = slack(bestedge_[b]) / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n; b < 2 * n; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    deltatype = 1;
                    delta = std::max<int64_t>(
                        0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n));
                }

                for (int v = 0; v < n; v++) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = n; b < 2 * n; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].u;
                    int j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    queue_.push_back(edges_[deltaedge].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (int b = n; b < 2 * n; b++) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }

        std::vector<int> result(n, -1);
        for (int v = 0; v < n; v++) {
            if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
        }
        return result;
    }

   private:
    int64_t slack(int k) const {
        const auto &e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    void leaves(int b, std::vector<int> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) leaves(t, out);
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    static int wrap(int j, int len) { return ((j % len) + len) % len; }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u;
        int w = edges_[k].v;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto &path = blossomchilds_[b];
        auto &endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }

        std::vector<int> bestedgeto(2 * n_, -1);
        for (int sub : path) {
            std::vector<int> candidates;
            if (!has_bestlist_[sub]) {
                for (int leaf : leaves(sub)) {
                    for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
                }
            } else {
                candidates = blossombestedges_[sub];
            }
            for (int kk : candidates) {
                int i = edges_[kk].u;
                int j = edges_[kk].v;
                if (inblossom_[j] == b) std::swap(i, j);
                int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 &&
                    (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                    bestedgeto[bj] = kk;
                }
            }
            blossombestedges_[sub].clear();
            has_bestlist_[sub] = false;
            bestedge_[sub] = -1;
        }
        blossombestedges_[b].clear();
        for (int kk : bestedgeto) {
            if (kk != -1) blossombestedges_[b].push_back(kk);
        }
        has_bestlist_[b] = true;
        bestedge_[b] = -1;
        for (int kk : blossombestedges_[b]) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
        }
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto &childs = blossomchilds_[b];
            const auto &endps = blossomendps_[b];
            const int len = static_cast<int>(childs.size());
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endps[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endps[wrap(j - endptrick, len)] / 2] = true;
                j += jstep;
                p = endps[wrap(j - endptrick, len)] ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = childs[wrap(j, len)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (childs[wrap(j, len)] != entrychild) {
                bv = childs[wrap(j, len)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int reached = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        reached = leaf;
                        break;
                    }
                }
                if (reached != -1) {
                    label_[reached] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(reached, 2, labelend_[reached]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestlist_[b] = false;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        auto &childs = blossomchilds_[b];
        auto &endps = blossomendps_[b];
        const int len = static_cast<int>(childs.size());
        const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = childs[wrap(j, len)];
            int p = endps[wrap(j - endptrick, len)] ^ endptrick;
            if (t >= n_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = childs[wrap(j, len)];
            if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[childs[0]];
    }

    void augment_matching(int k) {
        const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
        for (const auto &start : ends) {
            int s = start[0];
            int p = start[1];
            while (true) {
                int bs = inblossom_[s];
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    const std::vector<WeightedEdge> &edges_;
    bool max_cardinality_;

    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_bestlist_;
    std::vector<int> unused_;
    std::vector<int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

void check_weight(double w) {
    if (std::isnan(w) || w < 0.0) {
        throw std::invalid_argument("matching weights must be non-negative, got " + std::to_string(w));
    }
}

void normalise(Matching &m) {
    for (auto &pr : m.pairs) {
        if (pr.second != kBoundary && pr.second < pr.first) std::swap(pr.first, pr.second);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
}

}  // namespace

MatchingProblem::MatchingProblem(int num_defects, bool has_boundary)
    : n_(num_defects),
      has_boundary_(has_boundary),
      weights_(static_cast<size_t>(num_defects) * num_defects, kUnreachable),
      boundary_(num_defects, kUnreachable) {
    if (num_defects < 0) throw std::invalid_argument("negative defect count");
}

void MatchingProblem::set_weight(int a, int b, double w) {
    if (a == b) throw std::invalid_argument("self-pair weight");
    check_weight(w);
    weights_[static_cast<size_t>(a) * n_ + b] = w;
    weights_[static_cast<size_t>(b) * n_ + a] = w;
}

void MatchingProblem::set_boundary_weight(int a, double w) {
    if (!has_boundary_) throw std::logic_error("problem has no boundary node");
    check_weight(w);
    boundary_[a] = w;
}

std::vector<int> max_weight_matching(int num_vertices, const std::vector<WeightedEdge> &edges,
                                     bool max_cardinality) {
    for (const auto &e : edges) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
            throw std::invalid_argument("invalid edge in matching graph");
        }
    }
    return BlossomMatcher(num_vertices, edges, max_cardinality).solve();
}

Matching mwpm(const MatchingProblem &problem) {
    const int n = problem.num_defects();
    const bool boundary = problem.has_boundary();
    if (!boundary && n % 2 != 0) {
        throw std::invalid_argument("odd number of defects (" + std::to_string(n) +
                                    ") cannot be perfectly matched without a boundary");
    }
    Matching result;
    if (n == 0) return result;

    double max_w = 0.0;
    for (int a = 0; a < n; a++) {
        bool reachable = false;
        for (int b = 0; b < n; b++) {
            double w = a == b ? kUnreachable : problem.weight(a, b);
            if (w != kUnreachable) {
                max_w = std::max(max_w, w);
                reachable = true;
            }
        }
        if (boundary && problem.boundary_weight(a) != kUnreachable) {
            max_w = std::max(max_w, problem.boundary_weight(a));
            reachable = true;
        }
        if (!reachable) throw std::runtime_error("defect " + std::to_string(a) + " is disconnected");
    }

    // Fixed-point weights keep the dual updates exact; 2^40 leaves headroom
    // for sums over a few thousand edges in int64.
    double scale = 1.0;
    if (max_w > 0.0) scale = std::ldexp(1.0, 40 - std::ilogb(max_w) - 1);
    auto to_int = [&](double w) { return static_cast<int64_t>(std::llround(w * scale)); };
    const int64_t ceiling = to_int(max_w) + 1;
    // Maximising sum(ceiling - w) over maximum-cardinality matchings
    // minimises sum(w) over perfect ones. Doubled to keep duals integral.
    auto flipped = [&](double w) { return 2 * (ceiling - to_int(w)); };

    std::vector<WeightedEdge> edges;
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            double w = problem.weight(a, b);
            if (w != kUnreachable) edges.push_back({a, b, flipped(w)});
        }
    }
    int vertices = n;
    if (boundary) {
        // One boundary clone per defect; clones pair among themselves for free.
        vertices = 2 * n;
        for (int a = 0; a < n; a++) {
            if (problem.boundary_weight(a) != kUnreachable) {
                edges.push_back({a, n + a, flipped(problem.boundary_weight(a))});
            }
        }
        for (int a = 0; a < n; a++) {
            for (int b = a + 1; b < n; b++) edges.push_back({n + a, n + b, flipped(0.0)});
        }
    }

    std::vector<int> mate = max_weight_matching(vertices, edges, true);
    for (int a = 0; a < n; a++) {
        int partner = mate[a];
        if (partner == -1) throw std::runtime_error("no perfect matching exists");
        if (partner >= n) {
            result.pairs.emplace_back(a, kBoundary);
            result.total_weight += problem.boundary_weight(a);
        } else if (a < partner) {
            result.pairs.emplace_back(a, partner);
            result.total_weight += problem.weight(a, partner);
        }
    }
    normalise(result);
    return result;
}

Matching brute_force_matching(const MatchingProblem &problem) {
    const int n = problem.num_defects();
    if (n > 12) throw std::invalid_argument("brute-force matching is limited to 12 defects");
    if (!problem.has_boundary() && n % 2 != 0) {
        throw std::invalid_argument("odd number of defects cannot be perfectly matched without a boundary");
    }

    std::vector<int> partner(n, -2);
    std::vector<int> best;
    double best_weight = kUnreachable;

    // Depth-first in lexicographic order, so the first optimum found wins ties.
    std::function<void(double)> search = [&](double acc) {
        int a = 0;
        while (a < n && partner[a] != -2) a++;
        if (a == n) {
            if (best.empty() || acc < best_weight - 1e-9 * std::max(1.0, std::abs(best_weight))) {
                best = partner;
                best_weight = acc;
            }
            return;
        }
        for (int b = a + 1; b < n; b++) {
            if (partner[b] != -2 || problem.weight(a, b) == kUnreachable) continue;
            partner[a] = b;
            partner[b] = a;
            search(acc + problem.weight(a, b));
            partner[a] = partner[b] = -2;
        }
        if (problem.has_boundary() && problem.boundary_weight(a) != kUnreachable) {
            partner[a] = kBoundary;
            search(acc + problem.boundary_weight(a));
            partner[a] = -2;
        }
    };
    search(0.0);
    if (n > 0 && best.empty()) throw std::runtime_error("no perfect matching exists");

    Matching result;
    result.total_weight = n > 0 ? best_weight : 0.0;
    for (int a = 0; a < n; a++) {
        if (best[a] == kBoundary) {
            result.pairs.emplace_back(a, kBoundary);
        } else if (a < best[a]) {
            result.pairs.emplace_back(a, best[a]);
        }
    }
    normalise(result);
    return result;
}

}  // namespace colorseam
