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

#include "colorseam/cmwpm_decoder.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "colorseam/matching.h"

namespace colorseam {

CmwpmDecoder::CmwpmDecoder(const CodeLattice &lattice, const NoiseProfile &profile, MoveCost move_cost)
    : lattice_(lattice), weights_(flip_weights(profile)), move_cost_(move_cost) {
    if (weights_.size() != lattice.num_qubits()) {
        throw std::invalid_argument("noise profile does not match lattice");
    }
    for (Color c : kAllColors) {
        Branch &br = branches_[static_cast<int>(c)];
        br.restricted = restricted_graph(lattice, c, profile);
        for (int node = 0; node < br.restricted.graph.num_nodes(); node++) {
            br.restricted_trees.push_back(br.restricted.graph.shortest_paths(node));
        }

        br.refine_face_node.assign(lattice.num_faces(), -1);
        for (size_t f = 0; f < lattice.num_faces(); f++) {
            if (lattice.face(f).color != c) continue;
            br.refine_face_node[f] = static_cast<int>(br.refine_faces.size());
            br.refine_faces.push_back(static_cast<int>(f));
        }
        br.refine_boundary = static_cast<int>(br.refine_faces.size());

        // Moves: qubit sets whose flip toggles one or two checks, all of color c.
        std::vector<PathGraph::Edge> moves;
        auto add_move = [&](std::vector<int> qubits) {
            std::vector<int> toggled;
            for (int q : qubits) {
                for (int f : lattice.faces_of_qubit(q)) {
                    auto it = std::find(toggled.begin(), toggled.end(), f);
                    if (it == toggled.end()) {
                        toggled.push_back(f);
                    } else {
                        toggled.erase(it);
                    }
                }
            }
            if (toggled.empty() || toggled.size() > 2) return;
            for (int f : toggled) {
                if (lattice.face(f).color != c) return;
            }
            std::sort(toggled.begin(), toggled.end());
            int u = br.refine_face_node[toggled[0]];
            int v = toggled.size() == 2 ? br.refine_face_node[toggled[1]] : br.refine_boundary;
            double w = 0.0;
            for (int q : qubits) w += weights_[q];
            moves.push_back({u, v, w, std::move(qubits)});
        };
        for (size_t q = 0; q < lattice.num_qubits(); q++) add_move({static_cast<int>(q)});
        // Pairs of qubits sharing the same non-empty set of other-colored
        // checks: the edges of color c in the bulk, plus same-face swaps
        // along the boundary.
        std::map<std::vector<int>, std::vector<int>> by_other_faces;
        for (size_t q = 0; q < lattice.num_qubits(); q++) {
            std::vector<int> other;
            for (int f : lattice.faces_of_qubit(q)) {
                if (lattice.face(f).color != c) other.push_back(f);
            }
            if (!other.empty()) by_other_faces[other].push_back(static_cast<int>(q));
        }
        for (const auto &[other, group] : by_other_faces) {
            for (size_t i = 0; i < group.size(); i++) {
                for (size_t j = i + 1; j < group.size(); j++) add_move({group[i], group[j]});
            }
        }
        br.refine = PathGraph(br.refine_boundary + 1, std::move(moves));
        if (move_cost_ == MoveCost::Fixed) {
            for (int node = 0; node < br.refine.num_nodes(); node++) {
                br.refine_trees.push_back(br.refine.shortest_paths(node));
            }
        }
    }
}

void CmwpmDecoder::match_and_lift(const PathGraph &graph, const std::vector<const PathGraph::Tree *> &trees,
                                  const std::vector<int> &nodes, int boundary, ErrorVector &flips) {
    if (nodes.empty()) return;
    const int k = static_cast<int>(nodes.size());
    MatchingProblem problem(k, true);
    for (int i = 0; i < k; i++) {
        const auto &dist = trees[i]->dist;
        for (int j = i + 1; j < k; j++) {
            if (dist[nodes[j]] != kUnreachable) problem.set_weight(i, j, dist[nodes[j]]);
        }
        if (dist[boundary] != kUnreachable) problem.set_boundary_weight(i, dist[boundary]);
    }
    Matching m = mwpm(problem);
    for (const auto &[a, b] : m.pairs) {
        int target = b == kBoundary ? boundary : nodes[b];
        graph.lift_path(*trees[a], target, flips);
    }
}

ErrorVector CmwpmDecoder::stage1(const SyndromeVector &s, Color excluded) const {
    const Branch &br = branches_[static_cast<int>(excluded)];
    std::vector<int> defects;
    for (size_t f = 0; f < s.size(); f++) {
        if (s[f] && br.restricted.face_node[f] >= 0) defects.push_back(br.restricted.face_node[f]);
    }
    std::vector<const PathGraph::Tree *> trees;
    for (int node : defects) trees.push_back(&br.restricted_trees[node]);
    ErrorVector flips = lattice_.empty_error();
    match_and_lift(br.restricted.graph, trees, defects, br.restricted.boundary_node, flips);
    return flips;
}

ErrorVector CmwpmDecoder::stage2(const SyndromeVector &s, Color excluded,
                                 const ErrorVector &stage1_flips) const {
    const Branch &br = branches_[static_cast<int>(excluded)];
    SyndromeVector residual = lattice_.syndrome(stage1_flips) ^ s;
    std::vector<int> defects;
    for (int f : br.refine_faces) {
        if (residual[f]) defects.push_back(br.refine_face_node[f]);
    }
    ErrorVector flips = stage1_flips;
    if (defects.empty()) return flips;
    std::vector<const PathGraph::Tree *> trees;
    std::vector<PathGraph::Tree> local;
    if (move_cost_ == MoveCost::Fixed) {
        for (int node : defects) trees.push_back(&br.refine_trees[node]);
    } else {
        const auto &moves = br.refine.edges();
        std::vector<double> cost(moves.size());
        for (size_t m = 0; m < moves.size(); m++) {
            double c = 0.0;
            for (int q : moves[m].qubits) c += stage1_flips[q] ? -weights_[q] : weights_[q];
            cost[m] = std::max(c, 0.0);
        }
        local.reserve(defects.size());
        for (int node : defects) local.push_back(br.refine.shortest_paths(node, cost));
        for (const auto &t : local) trees.push_back(&t);
    }
    match_and_lift(br.refine, trees, defects, br.refine_boundary, flips);
    return flips;
}

double CmwpmDecoder::correction_weight(const ErrorVector &e) const {
    double w = 0.0;
    for (size_t q = 0; q < e.size(); q++) {
        if (e[q]) w += weights_[q];
    }
    return w;
}

CmwpmDecoder::Candidate CmwpmDecoder::run_color(const SyndromeVector &s, Color excluded) const {
    ErrorVector q2 = stage2(s, excluded, stage1(s, excluded));
    double w = correction_weight(q2);
    return {excluded, std::move(q2), w};
}

DecodeResult CmwpmDecoder::decode(const SyndromeVector &s) const {
    if (s.size() != lattice_.num_faces()) throw std::invalid_argument("syndrome length mismatch");
    if (s.none()) return {LogicalClass::Identity, lattice_.empty_error()};
    Candidate best = run_color(s, Color::Red);
    for (Color c : {Color::Green, Color::Blue}) {
        Candidate cand = run_color(s, c);
        if (cand.weight < best.weight) best = std::move(cand);
    }
    bool flipped = lattice_.logical_parity(best.correction ^ lattice_.canonical_error(s));
    return {flipped ? LogicalClass::Logical : LogicalClass::Identity, std::move(best.correction)};
}

ErrorVector stage1_match(const CodeLattice &lattice, const NoiseProfile &profile,
                         const SyndromeVector &s, Color excluded) {
    return CmwpmDecoder(lattice, profile).stage1(s, excluded);
}

ErrorVector stage2_refine(const CodeLattice &lattice, const NoiseProfile &profile,
                          const SyndromeVector &s, Color excluded, const ErrorVector &stage1_flips,
                          MoveCost move_cost) {
    return CmwpmDecoder(lattice, profile, move_cost).stage2(s, excluded, stage1_flips);
}

DecodeResult decode_cmwpm(const CodeLattice &lattice, const NoiseProfile &profile,
                          const SyndromeVector &s, MoveCost move_cost) {
    return CmwpmDecoder(lattice, profile, move_cost).decode(s);
}

}  // namespace colorseam
