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

#include "colorseam/restricted_graph.h"

#include <limits>
#include <queue>
#include <stdexcept>

namespace colorseam {

namespace {
constexpr double kInfinity = std::numeric_limits<double>::infinity();
}  // namespace

PathGraph::PathGraph(int num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)), incident_(num_nodes) {
    for (size_t k = 0; k < edges_.size(); k++) {
        const auto &e = edges_[k];
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes) {
            throw std::invalid_argument("path graph edge endpoint out of range");
        }
        if (!(e.weight >= 0.0)) throw std::invalid_argument("path graph weights must be non-negative");
        incident_[e.u].push_back(static_cast<int>(k));
        if (e.v != e.u) incident_[e.v].push_back(static_cast<int>(k));
    }
}

PathGraph::Tree PathGraph::shortest_paths(int source) const { return search(source, nullptr); }

PathGraph::Tree PathGraph::shortest_paths(int source, std::span<const double> edge_weights) const {
    if (edge_weights.size() != edges_.size()) throw std::invalid_argument("edge weight count mismatch");
    for (double w : edge_weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("path graph weights must be non-negative");
    }
    return search(source, edge_weights.data());
}

PathGraph::Tree PathGraph::search(int source, const double *edge_weights) const {
    Tree tree;
    tree.dist.assign(num_nodes_, kInfinity);
    tree.via_edge.assign(num_nodes_, -1);
    std::vector<bool> done(num_nodes_, false);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    tree.dist[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = true;
        for (int k : incident_[u]) {
            const auto &e = edges_[k];
            int v = e.u == u ? e.v : e.u;
            if (done[v]) continue;
            double nd = d + (edge_weights ? edge_weights[k] : e.weight);
            double &cur = tree.dist[v];
            bool better = nd < cur - 1e-12 * nd ||
                          (nd <= cur + 1e-12 * nd && tree.via_edge[v] > k);
            if (better) {
                cur = std::min(cur, nd);
                tree.via_edge[v] = k;
                heap.emplace(cur, v);
            }
        }
    }
    return tree;
}

void PathGraph::lift_path(const Tree &tree, int target, ErrorVector &flips) const {
    if (tree.dist[target] == kInfinity) throw std::logic_error("lifting a path to an unreachable node");
    int node = target;
    while (tree.via_edge[node] != -1) {
        const auto &e = edges_[tree.via_edge[node]];
        for (int q : e.qubits) flips.flip(q);
        node = e.u == node ? e.v : e.u;
    }
}

RestrictedGraph restricted_graph(const CodeLattice &lattice, Color excluded,
                                 const NoiseProfile &profile) {
    if (profile.per_qubit.size() != lattice.num_qubits()) {
        throw std::invalid_argument("noise profile does not match lattice");
    }
    std::vector<double> weights = flip_weights(profile);

    RestrictedGraph g;
    g.excluded = excluded;
    g.face_node.assign(lattice.num_faces(), -1);
    for (size_t f = 0; f < lattice.num_faces(); f++) {
        if (lattice.face(f).color == excluded) continue;
        g.face_node[f] = static_cast<int>(g.node_face.size());
        g.node_face.push_back(static_cast<int>(f));
    }
    g.boundary_node = static_cast<int>(g.node_face.size());
    g.node_face.push_back(-1);

    std::vector<PathGraph::Edge> edges;
    for (size_t q = 0; q < lattice.num_qubits(); q++) {
        std::vector<int> ends;
        for (Color c : kAllColors) {
            int f = lattice.qubit(q).face_of_color[static_cast<int>(c)];
            if (c != excluded && f >= 0) ends.push_back(g.face_node[f]);
        }
        while (ends.size() < 2) ends.push_back(g.boundary_node);
        edges.push_back({ends[0], ends[1], weights[q], {static_cast<int>(q)}});
    }
    g.graph = PathGraph(static_cast<int>(g.node_face.size()), std::move(edges));
    return g;
}

}  // namespace colorseam
