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

#ifndef COLORSEAM_RESTRICTED_GRAPH_H
#define COLORSEAM_RESTRICTED_GRAPH_H

#include <span>
#include <vector>

#include "colorseam/lattice.h"
#include "colorseam/noise.h"

namespace colorseam {

/// Undirected multigraph whose edges stand for flipping a small set of qubits.
class PathGraph {
   public:
    struct Edge {
        int u;
        int v;
        double weight;
        std::vector<int> qubits;
    };

    struct Tree {
        std::vector<double> dist;
        std::vector<int> via_edge;  // edge used to reach each node, -1 at the source
    };

    PathGraph() = default;
    PathGraph(int num_nodes, std::vector<Edge> edges);

    int num_nodes() const { return num_nodes_; }
    const std::vector<Edge> &edges() const { return edges_; }

    /// Dijkstra from source. Among equal-length paths the one arriving over
    /// the lower-indexed edge wins.
    Tree shortest_paths(int source) const;
    /// Same search with edge k weighted edge_weights[k] instead.
    Tree shortest_paths(int source, std::span<const double> edge_weights) const;
    /// XORs the qubits of the tree path from the source to target into flips.
    void lift_path(const Tree &tree, int target, ErrorVector &flips) const;

   private:
    Tree search(int source, const double *edge_weights) const;

    int num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Matching graph with one color of faces removed. Nodes are the faces of the
/// two remaining colors plus one virtual boundary node (the last node). Each
/// qubit is one edge between its two non-excluded faces, or between its only
/// such face and the boundary; a qubit touching none becomes a boundary
/// self-loop so that every qubit is represented.
struct RestrictedGraph {
    Color excluded;
    std::vector<int> node_face;  // -1 for the boundary node
    std::vector<int> face_node;  // -1 for faces of the excluded color
    int boundary_node;
    PathGraph graph;  // edge i is qubit i, weight ln((1 - p) / p)
};

/// Throws std::invalid_argument if any flip probability is outside (0, 0.5).
RestrictedGraph restricted_graph(const CodeLattice &lattice, Color excluded,
                                 const NoiseProfile &profile);

}  // namespace colorseam

#endif
