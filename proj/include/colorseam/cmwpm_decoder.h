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

#ifndef COLORSEAM_CMWPM_DECODER_H
#define COLORSEAM_CMWPM_DECODER_H

#include <array>
#include <vector>

#include "colorseam/decoder.h"
#include "colorseam/restricted_graph.h"

namespace colorseam {

/// Cost of a stage-2 move.
enum class MoveCost {
    /// Summed flip weight of the move's qubits.
    Fixed,
    /// Change in correction weight: qubits already flipped by stage 1 count
    /// negatively, and the total is clamped at zero. Re-routing stage 1
    /// through the other qubit of an edge is then free.
    Relative,
};

/// Concatenated matching decoder.
///
/// For each excluded color C: stage 1 matches the violated checks of the
/// other two colors on the C-restricted graph and flips the qubits along the
/// matched shortest paths. Stage 2 clears the remaining C checks by matching
/// them on a graph of C faces whose edges are qubit moves that toggle only C
/// checks: two qubits incident to exactly the same checks of the other two
/// colors, or a single qubit that touches no other color. The lightest of the three
/// corrections (by summed ln((1 - p) / p)) is returned, ties going to
/// Red, then Green, then Blue.
class CmwpmDecoder final : public Decoder {
   public:
    struct Candidate {
        Color excluded;
        ErrorVector correction;
        double weight;
    };

    /// Requires every flip probability in (0, 0.5).
    CmwpmDecoder(const CodeLattice &lattice, const NoiseProfile &profile,
                 MoveCost move_cost = MoveCost::Relative);

    MoveCost move_cost() const { return move_cost_; }

    ErrorVector stage1(const SyndromeVector &s, Color excluded) const;
    ErrorVector stage2(const SyndromeVector &s, Color excluded, const ErrorVector &stage1_flips) const;
    Candidate run_color(const SyndromeVector &s, Color excluded) const;
    DecodeResult decode(const SyndromeVector &s) const override;

    double correction_weight(const ErrorVector &e) const;
    const RestrictedGraph &restricted(Color c) const { return branches_[static_cast<int>(c)].restricted; }
    /// Stage-2 graph; node i is face refine_faces(c)[i], the last node is the boundary.
    const PathGraph &refinement_graph(Color c) const { return branches_[static_cast<int>(c)].refine; }
    const std::vector<int> &refine_faces(Color c) const { return branches_[static_cast<int>(c)].refine_faces; }

   private:
    struct Branch {
        RestrictedGraph restricted;
        std::vector<PathGraph::Tree> restricted_trees;
        PathGraph refine;
        std::vector<int> refine_faces;
        std::vector<int> refine_face_node;
        int refine_boundary = 0;
        std::vector<PathGraph::Tree> refine_trees;
    };

    // Matches the given nodes (with boundary) and XORs the lifted paths into
    // flips. trees[i] is the shortest-path tree rooted at nodes[i].
    static void match_and_lift(const PathGraph &graph, const std::vector<const PathGraph::Tree *> &trees,
                               const std::vector<int> &nodes, int boundary, ErrorVector &flips);

    const CodeLattice &lattice_;
    std::vector<double> weights_;
    MoveCost move_cost_;
    std::array<Branch, 3> branches_;
};

ErrorVector stage1_match(const CodeLattice &lattice, const NoiseProfile &profile,
                         const SyndromeVector &s, Color excluded);
ErrorVector stage2_refine(const CodeLattice &lattice, const NoiseProfile &profile,
                          const SyndromeVector &s, Color excluded, const ErrorVector &stage1_flips,
                          MoveCost move_cost = MoveCost::Relative);
DecodeResult decode_cmwpm(const CodeLattice &lattice, const NoiseProfile &profile,
                          const SyndromeVector &s, MoveCost move_cost = MoveCost::Relative);

}  // namespace colorseam

#endif
