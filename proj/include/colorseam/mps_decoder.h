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

#ifndef COLORSEAM_MPS_DECODER_H
#define COLORSEAM_MPS_DECODER_H

#include <array>
#include <vector>

#include "colorseam/decoder.h"

namespace colorseam {

/// Approximate maximum-likelihood decoder.
///
/// The coset sum over all stabilizer-group elements is written as a planar
/// tensor network: every face carries a binary variable (whether its
/// stabilizer is included), realised as a copy tensor, and every qubit a
/// factor w_q(b) = 1 - p_q or p_q on its flip bit b. The network sits on the
/// same triangular grid as the lattice, so each site has four legs (N, E, S,
/// W) of dimension at most 2; the diagonal face-qubit bonds are routed through
/// the neighbouring site. Rows are absorbed top to bottom into a boundary MPS
/// that is compressed back to bond dimension chi by SVD after every row.
///
/// The logical representative lives entirely on the last row, so both cosets
/// share the sweep up to that row.
class MpsDecoder final : public Decoder {
   public:
    /// chi == 0 disables truncation.
    MpsDecoder(const CodeLattice &lattice, const NoiseProfile &profile, int chi);

    int chi() const { return chi_; }

    /// ln of the approximate weights of the identity and logical cosets.
    std::array<double, 2> coset_log_weights(const SyndromeVector &s) const;
    double coset_log_weight(const SyndromeVector &s, LogicalClass cls) const;

    DecodeResult decode(const SyndromeVector &s) const override;

   private:
    const CodeLattice &lattice_;
    std::vector<double> p_flip_;
    int chi_;
};

double coset_weight_mps(const CodeLattice &lattice, const NoiseProfile &profile,
                        const SyndromeVector &s, LogicalClass cls, int chi);
DecodeResult decode_mps(const CodeLattice &lattice, const NoiseProfile &profile,
                        const SyndromeVector &s, int chi);

}  // namespace colorseam

#endif
