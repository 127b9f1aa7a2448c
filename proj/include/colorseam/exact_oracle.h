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

#ifndef COLORSEAM_EXACT_ORACLE_H
#define COLORSEAM_EXACT_ORACLE_H

#include <cmath>
#include <cstdint>
#include <vector>

#include "colorseam/decoder.h"

namespace colorseam {

/// Total probability of the two cosets consistent with a syndrome, kept as
/// natural logs.
struct CosetWeights {
    double log_identity;
    double log_logical;
    double identity() const { return std::exp(log_identity); }
    double logical() const { return std::exp(log_logical); }
};

/// Maximum-likelihood decoding by summing over all 2^F stabilizer-group
/// elements. Only for d <= 7.
class ExactDecoder final : public Decoder {
   public:
    static constexpr int kMaxDistance = 7;

    ExactDecoder(const CodeLattice &lattice, const NoiseProfile &profile);

    CosetWeights coset_weights(const SyndromeVector &s) const;
    DecodeResult decode(const SyndromeVector &s) const override;

   private:
    double coset_log_weight(uint64_t representative) const;

    const CodeLattice &lattice_;
    std::vector<uint64_t> face_masks_;
    std::vector<double> log_flip_;   // ln p_q
    std::vector<double> log_keep_;   // ln (1 - p_q)
    uint64_t logical_mask_ = 0;
};

CosetWeights coset_weights(const CodeLattice &lattice, const NoiseProfile &profile,
                           const SyndromeVector &s);
DecodeResult exact_decode(const CodeLattice &lattice, const NoiseProfile &profile,
                          const SyndromeVector &s);

}  // namespace colorseam

#endif
