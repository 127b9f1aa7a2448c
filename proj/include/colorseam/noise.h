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

#ifndef COLORSEAM_NOISE_H
#define COLORSEAM_NOISE_H

#include <cstdint>
#include <vector>

#include "colorseam/lattice.h"

namespace colorseam {

/// Independent bit-flip probabilities per qubit. Seam qubits flip with
/// probability lambda * p_bulk, all others with p_bulk.
struct NoiseProfile {
    double p_bulk = 0.0;
    double lambda = 1.0;
    std::vector<double> per_qubit;
};

/// Throws std::invalid_argument when p_bulk < 0, lambda < 1, or
/// lambda * p_bulk >= 0.5.
NoiseProfile make_profile(const CodeLattice &lattice, double p_bulk, double lambda);

/// Log-likelihood cost ln((1 - p) / p) of flipping each qubit. Requires every
/// probability in (0, 0.5).
std::vector<double> flip_weights(const NoiseProfile &profile);

/// Draws an error vector. Bit-identical on every platform for a given seed.
ErrorVector sample_error(const NoiseProfile &profile, uint64_t seed);

/// splitmix64 finaliser.
uint64_t mix64(uint64_t x);

/// Per-trial seed: a hash of everything that identifies the trial, so results
/// do not depend on which worker ran it.
uint64_t derive_seed(uint64_t master_seed, uint64_t decoder_id, int distance, double lambda,
                     uint64_t p_index, uint64_t trial_index);

}  // namespace colorseam

#endif
