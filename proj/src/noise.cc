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

#include "colorseam/noise.h"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace colorseam {

NoiseProfile make_profile(const CodeLattice &lattice, double p_bulk, double lambda) {
    if (!(p_bulk >= 0.0)) throw std::invalid_argument("p_bulk must be non-negative");
    if (!(lambda >= 1.0)) throw std::invalid_argument("lambda must be at least 1");
    if (!(lambda * p_bulk < 0.5)) {
        throw std::invalid_argument("seam flip probability lambda * p = " +
                                    std::to_string(lambda * p_bulk) + " must be below 0.5");
    }
    NoiseProfile profile;
    profile.p_bulk = p_bulk;
    profile.lambda = lambda;
    profile.per_qubit.assign(lattice.num_qubits(), p_bulk);
    if (lambda != 1.0) {
        for (int q : lattice.seam_qubits()) profile.per_qubit[q] = lambda * p_bulk;
    }
    return profile;
}

std::vector<double> flip_weights(const NoiseProfile &profile) {
    std::vector<double> w;
    w.reserve(profile.per_qubit.size());
    for (double p : profile.per_qubit) {
        if (!(p > 0.0 && p < 0.5)) {
            throw std::invalid_argument("flip probability " + std::to_string(p) +
                                        " outside (0, 0.5) has no positive matching weight");
        }
        w.push_back(std::log((1.0 - p) / p));
    }
    return w;
}

ErrorVector sample_error(const NoiseProfile &profile, uint64_t seed) {
    // mt19937_64 output is fixed by the standard; the [0, 1) conversion is
    // done here because the library distributions are not portable.
    std::mt19937_64 rng(seed);
    ErrorVector e(profile.per_qubit.size());
    for (size_t q = 0; q < profile.per_qubit.size(); q++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < profile.per_qubit[q]) e.set(q, true);
    }
    return e;
}

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master_seed, uint64_t decoder_id, int distance, double lambda,
                     uint64_t p_index, uint64_t trial_index) {
    uint64_t h = mix64(master_seed);
    h = mix64(h ^ decoder_id);
    h = mix64(h ^ static_cast<uint64_t>(distance));
    h = mix64(h ^ std::bit_cast<uint64_t>(lambda));
    h = mix64(h ^ p_index);
    return mix64(h ^ trial_index);
}

}  // namespace colorseam
