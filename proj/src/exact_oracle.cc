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

#include "colorseam/exact_oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <span>
#include <stdexcept>

namespace colorseam {

namespace {

// Fixed-tree pairwise sum so the result does not depend on how the terms are
// produced.
double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

uint64_t pack(const ErrorVector &e) {
    uint64_t m = 0;
    for (size_t q = 0; q < e.size(); q++) {
        if (e[q]) m |= uint64_t{1} << q;
    }
    return m;
}

}  // namespace

ExactDecoder::ExactDecoder(const CodeLattice &lattice, const NoiseProfile &profile)
    : lattice_(lattice) {
    if (lattice.distance() > kMaxDistance) {
        throw std::invalid_argument("exhaustive decoding is limited to d <= 7");
    }
    if (profile.per_qubit.size() != lattice.num_qubits()) {
        throw std::invalid_argument("noise profile does not match lattice");
    }
    for (const auto &face : lattice.faces()) {
        uint64_t m = 0;
        for (int q : face.qubits) m |= uint64_t{1} << q;
        face_masks_.push_back(m);
    }
    for (double p : profile.per_qubit) {
        if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("flip probability outside [0, 1)");
        log_flip_.push_back(std::log(p));
        log_keep_.push_back(std::log1p(-p));
    }
    logical_mask_ = pack(lattice.logical_mask());
}

double ExactDecoder::coset_log_weight(uint64_t representative) const {
    const size_t F = face_masks_.size();
    const size_t n = log_flip_.size();
    std::vector<double> terms(size_t{1} << F);
    uint64_t pattern = representative;
    for (uint64_t i = 0; i < terms.size(); i++) {
        if (i) pattern ^= face_masks_[std::countr_zero(i)];  // Gray-code step
        double lw = 0.0;
        for (size_t q = 0; q < n; q++) lw += (pattern >> q) & 1 ? log_flip_[q] : log_keep_[q];
        terms[i] = lw;
    }
    double top = *std::max_element(terms.begin(), terms.end());
    if (top == -std::numeric_limits<double>::infinity()) return top;
    for (double &t : terms) t = std::exp(t - top);
    return top + std::log(pairwise_sum(terms));
}

CosetWeights ExactDecoder::coset_weights(const SyndromeVector &s) const {
    uint64_t rep = pack(lattice_.canonical_error(s));
    return {coset_log_weight(rep), coset_log_weight(rep ^ logical_mask_)};
}

DecodeResult ExactDecoder::decode(const SyndromeVector &s) const {
    CosetWeights w = coset_weights(s);
    LogicalClass cls =
        w.log_logical > w.log_identity ? LogicalClass::Logical : LogicalClass::Identity;
    return {cls, coset_representative(lattice_, s, cls)};
}

CosetWeights coset_weights(const CodeLattice &lattice, const NoiseProfile &profile,
                           const SyndromeVector &s) {
    return ExactDecoder(lattice, profile).coset_weights(s);
}

DecodeResult exact_decode(const CodeLattice &lattice, const NoiseProfile &profile,
                          const SyndromeVector &s) {
    return ExactDecoder(lattice, profile).decode(s);
}

}  // namespace colorseam
