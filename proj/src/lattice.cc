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

#include "colorseam/lattice.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace colorseam {

std::string_view color_name(Color c) {
    switch (c) {
        case Color::Red:
            return "red";
        case Color::Green:
            return "green";
        case Color::Blue:
            return "blue";
    }
    return "?";
}

CodeLattice::CodeLattice(int distance) : distance_(distance) {
    if (distance < 3 || distance > kMaxDistance || distance % 2 == 0) {
        throw std::invalid_argument(
            "code distance must be odd and in [3, " + std::to_string(kMaxDistance) + "], got " +
            std::to_string(distance));
    }
    extent_ = 3 * (distance - 1) / 2;
    build_sites();
    build_solver();
}

int CodeLattice::qubit_at(int row, int col) const {
    if (row < 0 || row > extent_ || col < 0 || col > row) return -1;
    int v = site_index_[row * (extent_ + 1) + col];
    return v >= 0 ? v : -1;
}

int CodeLattice::face_at(int row, int col) const {
    if (row < 0 || row > extent_ || col < 0 || col > row) return -1;
    int v = site_index_[row * (extent_ + 1) + col];
    return v <= -2 ? -v - 2 : -1;
}

void CodeLattice::build_sites() {
    const int B = extent_;
    site_index_.assign((B + 1) * (B + 1), -1);
    for (int r = 0; r <= B; r++) {
        for (int c = 0; c <= r; c++) {
            int &slot = site_index_[r * (B + 1) + c];
            if ((r + c) % 3 == 1) {
                slot = -static_cast<int>(faces_.size()) - 2;
                faces_.push_back(FaceSite{r, c, static_cast<Color>(r % 3), {}});
            } else {
                slot = static_cast<int>(qubits_.size());
                bool seam = c == 0 || c == r || r == B;
                qubits_.push_back(QubitSite{r, c, seam, {-1, -1, -1}});
            }
        }
    }

    // Neighbours of a face centre, walking around the hexagon.
    static constexpr int kRing[6][2] = {{-1, -1}, {-1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, -1}};
    qubit_faces_.assign(qubits_.size(), {});
    for (size_t f = 0; f < faces_.size(); f++) {
        auto &face = faces_[f];
        for (const auto &d : kRing) {
            int q = qubit_at(face.row + d[0], face.col + d[1]);
            if (q < 0) continue;
            face.qubits.push_back(q);
            qubit_faces_[q].push_back(static_cast<int>(f));
            auto &slot = qubits_[q].face_of_color[static_cast<int>(face.color)];
            if (slot != -1) throw std::logic_error("qubit touches two faces of one color");
            slot = static_cast<int>(f);
        }
    }

    logical_mask_ = ErrorVector(qubits_.size());
    for (size_t q = 0; q < qubits_.size(); q++) {
        const auto &site = qubits_[q];
        if (site.seam) seam_qubits_.push_back(static_cast<int>(q));
        if (site.row == B) {
            logical_support_.push_back(static_cast<int>(q));
            logical_mask_.set(q, true);
        }
        for (const auto &d : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
            int other = qubit_at(site.row + d.first, site.col + d.second);
            if (other >= 0) edges_.emplace_back(static_cast<int>(q), other);
        }
    }
    corners_ = {qubit_at(0, 0), qubit_at(B, 0), qubit_at(B, B)};
}

void CodeLattice::build_solver() {
    const size_t n = num_qubits();
    const size_t F = num_faces();
    const size_t hw = (n + 63) / 64;
    words_per_syndrome_ = (F + 63) / 64;
    const size_t sw = words_per_syndrome_;

    std::vector<uint64_t> h(F * hw, 0);
    transform_.assign(F * sw, 0);
    for (size_t f = 0; f < F; f++) {
        for (int q : faces_[f].qubits) h[f * hw + q / 64] |= uint64_t{1} << (q % 64);
        transform_[f * sw + f / 64] |= uint64_t{1} << (f % 64);
    }

    auto swap_rows = [](std::vector<uint64_t> &m, size_t w, size_t a, size_t b) {
        for (size_t k = 0; k < w; k++) std::swap(m[a * w + k], m[b * w + k]);
    };
    auto xor_row = [](std::vector<uint64_t> &m, size_t w, size_t dst, size_t src) {
        for (size_t k = 0; k < w; k++) m[dst * w + k] ^= m[src * w + k];
    };

    pivot_col_.clear();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < F; col++) {
        const uint64_t bit = uint64_t{1} << (col % 64);
        size_t pivot = rank;
        while (pivot < F && !(h[pivot * hw + col / 64] & bit)) pivot++;
        if (pivot == F) continue;
        swap_rows(h, hw, pivot, rank);
        swap_rows(transform_, sw, pivot, rank);
        for (size_t r = 0; r < F; r++) {
            if (r != rank && (h[r * hw + col / 64] & bit)) {
                xor_row(h, hw, r, rank);
                xor_row(transform_, sw, r, rank);
            }
        }
        pivot_col_.push_back(static_cast<int>(col));
        rank++;
    }
    if (rank != F) throw std::logic_error("face checks are not independent");
}

SyndromeVector CodeLattice::syndrome(const ErrorVector &e) const {
    if (e.size() != num_qubits()) {
        throw std::invalid_argument("error vector has length " + std::to_string(e.size()) +
                                    ", expected " + std::to_string(num_qubits()));
    }
    SyndromeVector s(num_faces());
    for (size_t f = 0; f < faces_.size(); f++) {
        bool parity = false;
        for (int q : faces_[f].qubits) parity ^= e[q];
        s.set(f, parity);
    }
    return s;
}

bool CodeLattice::logical_parity(const ErrorVector &e) const {
    if (e.size() != num_qubits()) throw std::invalid_argument("error vector length mismatch");
    bool parity = false;
    for (int q : logical_support_) parity ^= e[q];
    return parity;
}

ErrorVector CodeLattice::canonical_error(const SyndromeVector &s) const {
    if (s.size() != num_faces()) {
        throw std::invalid_argument("syndrome has length " + std::to_string(s.size()) +
                                    ", expected " + std::to_string(num_faces()));
    }
    const size_t sw = words_per_syndrome_;
    std::vector<uint64_t> packed(sw, 0);
    for (size_t f = 0; f < s.size(); f++) {
        if (s[f]) packed[f / 64] |= uint64_t{1} << (f % 64);
    }
    ErrorVector e(num_qubits());
    for (size_t i = 0; i < pivot_col_.size(); i++) {
        uint64_t acc = 0;
        for (size_t k = 0; k < sw; k++) acc ^= transform_[i * sw + k] & packed[k];
        if (std::popcount(acc) & 1) e.set(pivot_col_[i], true);
    }
    return e;
}

ErrorVector CodeLattice::error_from_qubits(std::span<const int> qubits) const {
    ErrorVector e(num_qubits());
    for (int q : qubits) {
        if (q < 0 || static_cast<size_t>(q) >= num_qubits()) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
        }
        e.flip(q);
    }
    return e;
}

}  // namespace colorseam
