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

#ifndef COLORSEAM_LATTICE_H
#define COLORSEAM_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace colorseam {

enum class Color : uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Color, 3> kAllColors = {Color::Red, Color::Green, Color::Blue};

std::string_view color_name(Color c);

/// A fixed-length bit vector. The tag keeps qubit-indexed and face-indexed
/// vectors from being mixed up.
template <typename Tag>
class Bits {
   public:
    Bits() = default;
    explicit Bits(size_t n) : bits_(n, 0) {}
    explicit Bits(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
        for (auto &b : bits_) b = b ? 1 : 0;
    }

    size_t size() const { return bits_.size(); }
    bool operator[](size_t i) const { return bits_[i] != 0; }
    void set(size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void flip(size_t i) { bits_[i] ^= 1; }

    size_t weight() const {
        size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }
    bool none() const { return weight() == 0; }

    std::vector<size_t> ones() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < bits_.size(); i++) {
            if (bits_[i]) out.push_back(i);
        }
        return out;
    }

    Bits &operator^=(const Bits &other);
    Bits operator^(const Bits &other) const {
        Bits r = *this;
        r ^= other;
        return r;
    }
    bool operator==(const Bits &other) const = default;

    std::span<const uint8_t> raw() const { return bits_; }

   private:
    std::vector<uint8_t> bits_;
};

template <typename Tag>
Bits<Tag> &Bits<Tag>::operator^=(const Bits &other) {
    if (other.bits_.size() != bits_.size()) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t i = 0; i < bits_.size(); i++) bits_[i] ^= other.bits_[i];
    return *this;
}

struct ErrorTag;
struct SyndromeTag;

/// Bit q set iff qubit q carries an X flip.
using ErrorVector = Bits<ErrorTag>;
/// Bit f set iff the Z-type check on face f is violated.
using SyndromeVector = Bits<SyndromeTag>;

struct QubitSite {
    int row;
    int col;
    bool seam;
    /// Incident face of each color, indexed by Color; -1 when absent.
    std::array<int, 3> face_of_color;
};

struct FaceSite {
    int row;
    int col;
    Color color;
    /// Incident qubits in cyclic order around the face (4 or 6 of them).
    std::vector<int> qubits;
};

/// Distance-d triangular 6.6.6 color code.
///
/// Sites are points (row, col) with 0 <= col <= row <= 3(d-1)/2 of a
/// triangular lattice whose neighbours are (0,+-1), (+-1,0), +-(1,1). Points
/// with (row + col) % 3 == 1 are face centres; the rest are qubits. A face is
/// colored by row % 3 (Red, Green, Blue), which puts the Red boundary on the
/// last row, Green on col == 0 and Blue on col == row.
///
/// Qubits and faces are both numbered row-major. The same incidence matrix
/// serves X- and Z-type checks.
class CodeLattice {
   public:
    static constexpr int kMaxDistance = 49;

    /// Throws std::invalid_argument unless d is odd and 3 <= d <= 49.
    explicit CodeLattice(int distance);

    int distance() const { return distance_; }
    /// Largest row/column index, 3(d-1)/2.
    int extent() const { return extent_; }
    size_t num_qubits() const { return qubits_.size(); }
    size_t num_faces() const { return faces_.size(); }

    const std::vector<QubitSite> &qubits() const { return qubits_; }
    const std::vector<FaceSite> &faces() const { return faces_; }
    const QubitSite &qubit(size_t q) const { return qubits_[q]; }
    const FaceSite &face(size_t f) const { return faces_[f]; }
    /// Faces incident to qubit q in ascending index order.
    std::span<const int> faces_of_qubit(size_t q) const { return qubit_faces_[q]; }

    /// Qubit index at a lattice point, or -1 for face centres and points
    /// outside the triangle.
    int qubit_at(int row, int col) const;
    /// Face index at a lattice point, or -1.
    int face_at(int row, int col) const;

    /// One fixed logical representative: the qubits of the Red (last-row)
    /// boundary.
    const std::vector<int> &logical_support() const { return logical_support_; }
    const ErrorVector &logical_mask() const { return logical_mask_; }
    /// Qubits on any of the three sides of the triangle.
    const std::vector<int> &seam_qubits() const { return seam_qubits_; }
    const std::array<int, 3> &corner_qubits() const { return corners_; }
    /// Nearest-neighbour qubit pairs (edges of the hexagonal lattice), a < b.
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }

    SyndromeVector syndrome(const ErrorVector &e) const;
    bool logical_parity(const ErrorVector &e) const;
    /// Deterministic error with the given syndrome (pivot-column solution of
    /// H e = s).
    ErrorVector canonical_error(const SyndromeVector &s) const;

    ErrorVector empty_error() const { return ErrorVector(num_qubits()); }
    SyndromeVector empty_syndrome() const { return SyndromeVector(num_faces()); }
    ErrorVector error_from_qubits(std::span<const int> qubits) const;

   private:
    void build_sites();
    void build_solver();

    int distance_;
    int extent_;
    std::vector<QubitSite> qubits_;
    std::vector<FaceSite> faces_;
    std::vector<std::vector<int>> qubit_faces_;
    std::vector<int> site_index_;  // (row, col) -> qubit id, or -(face id) - 2, or -1
    std::vector<int> logical_support_;
    ErrorVector logical_mask_;
    std::vector<int> seam_qubits_;
    std::array<int, 3> corners_{};
    std::vector<std::pair<int, int>> edges_;

    // Reduced form of H: row i of (T H) has its leading one at pivot_col_[i].
    size_t words_per_syndrome_ = 0;
    std::vector<uint64_t> transform_;  // F rows of F bits
    std::vector<int> pivot_col_;
};

}  // namespace colorseam

#endif
