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

#ifndef COLORSEAM_INTERCONNECT_H
#define COLORSEAM_INTERCONNECT_H

#include <cstdint>
#include <string_view>

namespace colorseam {

/// Bell pairs consumed by one round of one stabilizer type when a patch with
/// k qubits per boundary edge is joined to its neighbours.
struct BellPairCount {
    int per_edge;
    int total;
};

/// per_edge = 2(k - 1), total = 6(k - 1). Throws std::invalid_argument for k < 2.
BellPairCount bell_pairs_per_round(int k);

enum class Side { A, B };

struct AncillaPlacement {
    Side side;
    /// Data qubits on the other side, each needing one teleported CNOT.
    int bell_pairs;
};

/// Puts a face's ancilla on the side holding more of its data qubits; an
/// even split goes to A. The face must have 4 or 6 qubits in total.
AncillaPlacement ancilla_placement(int qubits_on_a, int qubits_on_b);

/// Single-qubit Pauli as (x, z) bits.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

Pauli operator*(Pauli a, Pauli b);
std::string_view pauli_name(Pauli p);

struct CnotEffect {
    Pauli control;
    Pauli target;
    bool operator==(const CnotEffect &) const = default;
};

/// Where a Pauli error on the Bell pair ends up after a teleported CNOT:
/// X goes to the target, Z to the control.
CnotEffect propagate_bell_pauli(Pauli error);

}  // namespace colorseam

#endif
