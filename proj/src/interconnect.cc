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

#include "colorseam/interconnect.h"

#include <stdexcept>
#include <string>

namespace colorseam {

BellPairCount bell_pairs_per_round(int k) {
    if (k < 2) throw std::invalid_argument("need at least 2 qubits per boundary edge, got " + std::to_string(k));
    return {2 * (k - 1), 6 * (k - 1)};
}

AncillaPlacement ancilla_placement(int qubits_on_a, int qubits_on_b) {
    if (qubits_on_a < 0 || qubits_on_b < 0) throw std::invalid_argument("negative qubit count");
    int total = qubits_on_a + qubits_on_b;
    if (total != 4 && total != 6) {
        throw std::invalid_argument("a face has 4 or 6 qubits, got " + std::to_string(total));
    }
    if (qubits_on_b > qubits_on_a) return {Side::B, qubits_on_a};
    return {Side::A, qubits_on_b};
}

Pauli operator*(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

std::string_view pauli_name(Pauli p) {
    switch (p) {
        case Pauli::I:
            return "I";
        case Pauli::X:
            return "X";
        case Pauli::Z:
            return "Z";
        case Pauli::Y:
            return "Y";
    }
    return "?";
}

CnotEffect propagate_bell_pauli(Pauli error) {
    auto bits = static_cast<uint8_t>(error);
    return {(bits & 2) ? Pauli::Z : Pauli::I, (bits & 1) ? Pauli::X : Pauli::I};
}

}  // namespace colorseam
