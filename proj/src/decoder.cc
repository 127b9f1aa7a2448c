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

#include "colorseam/decoder.h"

#include <stdexcept>

#include "colorseam/cmwpm_decoder.h"
#include "colorseam/exact_oracle.h"
#include "colorseam/mps_decoder.h"

namespace colorseam {

std::string_view decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::Mps:
            return "mps";
        case DecoderKind::Cmwpm:
            return "cmwpm";
        case DecoderKind::Oracle:
            return "oracle";
    }
    throw std::invalid_argument("unknown decoder kind");
}

DecoderKind parse_decoder_kind(std::string_view name) {
    if (name == "mps") return DecoderKind::Mps;
    if (name == "cmwpm") return DecoderKind::Cmwpm;
    if (name == "oracle") return DecoderKind::Oracle;
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "' (expected mps, cmwpm or oracle)");
}

uint64_t decoder_seed_id(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::Mps:
            return 1;
        case DecoderKind::Cmwpm:
            return 2;
        case DecoderKind::Oracle:
            return 3;
    }
    throw std::invalid_argument("unknown decoder kind");
}

std::unique_ptr<Decoder> make_decoder(const DecoderSpec &spec, const CodeLattice &lattice,
                                      const NoiseProfile &profile) {
    switch (spec.kind) {
        case DecoderKind::Mps:
            return std::make_unique<MpsDecoder>(lattice, profile, spec.chi);
        case DecoderKind::Cmwpm:
            return std::make_unique<CmwpmDecoder>(lattice, profile);
        case DecoderKind::Oracle:
            return std::make_unique<ExactDecoder>(lattice, profile);
    }
    throw std::invalid_argument("unknown decoder kind");
}

ErrorVector coset_representative(const CodeLattice &lattice, const SyndromeVector &s,
                                 LogicalClass cls) {
    ErrorVector e = lattice.canonical_error(s);
    if (cls == LogicalClass::Logical) e ^= lattice.logical_mask();
    return e;
}

}  // namespace colorseam
