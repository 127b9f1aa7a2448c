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

#ifndef COLORSEAM_DECODER_H
#define COLORSEAM_DECODER_H

#include <memory>
#include <string>
#include <string_view>

#include "colorseam/lattice.h"
#include "colorseam/noise.h"

namespace colorseam {

enum class LogicalClass { Identity, Logical };

struct DecodeResult {
    LogicalClass logical_class = LogicalClass::Identity;
    ErrorVector correction;
};

/// A decoder bound to one lattice and noise profile. decode() is const and
/// safe to call from several threads at once.
class Decoder {
   public:
    virtual ~Decoder() = default;
    virtual DecodeResult decode(const SyndromeVector &syndrome) const = 0;
};

enum class DecoderKind { Mps, Cmwpm, Oracle };

struct DecoderSpec {
    DecoderKind kind = DecoderKind::Mps;
    /// MPS bond dimension; 0 means no truncation.
    int chi = 8;
};

std::string_view decoder_name(DecoderKind kind);
/// Parses "mps", "cmwpm" or "oracle"; throws std::invalid_argument otherwise.
DecoderKind parse_decoder_kind(std::string_view name);
/// Stable numeric id mixed into per-trial seeds.
uint64_t decoder_seed_id(DecoderKind kind);

std::unique_ptr<Decoder> make_decoder(const DecoderSpec &spec, const CodeLattice &lattice,
                                      const NoiseProfile &profile);

/// canonical_error(s), plus the logical support when cls is Logical.
ErrorVector coset_representative(const CodeLattice &lattice, const SyndromeVector &s,
                                 LogicalClass cls);

}  // namespace colorseam

#endif
