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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace colorseam;

namespace {

SyndromeVector syndrome_from_mask(size_t faces, uint32_t m) {
    SyndromeVector s(faces);
    for (size_t f = 0; f < faces; f++) s.set(f, m >> f & 1);
    return s;
}

}  // namespace

TEST(exact_oracle, Distance3ZeroSyndromeClosedForm) {
    CodeLattice lattice(3);
    auto w = coset_weights(lattice, make_profile(lattice, 0.1, 1.0), lattice.empty_syndrome());
    // Every nontrivial stabilizer of the 7-qubit code has weight 4.
    double expected = std::pow(0.9, 7) + 7 * std::pow(0.1, 4) * std::pow(0.9, 3);
    EXPECT_NEAR(w.identity(), expected, 1e-15);
    EXPECT_GT(w.identity(), w.logical());
    // In units of 10^-7: 9^7 + 7 * 9^3 exactly.
    EXPECT_NEAR(w.identity() * 1e7, 4782969.0 + 7 * 729.0, 1e-6);
}

TEST(exact_oracle, MatchesDirectSumOnAllDistance3Syndromes) {
    CodeLattice lattice(3);
    auto group = oracle::stabilizer_group(lattice);
    for (double lambda : {1.0, 4.0}) {
        auto profile = make_profile(lattice, 0.1, lambda);
        double total = 0;
        for (uint32_t m = 0; m < 8; m++) {
            auto s = syndrome_from_mask(3, m);
            auto w = coset_weights(lattice, profile, s);
            uint64_t rep = oracle::to_mask(lattice.canonical_error(s));
            uint64_t logical = oracle::to_mask(lattice.logical_mask());
            EXPECT_NEAR(w.identity(), oracle::direct_coset_probability(group, rep, profile.per_qubit), 1e-14);
            EXPECT_NEAR(w.logical(), oracle::direct_coset_probability(group, rep ^ logical, profile.per_qubit), 1e-14);
            total += w.identity() + w.logical();
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(exact_oracle, MatchesDirectSumAtDistance5) {
    CodeLattice lattice(5);
    auto group = oracle::stabilizer_group(lattice);
    auto profile = make_profile(lattice, 0.07, 3.0);
    ExactDecoder oracle(lattice, profile);
    for (uint64_t t = 0; t < 30; t++) {
        auto e = sample_error(profile, t);
        auto w = oracle.coset_weights(lattice.syndrome(e));
        uint64_t rep = oracle::to_mask(lattice.canonical_error(lattice.syndrome(e)));
        double direct = oracle::direct_coset_probability(group, rep, profile.per_qubit);
        EXPECT_NEAR(w.log_identity, std::log(direct), 1e-10);
    }
}

TEST(exact_oracle, RepresentativeDoesNotMatter) {
    CodeLattice lattice(5);
    auto profile = make_profile(lattice, 0.1, 1.0);
    ExactDecoder oracle(lattice, profile);
    for (uint64_t t = 0; t < 20; t++) {
        ErrorVector e = sample_error(profile, t);
        SyndromeVector s = lattice.syndrome(e);
        auto w = oracle.coset_weights(s);
        // The coset of e is identity iff e and canonical_error(s) differ by a stabilizer.
        bool flipped = lattice.logical_parity(e ^ lattice.canonical_error(s));
        auto group = oracle::stabilizer_group(lattice);
        double direct = oracle::direct_coset_probability(group, oracle::to_mask(e), profile.per_qubit);
        EXPECT_NEAR(flipped ? w.log_logical : w.log_identity, std::log(direct), 1e-10);
    }
}

TEST(exact_oracle, ZeroSyndromeDecodesToIdentity) {
    for (int d : {3, 5, 7}) {
        CodeLattice lattice(d);
        for (double p : {0.01, 0.1, 0.3}) {
            auto r = exact_decode(lattice, make_profile(lattice, p, 1.0), lattice.empty_syndrome());
            EXPECT_EQ(r.logical_class, LogicalClass::Identity);
            EXPECT_TRUE(r.correction.none());
        }
    }
}

TEST(exact_oracle, CorrectsEverySingleFlipAtDistance3) {
    CodeLattice lattice(3);
    auto profile = make_profile(lattice, 0.05, 1.0);
    for (int q = 0; q < 7; q++) {
        std::vector<int> qs = {q};
        ErrorVector e = lattice.error_from_qubits(qs);
        auto r = exact_decode(lattice, profile, lattice.syndrome(e));
        EXPECT_EQ(lattice.syndrome(r.correction), lattice.syndrome(e));
        EXPECT_FALSE(lattice.logical_parity(e ^ r.correction)) << q;
    }
}

TEST(exact_oracle, ConsumesTheSeamProfile) {
    CodeLattice lattice(3);
    auto uniform = make_profile(lattice, 0.12, 1.0);
    auto seam = make_profile(lattice, 0.12, 4.0);
    int differ = 0;
    for (uint32_t m = 0; m < 8; m++) {
        auto s = syndrome_from_mask(3, m);
        differ += exact_decode(lattice, uniform, s).logical_class != exact_decode(lattice, seam, s).logical_class;
    }
    EXPECT_GE(differ, 1);
}

TEST(exact_oracle, CorrectionHasTheSyndrome) {
    CodeLattice lattice(7);
    auto profile = make_profile(lattice, 0.1, 1.0);
    ExactDecoder oracle(lattice, profile);
    for (uint64_t t = 0; t < 20; t++) {
        auto s = lattice.syndrome(sample_error(profile, t));
        auto r = oracle.decode(s);
        EXPECT_EQ(lattice.syndrome(r.correction), s);
        EXPECT_EQ(r.correction, coset_representative(lattice, s, r.logical_class));
    }
}

TEST(exact_oracle, ScalingInvariance) {
    // Comparing log weights: a common additive offset cannot change the winner.
    CodeLattice lattice(5);
    auto profile = make_profile(lattice, 0.09, 1.0);
    ExactDecoder oracle(lattice, profile);
    for (uint64_t t = 0; t < 50; t++) {
        auto w = oracle.coset_weights(lattice.syndrome(sample_error(profile, t)));
        for (double c : {-50.0, 3.0, 700.0}) {
            EXPECT_EQ(w.log_logical + c > w.log_identity + c, w.log_logical > w.log_identity);
        }
    }
}

TEST(exact_oracle, RejectsLargeDistance) {
    CodeLattice lattice(9);
    EXPECT_THROW(ExactDecoder(lattice, make_profile(lattice, 0.1, 1.0)), std::invalid_argument);
}
