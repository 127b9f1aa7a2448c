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

#include "colorseam/cmwpm_decoder.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "colorseam/exact_oracle.h"
#include "colorseam/harness.h"

using namespace colorseam;

namespace {

// Syndrome bits restricted to faces not of the given color.
std::vector<bool> other_colors(const CodeLattice &lattice, const SyndromeVector &s, Color excluded) {
    std::vector<bool> out;
    for (size_t f = 0; f < s.size(); f++) {
        if (lattice.face(f).color != excluded) out.push_back(s[f]);
    }
    return out;
}

}  // namespace

TEST(cmwpm, ZeroSyndrome) {
    CodeLattice lattice(7);
    auto profile = make_profile(lattice, 0.05, 1.0);
    CmwpmDecoder decoder(lattice, profile);
    for (Color c : kAllColors) {
        auto q1 = decoder.stage1(lattice.empty_syndrome(), c);
        EXPECT_TRUE(q1.none());
        EXPECT_EQ(decoder.stage2(lattice.empty_syndrome(), c, q1), q1);
    }
    auto r = decoder.decode(lattice.empty_syndrome());
    EXPECT_EQ(r.logical_class, LogicalClass::Identity);
    EXPECT_TRUE(r.correction.none());
}

TEST(cmwpm, StagesOnDistance3SingleFlips) {
    CodeLattice lattice(3);
    auto profile = make_profile(lattice, 0.05, 1.0);
    for (int q = 0; q < 7; q++) {
        std::vector<int> qs = {q};
        auto s = lattice.syndrome(lattice.error_from_qubits(qs));
        for (Color c : kAllColors) {
            auto q1 = stage1_match(lattice, profile, s, c);
            EXPECT_EQ(other_colors(lattice, lattice.syndrome(q1), c), other_colors(lattice, s, c));
            auto q2 = stage2_refine(lattice, profile, s, c, q1);
            EXPECT_EQ(lattice.syndrome(q2), s);
        }
        auto r = decode_cmwpm(lattice, profile, s);
        EXPECT_EQ(lattice.syndrome(r.correction), s);
        EXPECT_FALSE(lattice.logical_parity(lattice.error_from_qubits(qs) ^ r.correction));
    }
}

TEST(cmwpm, Stage1ClearsOtherColorsAtDistance9) {
    CodeLattice lattice(9);
    auto profile = make_profile(lattice, 0.1, 1.0);
    CmwpmDecoder decoder(lattice, profile);
    for (uint64_t t = 0; t < 10000; t++) {
        auto s = lattice.syndrome(sample_error(profile, t));
        Color c = kAllColors[t % 3];
        auto q1 = decoder.stage1(s, c);
        ASSERT_EQ(other_colors(lattice, lattice.syndrome(q1), c), other_colors(lattice, s, c)) << t;
    }
}

TEST(cmwpm, PairMovesToggleOnlyExcludedChecks) {
    for (int d = 3; d <= 9; d += 2) {
        CodeLattice lattice(d);
        CmwpmDecoder decoder(lattice, make_profile(lattice, 0.1, 1.0));
        for (Color c : kAllColors) {
            const auto &graph = decoder.refinement_graph(c);
            const auto &faces = decoder.refine_faces(c);
            int pair_moves = 0;
            for (const auto &move : graph.edges()) {
                auto s = lattice.syndrome(lattice.error_from_qubits(move.qubits));
                std::vector<int> hit;
                for (size_t f = 0; f < s.size(); f++) {
                    if (s[f]) hit.push_back(static_cast<int>(f));
                }
                for (int f : hit) EXPECT_EQ(lattice.face(f).color, c);
                std::vector<int> ends;
                for (int node : {move.u, move.v}) {
                    if (node != static_cast<int>(faces.size())) ends.push_back(faces[node]);
                }
                std::sort(ends.begin(), ends.end());
                EXPECT_EQ(hit, ends);
                if (move.qubits.size() == 2) {
                    pair_moves++;
                    EXPECT_FALSE(hit.empty());
                }
            }
            EXPECT_GT(pair_moves, 0);
        }
        // Every edge bordered by two faces of the other colors qualifies.
        for (Color c : kAllColors) {
            const auto &graph = decoder.refinement_graph(c);
            for (const auto &[a, b] : lattice.edges()) {
                auto s = lattice.syndrome(lattice.error_from_qubits(std::vector<int>{a, b}));
                bool only_c = true;
                for (size_t f = 0; f < s.size(); f++) only_c &= !s[f] || lattice.face(f).color == c;
                if (!only_c || s.none()) continue;
                bool found = false;
                for (const auto &move : graph.edges()) found |= move.qubits == std::vector<int>{a, b};
                EXPECT_TRUE(found) << a << "," << b;
            }
        }
    }
}

TEST(cmwpm, CorrectionAlwaysHasTheSyndrome) {
    for (int d = 3; d <= 15; d += 2) {
        CodeLattice lattice(d);
        for (double lambda : {1.0, 4.0}) {
            auto profile = make_profile(lattice, 0.1, lambda);
            CmwpmDecoder decoder(lattice, profile);
            for (uint64_t t = 0; t < 200; t++) {
                auto s = lattice.syndrome(sample_error(profile, t));
                auto r = decoder.decode(s);
                ASSERT_EQ(lattice.syndrome(r.correction), s);
                bool flipped = lattice.logical_parity(r.correction ^ lattice.canonical_error(s));
                EXPECT_EQ(r.logical_class, flipped ? LogicalClass::Logical : LogicalClass::Identity);
            }
        }
    }
}

TEST(cmwpm, FixedMoveCostIsAlsoValid) {
    CodeLattice lattice(9);
    auto profile = make_profile(lattice, 0.1, 1.0);
    CmwpmDecoder decoder(lattice, profile, MoveCost::Fixed);
    for (uint64_t t = 0; t < 300; t++) {
        auto s = lattice.syndrome(sample_error(profile, t));
        EXPECT_EQ(lattice.syndrome(decoder.decode(s).correction), s);
    }
}

TEST(cmwpm, PicksTheLightestCandidate) {
    CodeLattice lattice(7);
    auto profile = make_profile(lattice, 0.08, 2.0);
    CmwpmDecoder decoder(lattice, profile);
    for (uint64_t t = 0; t < 200; t++) {
        auto s = lattice.syndrome(sample_error(profile, t));
        auto r = decoder.decode(s);
        double chosen = decoder.correction_weight(r.correction);
        bool first = true;
        for (Color c : kAllColors) {
            auto cand = decoder.run_color(s, c);
            EXPECT_LE(chosen, cand.weight + 1e-12);
            if (first && cand.weight == chosen) {
                EXPECT_EQ(cand.correction, r.correction);
                first = false;
            }
        }
    }
}

TEST(cmwpm, CorrectsEveryWeightOneError) {
    for (int d = 3; d <= 11; d += 2) {
        CodeLattice lattice(d);
        auto profile = make_profile(lattice, 0.05, 1.0);
        CmwpmDecoder decoder(lattice, profile);
        for (size_t q = 0; q < lattice.num_qubits(); q++) {
            ErrorVector e = lattice.empty_error();
            e.flip(q);
            auto r = decoder.decode(lattice.syndrome(e));
            EXPECT_FALSE(lattice.logical_parity(e ^ r.correction)) << "d=" << d << " q=" << q;
        }
    }
}

TEST(cmwpm, CorrectsRandomErrorsBelowHalfDistance) {
    std::mt19937_64 rng(11);
    for (int d = 3; d <= 9; d += 2) {
        CodeLattice lattice(d);
        auto profile = make_profile(lattice, 0.05, 1.0);
        CmwpmDecoder decoder(lattice, profile);
        const int t = (d - 1) / 2;
        int failures = 0;
        for (int trial = 0; trial < 10000; trial++) {
            ErrorVector e = lattice.empty_error();
            while (static_cast<int>(e.weight()) < t) e.set(rng() % lattice.num_qubits(), true);
            auto r = decoder.decode(lattice.syndrome(e));
            failures += lattice.logical_parity(e ^ r.correction);
        }
        EXPECT_EQ(failures, 0) << "d=" << d << " over 10000 weight-" << t << " errors";
    }
}

TEST(cmwpm, SeamWeightsAreUsedConsistently) {
    // Evaluated under the seam profile, the seam-aware choice is never heavier
    // than the choice made with uniform weights.
    CodeLattice lattice(5);
    auto seam = make_profile(lattice, 0.03, 8.0);
    auto uniform = make_profile(lattice, 0.03, 1.0);
    CmwpmDecoder aware(lattice, seam), blind(lattice, uniform);
    int differ = 0;
    for (uint64_t t = 0; t < 2000; t++) {
        auto s = lattice.syndrome(sample_error(seam, t));
        auto a = aware.decode(s).correction;
        auto b = blind.decode(s).correction;
        if (a != b) differ++;
        if (a.weight() + b.weight() == 0) continue;
        // Only meaningful when the blind choice is one of the aware candidates.
        bool candidate = false;
        for (Color c : kAllColors) candidate |= aware.run_color(s, c).correction == b;
        if (candidate) EXPECT_LE(aware.correction_weight(a), aware.correction_weight(b) + 1e-12);
    }
    EXPECT_GT(differ, 0);
}

TEST(cmwpm, NearOptimalAtSmallDistance) {
    for (int d : {3, 5}) {
        CodeLattice lattice(d);
        auto profile = make_profile(lattice, 0.05, 1.0);
        CmwpmDecoder decoder(lattice, profile);
        ExactDecoder oracle(lattice, profile);
        uint64_t fails_cmwpm = 0, fails_oracle = 0;
        for (uint64_t t = 0; t < 100000; t++) {
            uint64_t seed = derive_seed(3, 0, d, 1.0, 0, t);
            fails_cmwpm += run_trial(lattice, profile, decoder, seed);
            fails_oracle += run_trial(lattice, profile, oracle, seed);
        }
        double sigma = std::sqrt(static_cast<double>(fails_cmwpm + fails_oracle));
        EXPECT_LE(static_cast<double>(fails_oracle), static_cast<double>(fails_cmwpm) + 3 * sigma);
        EXPECT_LE(static_cast<double>(fails_cmwpm), 1.3 * static_cast<double>(fails_oracle)) << d;
    }
}
