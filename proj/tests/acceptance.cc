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

// Acceptance checks. Run with no arguments for all criteria, or pass
// criterion numbers. Campaign tables are cached in --cache DIR and reused by
// later criteria in the same directory.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "colorseam/cmwpm_decoder.h"
#include "colorseam/config.h"
#include "colorseam/exact_oracle.h"
#include "colorseam/harness.h"
#include "colorseam/interconnect.h"
#include "colorseam/matching.h"
#include "colorseam/mps_decoder.h"
#include "colorseam/results_io.h"
#include "colorseam/threshold_fit.h"
#include "oracles.h"

using namespace colorseam;

namespace {

constexpr uint64_t kSeed = 2026;

std::string g_cache = ".";
int g_threads = 0;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, a);
    return buf;
}

SyndromeVector random_syndrome(size_t faces, std::mt19937_64 &rng) {
    SyndromeVector s(faces);
    for (size_t f = 0; f < faces; f++) s.set(f, rng() & 1);
    return s;
}

// Runs (or resumes) one campaign; the table is cached under `name`.
ResultTable campaign(const std::string &name, const Campaign &c) {
    const std::string path = g_cache + "/" + name + ".csv";
    ResultTable done;
    if (std::filesystem::exists(path)) done = read_results(path);
    done.metadata = {"colorseam " COLORSEAM_VERSION " acceptance " + name};
    return run_campaign(c, done, [&](const ResultTable &t) { write_results(t, path); });
}

Campaign mps_campaign(double lambda) {
    Campaign c;
    c.decoder = {DecoderKind::Mps, 8};
    c.distances = {3, 5, 7, 9, 11};
    c.lambdas = {lambda};
    c.p_values = PGrid{0.08, 0.12, 0.005}.values();
    c.trials = 4000;
    c.seed = kSeed;
    c.threads = g_threads;
    return c;
}

Campaign cmwpm_campaign(double lambda) {
    Campaign c;
    c.decoder = {DecoderKind::Cmwpm, 8};
    c.distances = {7, 9, 11, 13, 15, 17, 19};
    c.lambdas = {lambda};
    c.p_values = PGrid{0.074, 0.090, 0.002}.values();
    c.trials = 20000;
    c.seed = kSeed;
    c.threads = g_threads;
    return c;
}

FitResult fit_campaign(const std::string &name, const Campaign &c, const FitWindow &window) {
    ResultTable t = campaign(name, c);
    return fit_threshold(t.rows, window, 200, kSeed);
}

std::string describe(const FitResult &f) {
    std::ostringstream s;
    s << "p_star=" << fmt("%.5f", f.p_star) << " sigma=" << fmt("%.5f", f.sigma);
    return s.str();
}

const FitWindow kMpsWindow{0.08, 0.12, 3, 11};
const FitWindow kCmwpmWindow{0.078, 0.084, 7, 19};

Outcome criterion1() {
    int mismatches = 0, compared = 0;
    for (auto [p, lambda] : {std::pair{0.1, 1.0}, std::pair{0.02, 4.0}}) {
        CodeLattice d3(3);
        auto prof3 = make_profile(d3, p, lambda);
        ExactDecoder oracle3(d3, prof3);
        MpsDecoder mps3(d3, prof3, 8);
        for (uint32_t m = 0; m < 8; m++) {
            SyndromeVector s(3);
            for (int f = 0; f < 3; f++) s.set(f, m >> f & 1);
            mismatches += mps3.decode(s).logical_class != oracle3.decode(s).logical_class;
            compared++;
        }
        CodeLattice d5(5);
        auto prof5 = make_profile(d5, p, lambda);
        ExactDecoder oracle5(d5, prof5);
        MpsDecoder mps5(d5, prof5, 8);
        for (uint64_t t = 0; t < 10000; t++) {
            auto s = d5.syndrome(sample_error(prof5, derive_seed(kSeed, 1, 5, lambda, 0, t)));
            mismatches += mps5.decode(s).logical_class != oracle5.decode(s).logical_class;
            compared++;
        }
    }
    CodeLattice d7(7);
    auto prof7 = make_profile(d7, 0.1, 1.0);
    ExactDecoder oracle7(d7, prof7);
    MpsDecoder exact7(d7, prof7, 0);
    std::mt19937_64 rng(kSeed);
    double worst = 0;
    for (int t = 0; t < 100; t++) {
        auto s = random_syndrome(d7.num_faces(), rng);
        auto w = oracle7.coset_weights(s);
        auto m = exact7.coset_log_weights(s);
        worst = std::max(worst, std::fabs(std::expm1(m[0] - w.log_identity)));
        worst = std::max(worst, std::fabs(std::expm1(m[1] - w.log_logical)));
    }
    bool pass = mismatches == 0 && worst < 1e-8;
    return {pass, std::to_string(mismatches) + "/" + std::to_string(compared) +
                      " decision mismatches; d=7 exact-mode max relative error " + fmt("%.2e", worst)};
}

Outcome criterion2() {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> w(0.0, 10.0);
    int weight_diff = 0, pair_diff = 0;
    for (int t = 0; t < 1000; t++) {
        bool boundary = t % 2;
        int n = static_cast<int>(rng() % 13);
        if (!boundary && n % 2) n--;
        MatchingProblem p(n, boundary);
        for (int a = 0; a < n; a++) {
            for (int b = a + 1; b < n; b++) p.set_weight(a, b, w(rng));
            if (boundary) p.set_boundary_weight(a, w(rng));
        }
        auto fast = mwpm(p), slow = brute_force_matching(p);
        weight_diff += std::fabs(fast.total_weight - slow.total_weight) > 1e-9 * (1 + slow.total_weight);
        pair_diff += fast.pairs != slow.pairs;
    }
    return {weight_diff == 0 && pair_diff == 0, std::to_string(weight_diff) + " weight and " +
                                                    std::to_string(pair_diff) + " pair-set disagreements in 1000 instances"};
}

Outcome criterion3() {
    // 100000 trials per decoder, split evenly over 7 distances and 2 noise models.
    const int per_combo = 100000 / 14 + 1;
    uint64_t invalid = 0, total = 0;
    for (auto kind : {DecoderKind::Mps, DecoderKind::Cmwpm}) {
        for (int d = 3; d <= 15; d += 2) {
            CodeLattice lattice(d);
            for (double lambda : {1.0, 4.0}) {
                auto profile = make_profile(lattice, 0.1, lambda);
                auto decoder = make_decoder({kind, 8}, lattice, profile);
                for (int t = 0; t < per_combo; t++) {
                    auto s = lattice.syndrome(sample_error(profile, derive_seed(kSeed, 9, d, lambda, 0, t)));
                    invalid += !(lattice.syndrome(decoder->decode(s).correction) == s);
                    total++;
                }
            }
        }
    }
    return {invalid == 0, std::to_string(invalid) + " invalid corrections in " + std::to_string(total) + " decodes"};
}

Outcome criterion4() {
    auto fit = fit_campaign("mps_lambda1", mps_campaign(1.0), kMpsWindow);
    bool pass = fit.p_star >= 0.095 && fit.p_star <= 0.115;
    return {pass, describe(fit) + " (band [0.095, 0.115])"};
}

Outcome criterion5() {
    auto sym = fit_campaign("mps_lambda1", mps_campaign(1.0), kMpsWindow);
    auto asym = fit_campaign("mps_lambda4", mps_campaign(4.0), kMpsWindow);
    bool in_band = asym.p_star >= 0.088 && asym.p_star <= 0.108;
    bool ordered = asym.p_star < sym.p_star;
    return {in_band && ordered, "lambda=4 " + describe(asym) + " (band [0.088, 0.108]); lambda=1 p_star=" +
                                    fmt("%.5f", sym.p_star) + (ordered ? " (lower)" : " (NOT lower)")};
}

Outcome criterion6() {
    auto fit = fit_campaign("cmwpm_lambda1", cmwpm_campaign(1.0), kCmwpmWindow);
    bool pass = fit.p_star >= 0.074 && fit.p_star <= 0.090;
    return {pass, describe(fit) + " (band [0.074, 0.090])"};
}

Outcome criterion7() {
    auto sym = fit_campaign("cmwpm_lambda1", cmwpm_campaign(1.0), kCmwpmWindow);
    auto asym = fit_campaign("cmwpm_lambda4", cmwpm_campaign(4.0), kCmwpmWindow);
    double gap = std::fabs(asym.p_star - sym.p_star);
    return {gap <= 0.008, "lambda=4 " + describe(asym) + "; lambda=1 p_star=" + fmt("%.5f", sym.p_star) +
                              "; |difference|=" + fmt("%.5f", gap) + " (limit 0.008)"};
}

Outcome criterion8() {
    std::map<int, ResultRow> rows;
    for (int d : {7, 11, 15}) {
        TrialPoint point{{DecoderKind::Cmwpm, 8}, d, 1.0, 0.05, 0, 100000, kSeed};
        rows[d] = run_point(point, g_threads);
    }
    auto separated = [&](int small, int large) {
        const auto &a = rows[small], &b = rows[large];
        return a.p_fail - b.p_fail > 3 * std::hypot(a.std_err, b.std_err);
    };
    bool pass = separated(7, 11) && separated(11, 15);
    std::string detail;
    for (auto &[d, r] : rows) detail += "d=" + std::to_string(d) + ": " + fmt("%.5f", r.p_fail) + "+-" + fmt("%.5f", r.std_err) + " ";
    return {pass, detail};
}

Outcome criterion9() {
    CodeLattice lattice(3);
    auto profile = make_profile(lattice, 0.05, 1.0);
    auto group = oracle::stabilizer_group(lattice);
    uint64_t logical = oracle::to_mask(lattice.logical_mask());
    double expected = 0;
    for (uint64_t m = 0; m < 128; m++) {
        double pe = 1;
        for (int q = 0; q < 7; q++) pe *= (m >> q & 1) ? 0.05 : 0.95;
        if (oracle::direct_coset_probability(group, m ^ logical, profile.per_qubit) >
            oracle::direct_coset_probability(group, m, profile.per_qubit)) {
            expected += pe;
        }
    }
    TrialPoint point{{DecoderKind::Oracle, 8}, 3, 1.0, 0.05, 0, 100000, kSeed};
    auto row = run_point(point, g_threads);
    double sigma = std::sqrt(expected * (1 - expected) / 100000);
    bool pass = std::fabs(row.p_fail - expected) <= 3 * sigma;
    return {pass, "Monte-Carlo " + fmt("%.5f", row.p_fail) + " vs exhaustive " + fmt("%.5f", expected) +
                      " (3 sigma = " + fmt("%.5f", 3 * sigma) + ")"};
}

Outcome criterion10() {
    int bad = 0;
    for (int k = 2; k <= 25; k++) {
        auto b = bell_pairs_per_round(k);
        bad += b.per_edge != 2 * (k - 1) || b.total != 6 * (k - 1);
    }
    bad += !(propagate_bell_pauli(Pauli::X) == CnotEffect{Pauli::I, Pauli::X});
    bad += !(propagate_bell_pauli(Pauli::Z) == CnotEffect{Pauli::Z, Pauli::I});
    bad += !(propagate_bell_pauli(Pauli::Y) == CnotEffect{Pauli::Z, Pauli::X});
    return {bad == 0, std::to_string(bad) + " rule mismatches"};
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        if (arg == "--cache" && i + 1 < argc) {
            g_cache = argv[++i];
        } else if (arg == "--threads" && i + 1 < argc) {
            g_threads = std::stoi(argv[++i]);
        } else {
            wanted.push_back(std::stoi(arg));
        }
    }
    if (wanted.empty()) {
        for (int c = 1; c <= 10; c++) wanted.push_back(c);
    }
    std::filesystem::create_directories(g_cache);
    const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                 criterion6, criterion7, criterion8, criterion9, criterion10};
    int failures = 0;
    for (int c : wanted) {
        if (c < 1 || c > 10) {
            std::fprintf(stderr, "unknown criterion %d\n", c);
            return 2;
        }
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[c - 1]();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %s  [%.1f s]\n", c, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
