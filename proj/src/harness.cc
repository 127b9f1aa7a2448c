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

#include "colorseam/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace colorseam {

namespace {

constexpr uint64_t kChunk = 64;

bool same_point(const ResultRow &row, std::string_view decoder, int d, double lambda, double p,
                uint64_t trials, uint64_t seed) {
    return row.decoder == decoder && row.distance == d && row.lambda == lambda && row.p == p &&
           row.trials == trials && row.seed == seed;
}

}  // namespace

ResultRow make_row(std::string decoder, int distance, double lambda, double p, uint64_t trials,
                   uint64_t failures, uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    if (failures > trials) throw std::invalid_argument("failures exceed trials");
    ResultRow row;
    row.decoder = std::move(decoder);
    row.distance = distance;
    row.lambda = lambda;
    row.p = p;
    row.trials = trials;
    row.failures = failures;
    row.p_fail = static_cast<double>(failures) / static_cast<double>(trials);
    row.std_err = std::sqrt(row.p_fail * (1.0 - row.p_fail) / static_cast<double>(trials));
    row.seed = seed;
    return row;
}

bool run_trial(const CodeLattice &lattice, const NoiseProfile &profile, const Decoder &decoder,
               uint64_t seed) {
    ErrorVector e = sample_error(profile, seed);
    DecodeResult r = decoder.decode(lattice.syndrome(e));
    return lattice.logical_parity(e ^ r.correction);
}

ResultRow run_point(const TrialPoint &point, int threads) {
    if (point.trials == 0) throw std::invalid_argument("trials must be positive");
    CodeLattice lattice(point.distance);
    NoiseProfile profile = make_profile(lattice, point.p_bulk, point.lambda);
    const std::string name(decoder_name(point.decoder.kind));
    if (point.p_bulk == 0.0) {
        return make_row(name, point.distance, point.lambda, point.p_bulk, point.trials, 0, point.master_seed);
    }
    std::unique_ptr<Decoder> decoder = make_decoder(point.decoder, lattice, profile);
    const uint64_t id = decoder_seed_id(point.decoder.kind);

    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> failures{0};
    auto work = [&] {
        uint64_t local = 0;
        for (;;) {
            uint64_t begin = next.fetch_add(kChunk);
            if (begin >= point.trials) break;
            uint64_t end = std::min(point.trials, begin + kChunk);
            for (uint64_t t = begin; t < end; t++) {
                uint64_t seed = derive_seed(point.master_seed, id, point.distance, point.lambda, point.p_index, t);
                local += run_trial(lattice, profile, *decoder, seed);
            }
        }
        failures += local;
    };

    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    uint64_t chunks = (point.trials + kChunk - 1) / kChunk;
    threads = static_cast<int>(std::min<uint64_t>(threads, chunks));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (int i = 0; i < threads; i++) {
            pool.emplace_back([&] {
                try {
                    work();
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = point.trials;
                }
            });
        }
        for (auto &t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    return make_row(name, point.distance, point.lambda, point.p_bulk, point.trials, failures.load(),
                    point.master_seed);
}

ResultTable run_campaign(const Campaign &campaign, const ResultTable &done,
                         const std::function<void(const ResultTable &)> &on_row) {
    if (campaign.trials == 0) throw std::invalid_argument("trials must be positive");
    for (size_t i = 1; i < campaign.p_values.size(); i++) {
        if (!(campaign.p_values[i] > campaign.p_values[i - 1])) {
            throw std::invalid_argument("p grid must be strictly increasing");
        }
    }
    const std::string name(decoder_name(campaign.decoder.kind));
    ResultTable table;
    table.metadata = done.metadata;
    for (double lambda : campaign.lambdas) {
        for (int d : campaign.distances) {
            for (size_t i = 0; i < campaign.p_values.size(); i++) {
                const double p = campaign.p_values[i];
                auto it = std::find_if(done.rows.begin(), done.rows.end(), [&](const ResultRow &r) {
                    return same_point(r, name, d, lambda, p, campaign.trials, campaign.seed);
                });
                if (it != done.rows.end()) {
                    table.rows.push_back(*it);
                } else {
                    TrialPoint point{campaign.decoder, d, lambda, p, i, campaign.trials, campaign.seed};
                    table.rows.push_back(run_point(point, campaign.threads));
                }
                if (on_row) on_row(table);
            }
        }
    }
    return table;
}

}  // namespace colorseam
