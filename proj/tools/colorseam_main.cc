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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "colorseam/config.h"
#include "colorseam/harness.h"
#include "colorseam/interconnect.h"
#include "colorseam/lattice.h"
#include "colorseam/plot.h"
#include "colorseam/results_io.h"
#include "colorseam/threshold_fit.h"
#include "json.hpp"

namespace {

using namespace colorseam;
using nlohmann::ordered_json;

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text << "\n";
}

int cmd_lattice(int d, const std::string &out) {
    CodeLattice lattice(d);
    ordered_json j;
    j["distance"] = d;
    auto qubits = ordered_json::array();
    std::set<int> seam(lattice.seam_qubits().begin(), lattice.seam_qubits().end());
    for (size_t q = 0; q < lattice.num_qubits(); q++) {
        const auto &site = lattice.qubit(q);
        qubits.push_back({{"id", q}, {"row", site.row}, {"col", site.col}, {"seam", site.seam}});
    }
    j["qubits"] = qubits;
    auto faces = ordered_json::array();
    for (size_t f = 0; f < lattice.num_faces(); f++) {
        const auto &face = lattice.face(f);
        faces.push_back({{"id", f},
                         {"color", std::string(color_name(face.color))},
                         {"row", face.row},
                         {"col", face.col},
                         {"qubits", face.qubits}});
    }
    j["faces"] = faces;
    j["logical_support"] = lattice.logical_support();
    emit(j.dump(2), out);
    return 0;
}

struct SimulateArgs {
    std::string preset;
    std::string config;
    std::optional<std::string> decoder;
    std::optional<int> chi;
    std::optional<int> dmin, dmax, dstep;
    std::vector<double> lambdas;
    std::optional<double> pmin, pmax, pstep;
    std::optional<uint64_t> trials, seed;
    std::optional<std::string> out;
    std::optional<int> threads;
    bool resume = false;
    bool quiet = false;
};

CampaignConfig resolve_config(const SimulateArgs &a) {
    CampaignConfig c;
    if (!a.preset.empty() && !a.config.empty()) throw ConfigError("--preset and --config are mutually exclusive");
    if (!a.preset.empty()) c = preset(a.preset);
    if (!a.config.empty()) c = load_config(a.config);
    if (a.decoder) {
        try {
            c.decoder.kind = parse_decoder_kind(*a.decoder);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    if (a.chi) c.decoder.chi = *a.chi;
    if (a.dmin || a.dmax || a.dstep) {
        int lo = a.dmin.value_or(c.distances.empty() ? 3 : c.distances.front());
        int hi = a.dmax.value_or(a.dmin ? lo : (c.distances.empty() ? lo : c.distances.back()));
        c.distances = distance_range(lo, hi, a.dstep.value_or(2));
    }
    if (!a.lambdas.empty()) c.lambdas = a.lambdas;
    if (a.pmin) c.p_grid.min = *a.pmin;
    if (a.pmax) c.p_grid.max = *a.pmax;
    if (a.pstep) c.p_grid.step = *a.pstep;
    if (a.trials) c.trials = *a.trials;
    if (a.seed) c.seed = *a.seed;
    if (a.out) c.out = *a.out;
    if (a.threads) c.threads = *a.threads;
    validate(c);
    return c;
}

int cmd_simulate(const SimulateArgs &a) {
    CampaignConfig config = resolve_config(a);
    ResultTable done;
    if (a.resume && std::filesystem::exists(config.out)) {
        done = read_results(config.out);
        if (!a.quiet) std::cerr << "resuming from " << config.out << " (" << done.rows.size() << " rows)\n";
    }
    done.metadata = {"colorseam " COLORSEAM_VERSION, "config " + config_to_json(config)};
    size_t reported = 0;
    ResultTable table = run_campaign(config.campaign(), done, [&](const ResultTable &t) {
        write_results(t, config.out);
        if (!a.quiet) {
            for (; reported < t.rows.size(); reported++) {
                const auto &r = t.rows[reported];
                std::fprintf(stderr, "%s d=%d lambda=%g p=%.4g failures=%llu/%llu p_fail=%.5f\n", r.decoder.c_str(),
                             r.distance, r.lambda, r.p, static_cast<unsigned long long>(r.failures),
                             static_cast<unsigned long long>(r.trials), r.p_fail);
            }
        }
    });
    write_results(table, config.out);
    return 0;
}

struct FitArgs {
    std::string in;
    std::string out;
    std::optional<std::string> decoder;
    std::optional<double> lambda;
    double pmin = 0.0, pmax = 1.0;
    int dmin = 3;
    std::optional<int> dmax;
    int replicates = 200;
    uint64_t seed = 1;
};

std::vector<ResultRow> pick_rows(const ResultTable &table, const std::optional<std::string> &decoder,
                                 const std::optional<double> &lambda) {
    std::set<std::string> decoders;
    std::set<double> lambdas;
    for (const auto &r : table.rows) {
        if (!decoder || r.decoder == *decoder) {
            decoders.insert(r.decoder);
            lambdas.insert(r.lambda);
        }
    }
    if (decoders.empty()) throw std::runtime_error("no rows match the requested decoder");
    if (decoders.size() > 1) throw ConfigError("table holds several decoders; pass --decoder");
    if (!lambda && lambdas.size() > 1) throw ConfigError("table holds several lambda values; pass --lambda");
    double l = lambda.value_or(*lambdas.begin());
    auto rows = select_rows(table.rows, *decoders.begin(), l);
    if (rows.empty()) throw std::runtime_error("no rows match the requested lambda");
    return rows;
}

int cmd_fit(const FitArgs &a) {
    ResultTable table = read_results(a.in);
    auto rows = pick_rows(table, a.decoder, a.lambda);
    FitWindow window{a.pmin, a.pmax, a.dmin, a.dmax.value_or(FitWindow{}.d_max)};
    FitResult fit = fit_threshold(rows, window, a.replicates, a.seed);
    for (const auto &w : fit.warnings) std::cerr << "warning: " << w << "\n";
    emit(fit_to_json(fit), a.out);
    return 0;
}

int cmd_overhead(int d) {
    CodeLattice lattice(d);
    int k = (d + 3) / 2;
    BellPairCount bell = bell_pairs_per_round(k);
    int per_side = 0;
    for (size_t q = 0; q < lattice.num_qubits(); q++) {
        if (lattice.qubit(q).row == lattice.extent()) per_side++;
    }
    ordered_json j;
    j["distance"] = d;
    j["k"] = k;
    j["bell_pairs_per_edge"] = bell.per_edge;
    j["bell_pairs_total"] = bell.total;
    j["qubits_per_side"] = per_side;
    j["seam_qubits"] = lattice.seam_qubits().size();
    emit(j.dump(2), "");
    return 0;
}

struct PlotArgs {
    std::string in;
    std::string csv;
    std::string svg;
    std::string title;
    std::optional<std::string> decoder;
    std::optional<double> lambda;
    double pmin = 0.0, pmax = 1.0;
    int dmin = 3;
    std::optional<int> dmax;
};

int cmd_plot(const PlotArgs &a) {
    ResultTable table = read_results(a.in);
    auto rows = pick_rows(table, a.decoder, a.lambda);
    FitWindow window{a.pmin, a.pmax, a.dmin, a.dmax.value_or(FitWindow{}.d_max)};
    std::vector<LineFit> lines;
    double p_star = 0.0;
    try {
        lines = fit_lines(rows, window);
        p_star = estimate_threshold(lines, &window).p_star;
    } catch (const std::runtime_error &e) {
        std::cerr << "warning: no fitted lines: " << e.what() << "\n";
        lines.clear();
    }
    if (a.csv.empty() && a.svg.empty()) throw ConfigError("plot needs --csv and/or --svg");
    if (!a.csv.empty()) {
        std::ostringstream s;
        write_plot_csv(rows, lines, s);
        std::ofstream out(a.csv);
        if (!out) throw std::runtime_error("cannot write '" + a.csv + "'");
        out << s.str();
    }
    if (!a.svg.empty()) {
        std::ofstream out(a.svg);
        if (!out) throw std::runtime_error("cannot write '" + a.svg + "'");
        write_plot_svg(rows, lines, out, a.title, p_star);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Color-code decoding experiments under seam-elevated bit-flip noise"};
    app.set_version_flag("--version", std::string(COLORSEAM_VERSION));
    app.require_subcommand(1);

    int lattice_d = 3;
    std::string lattice_out;
    auto *lattice = app.add_subcommand("lattice", "Dump a lattice as JSON");
    lattice->add_option("--d", lattice_d, "Code distance")->required();
    lattice->add_option("--out", lattice_out, "Output file (default stdout)");

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Run a Monte-Carlo campaign");
    auto presets = preset_names();
    simulate->add_option("--preset", sim.preset, "Named campaign")->check(CLI::IsMember(presets));
    simulate->add_option("--config", sim.config, "JSON campaign file")->check(CLI::ExistingFile);
    simulate->add_option("--decoder", sim.decoder, "mps, cmwpm or oracle");
    simulate->add_option("--chi", sim.chi, "MPS bond dimension (0 = exact)");
    simulate->add_option("--dmin", sim.dmin);
    simulate->add_option("--dmax", sim.dmax);
    simulate->add_option("--dstep", sim.dstep);
    simulate->add_option("--lambda", sim.lambdas, "Seam factor; repeat for several");
    simulate->add_option("--pmin", sim.pmin);
    simulate->add_option("--pmax", sim.pmax);
    simulate->add_option("--pstep", sim.pstep);
    simulate->add_option("--trials", sim.trials);
    simulate->add_option("--seed", sim.seed);
    simulate->add_option("--out", sim.out, "Results CSV");
    simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
    simulate->add_flag("--resume", sim.resume, "Keep points already in the output file");
    simulate->add_flag("--quiet", sim.quiet);

    FitArgs fa;
    auto *fit = app.add_subcommand("fit", "Estimate the threshold from a results CSV");
    fit->add_option("--in", fa.in)->required()->check(CLI::ExistingFile);
    fit->add_option("--out", fa.out, "fit.json (default stdout)");
    fit->add_option("--decoder", fa.decoder);
    fit->add_option("--lambda", fa.lambda);
    fit->add_option("--pmin", fa.pmin);
    fit->add_option("--pmax", fa.pmax);
    fit->add_option("--dmin", fa.dmin);
    fit->add_option("--dmax", fa.dmax);
    fit->add_option("--replicates", fa.replicates)->check(CLI::Range(50, 1000000));
    fit->add_option("--seed", fa.seed);

    int overhead_d = 3;
    auto *overhead = app.add_subcommand("overhead", "Bell-pair budget for a patch");
    overhead->add_option("--d", overhead_d, "Code distance")->required();

    PlotArgs pa;
    auto *plot = app.add_subcommand("plot", "Plot data and fitted lines");
    plot->add_option("--in", pa.in)->required()->check(CLI::ExistingFile);
    plot->add_option("--csv", pa.csv);
    plot->add_option("--svg", pa.svg);
    plot->add_option("--title", pa.title);
    plot->add_option("--decoder", pa.decoder);
    plot->add_option("--lambda", pa.lambda);
    plot->add_option("--pmin", pa.pmin);
    plot->add_option("--pmax", pa.pmax);
    plot->add_option("--dmin", pa.dmin);
    plot->add_option("--dmax", pa.dmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*lattice) return cmd_lattice(lattice_d, lattice_out);
        if (*simulate) return cmd_simulate(sim);
        if (*fit) return cmd_fit(fa);
        if (*overhead) return cmd_overhead(overhead_d);
        if (*plot) return cmd_plot(pa);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kUsageError;
}
