// Copyright 2026 The lmc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// lmc: command-line driver for the LocalMaxCut QAOA / classical toolkit.
//
// Exit codes: 0 success, 1 the checked inequality or tolerance failed,
// 2 usage or input error, 3 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "lmc/classical.h"
#include "lmc/closed_forms.h"
#include "lmc/graph.h"
#include "lmc/hamiltonian.h"
#include "lmc/json_io.h"
#include "lmc/kernels.h"
#include "lmc/optimize.h"
#include "lmc/qaoa_engine.h"
#include "lmc/statevector.h"

namespace {

using lmc::Json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    uint64_t seed = 1;
    std::size_t threads = 1;
    bool no_timestamp = false;
    std::string format = "text";
};

std::size_t default_threads() {
    if (const char *env = std::getenv("LMC_THREADS")) {
        try {
            return std::max<std::size_t>(1, std::stoul(env));
        } catch (const std::exception &) {
            throw UsageError(std::string("LMC_THREADS is not a number: ") + env);
        }
    }
    return 1;
}

std::string utc_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

// Every report starts from the resolved configuration.
Json envelope(const Globals &g, const std::string &command, Json config) {
    config["seed"] = g.seed;
    config["threads"] = g.threads;
    Json j{{"command", command}, {"config", config}};
    if (!g.no_timestamp) {
        j["timestamp"] = utc_timestamp();
    }
    return j;
}

void emit(const Globals &g, const Json &report, const std::string &text) {
    if (g.format == "json") {
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "# config " << report.at("config").dump() << '\n' << text;
    }
}

std::vector<double> parse_list(const std::string &s) {
    std::vector<double> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError("not a number list: '" + s + "'");
        }
    }
    return out;
}

std::string fixed(double x, int digits = 6) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
}

std::string join(const std::vector<double> &xs, int digits = 6) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + fixed(xs[i], digits);
    }
    return out;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write to '" + path + "'");
    }
    return out;
}

// reproduce ------------------------------------------------------------------

int cmd_reproduce(const Globals &g, int degree) {
    auto quantum = lmc::optimize_qaoa(degree, 256, 0, g.threads);
    auto classical = lmc::optimize_classical(degree, 0, g.threads);
    bool holds;
    std::string verdict;
    if (degree == 2) {
        holds = classical.value >= 0.95 - 1e-6 && quantum.value < 0.94 && classical.value > quantum.value;
        verdict = holds ? "classical wins" : "separation NOT reproduced";
    } else {
        holds = quantum.value > 0.81 && classical.value <= 0.8 && quantum.value > classical.value;
        verdict = holds ? "quantum wins" : "separation NOT reproduced";
    }
    Json report = envelope(g, "reproduce", {{"degree", degree}});
    report["quantum"] = lmc::to_json(quantum);
    report["classical"] = lmc::to_json(classical);
    report["verdict"] = verdict;
    report["holds"] = holds;
    std::ostringstream text;
    text << "degree " << degree << '\n'
         << "classical " << fixed(classical.value) << " at p=" << fixed(classical.argmax[0])
         << " q=(" << join({classical.argmax.begin() + 1, classical.argmax.end()}) << ")\n"
         << "quantum   " << fixed(quantum.value) << " at gamma=" << fixed(quantum.argmax[0])
         << " beta=" << fixed(quantum.argmax[1]) << '\n'
         << verdict << '\n';
    emit(g, report, text.str());
    return holds ? kOk : kFailed;
}

// sweep ----------------------------------------------------------------------

int cmd_sweep(const Globals &g, int degree, std::size_t resolution, const std::string &out_path) {
    lmc::Objective f = [degree](std::span<const double> x) {
        lmc::QaoaAngles a{x[0], x[1]};
        return degree == 2 ? lmc::closed_form_f2(1, a) : lmc::closed_form_f3(1, a);
    };
    auto grid = lmc::grid_sweep(f, lmc::qaoa_axes(resolution), g.threads);
    Json report = envelope(g, "sweep", {{"degree", degree}, {"resolution", resolution}, {"out", out_path}});
    report["argmax"] = grid.best_point;
    report["value"] = grid.best_value;
    std::ostringstream text;
    text << "max " << fixed(grid.best_value) << " at gamma=" << fixed(grid.best_point[0])
         << " beta=" << fixed(grid.best_point[1]) << '\n';
    if (out_path.empty() || out_path == "-") {
        lmc::write_grid_csv(grid, std::cout);
        std::cerr << "# config " << report.at("config").dump() << '\n' << text.str();
    } else {
        auto out = open_output(out_path);
        lmc::write_grid_csv(grid, out);
        emit(g, report, text.str());
    }
    return kOk;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const Globals &g, const std::string &spec, std::size_t samples, double tol) {
    lmc::Graph graph = lmc::graph_from_spec(spec);
    if (graph.num_vertices() > lmc::kMaxStateQubits) {
        throw UsageError("graph has " + std::to_string(graph.num_vertices()) + " vertices; the statevector cap is " +
                         std::to_string(lmc::kMaxStateQubits));
    }
    const auto h = lmc::build_localmaxcut_hamiltonian(graph);
    const lmc::QaoaExpectation engine(h);
    std::mt19937_64 rng(g.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto values = lmc::basis_values(h);
    double max_term = 0, max_f = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        lmc::QaoaAngles a{2 * std::numbers::pi * unit(rng), std::numbers::pi * unit(rng)};
        auto state = lmc::apply_mixer(a.beta, lmc::apply_phase(values, a.gamma, lmc::uniform_state(h.num_qubits())));
        const auto terms = engine.term_expectations(a);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            max_term = std::max(max_term, std::abs(terms[i] - lmc::expectation_zk_sv(state, h.terms()[i].support)));
        }
        const double sv = lmc::kernels::active_kernels().weighted_norm(state.amps, values);
        max_f = std::max(max_f, std::abs(engine.evaluate(a) - sv));
    }
    const bool ok = max_term <= tol && max_f <= tol;
    Json report = envelope(g, "verify", {{"graph", spec}, {"samples", samples}, {"tol", tol}});
    report["num_vertices"] = graph.num_vertices();
    report["num_terms"] = h.terms().size();
    report["kernels"] = std::string(lmc::kernels::active_kernels().name);
    report["max_term_diff"] = max_term;
    report["max_F_diff"] = max_f;
    report["pass"] = ok;
    std::ostringstream text;
    text << "graph " << spec << " n=" << graph.num_vertices() << " terms=" << h.terms().size() << '\n'
         << "max |engine - statevector| per term " << std::scientific << std::setprecision(3) << max_term << '\n'
         << "max |engine - statevector| for F    " << max_f << '\n'
         << (ok ? "PASS" : "FAIL") << '\n';
    emit(g, report, text.str());
    return ok ? kOk : kFailed;
}

// classical ------------------------------------------------------------------

lmc::ClassicalParams resolve_params(std::size_t d, const std::string &preset, const std::string &p_opt,
                                    const std::string &q_opt) {
    lmc::ClassicalParams params;
    if (preset == "hrss") {
        params = lmc::hrss_preset(d);
    } else if (preset == "optimal") {
        if (d != 2 && d != 3) {
            throw UsageError("the optimal preset exists for degree 2 and 3 only");
        }
        auto rep = lmc::optimize_classical(d);
        params = {rep.argmax[0], {rep.argmax.begin() + 1, rep.argmax.end()}};
    } else {
        throw UsageError("unknown preset '" + preset + "'");
    }
    if (!p_opt.empty()) {
        auto p = parse_list(p_opt);
        if (p.size() != 1) {
            throw UsageError("--p takes a single value");
        }
        params.p = p[0];
    }
    if (!q_opt.empty()) {
        params.q = parse_list(q_opt);
    }
    try {
        lmc::validate_params(params, d);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return params;
}

std::optional<double> exact_value(std::size_t d, const lmc::ClassicalParams &params) {
    if (d == 2) {
        return lmc::exact_prob_d2(params);
    }
    if (d == 3) {
        return lmc::exact_prob_d3(params);
    }
    if (d <= lmc::kMaxOracleDegree) {
        return lmc::neighborhood_oracle_prob(d, params);
    }
    return std::nullopt;
}

int cmd_classical_run(const Globals &g, const std::string &spec, std::size_t trials, const std::string &preset,
                      const std::string &p_opt, const std::string &q_opt, bool counts) {
    lmc::Graph graph = lmc::graph_from_spec(spec);
    auto d = graph.regular_degree();
    if (!d) {
        throw UsageError("graph is not regular");
    }
    auto params = resolve_params(*d, preset, p_opt, q_opt);
    auto stats = lmc::monte_carlo(graph, params, trials, g.seed, g.threads);
    Json report = envelope(g, "classical run", {{"graph", spec}, {"trials", trials}, {"params", lmc::to_json(params)}});
    report["stats"] = lmc::to_json(stats, counts);
    std::ostringstream text;
    text << "graph " << spec << " degree " << *d << " p=" << fixed(params.p) << " q=(" << join(params.q) << ")\n"
         << "mean satisfied fraction " << fixed(stats.mean) << " +/- " << fixed(stats.std_error) << " (" << trials
         << " trials)\n";
    if (auto exact = exact_value(*d, params)) {
        report["tree_value"] = *exact;
        text << "tree value " << fixed(*exact, 9) << " (z = " << fixed((stats.mean - *exact) / stats.std_error, 2)
             << ")\n";
    }
    emit(g, report, text.str());
    return kOk;
}

int cmd_classical_exact(const Globals &g, std::size_t d, const std::string &preset, const std::string &p_opt,
                        const std::string &q_opt) {
    auto params = resolve_params(d, preset, p_opt, q_opt);
    Json report = envelope(g, "classical exact", {{"degree", d}, {"params", lmc::to_json(params)}});
    std::ostringstream text;
    if (d == 2 || d == 3) {
        const double exact = d == 2 ? lmc::exact_prob_d2(params) : lmc::exact_prob_d3(params);
        report["value"] = exact;
        text << "exact  " << fixed(exact, 12) << '\n';
    }
    if (d > lmc::kMaxOracleDegree) {
        throw UsageError("degree above the oracle limit");
    }
    const double oracle = lmc::neighborhood_oracle_prob(d, params);
    report["oracle"] = oracle;
    if (!report.contains("value")) {
        report["value"] = oracle;
    }
    text << "oracle " << fixed(oracle, 12) << '\n';
    emit(g, report, text.str());
    return kOk;
}

int cmd_classical_curve(const Globals &g, std::size_t d, std::size_t points, const std::string &out_path) {
    auto curve = lmc::classical_curve(d, points);
    auto write = [&](std::ostream &out) {
        out << "p,value\n" << std::setprecision(17);
        for (auto [p, v] : curve) {
            out << p << ',' << v << '\n';
        }
    };
    auto best = *std::max_element(curve.begin(), curve.end(),
                                  [](const auto &a, const auto &b) { return a.second < b.second; });
    Json report = envelope(g, "classical curve", {{"degree", d}, {"points", points}, {"out", out_path}});
    report["argmax_p"] = best.first;
    report["value"] = best.second;
    std::string text = "max " + fixed(best.second) + " at p=" + fixed(best.first) + "\n";
    if (out_path.empty() || out_path == "-") {
        write(std::cout);
        std::cerr << "# config " << report.at("config").dump() << '\n' << text;
    } else {
        auto out = open_output(out_path);
        write(out);
        emit(g, report, text);
    }
    return kOk;
}

// graph / ham / qaoa ---------------------------------------------------------

int cmd_graph_gen(const Globals &g, const std::string &spec, const std::string &out_path) {
    lmc::Graph graph = lmc::graph_from_spec(spec);
    const std::size_t gi = lmc::girth(graph);
    const std::string edges = lmc::save_edge_list(graph);
    std::ostringstream summary;
    summary << "# graph " << spec << " n=" << graph.num_vertices() << " m=" << graph.num_edges() << " girth="
            << (gi == lmc::kInfiniteGirth ? std::string("inf") : std::to_string(gi)) << '\n';
    if (out_path.empty() || out_path == "-") {
        std::cout << edges;
        std::cerr << summary.str();
    } else {
        open_output(out_path) << edges;
        Json report = envelope(g, "graph gen", {{"graph", spec}, {"out", out_path}});
        report["num_vertices"] = graph.num_vertices();
        report["num_edges"] = graph.num_edges();
        report["girth"] = gi == lmc::kInfiniteGirth ? Json(nullptr) : Json(gi);
        emit(g, report, summary.str());
    }
    return kOk;
}

int cmd_ham_dump(const Globals &g, const std::string &spec) {
    const auto h = lmc::build_localmaxcut_hamiltonian(lmc::graph_from_spec(spec));
    Json report = envelope(g, "ham dump", {{"graph", spec}});
    report["hamiltonian"] = lmc::to_json(h);
    std::cout << report.dump(2) << '\n';
    return kOk;
}

lmc::PatchKind parse_patch_kind(const std::string &s) {
    if (s == "edge") {
        return lmc::PatchKind::Edge;
    }
    if (s == "pair") {
        return lmc::PatchKind::Pair;
    }
    if (s == "ball") {
        return lmc::PatchKind::Ball;
    }
    throw UsageError("patch kind must be edge, pair or ball");
}

int cmd_qaoa_explain(const Globals &g, const std::string &spec, const std::string &patch, const std::string &term,
                     double gamma, double beta) {
    lmc::DiagonalHamiltonian h;
    lmc::VertexSet k;
    if (!patch.empty()) {
        auto colon = patch.find(':');
        if (colon == std::string::npos) {
            throw UsageError("--patch expects <degree>:<edge|pair|ball>");
        }
        try {
            auto tp = lmc::tree_patch(std::stoul(patch.substr(0, colon)), parse_patch_kind(patch.substr(colon + 1)));
            h = tp.hamiltonian;
            k = tp.k;
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else {
        h = lmc::build_localmaxcut_hamiltonian(lmc::graph_from_spec(spec));
    }
    if (!term.empty()) {
        k = lmc::VertexSet();
        for (double v : parse_list(term)) {
            if (v < 0 || v != std::floor(v) || v >= static_cast<double>(h.num_qubits())) {
                throw UsageError("term vertex out of range");
            }
            k.insert(static_cast<std::size_t>(v));
        }
    }
    if (k.empty()) {
        throw UsageError("give --term (or --patch, which supplies its own K)");
    }
    auto b = lmc::expectation_zk(h, k, {gamma, beta});
    Json report = envelope(g, "qaoa explain",
                           {{"graph", spec}, {"patch", patch}, {"term", k.to_vector()}, {"gamma", gamma}, {"beta", beta}});
    report["breakdown"] = lmc::to_json(b);
    std::cout << report.dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"LocalMaxCut: single-round QAOA versus the one-round classical flip algorithm"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    bool seed_given = false;
    std::size_t threads_opt = 0;
    app.add_option("--seed", g.seed, "Master seed (default 1)")->each([&](const std::string &) { seed_given = true; });
    app.add_option("--threads", threads_opt, "Worker threads (default $LMC_THREADS or 1)");
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp from JSON reports");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    int degree = 2;
    auto *reproduce = app.add_subcommand("reproduce", "Optimize both algorithms and check the separation");
    reproduce->add_option("--degree", degree, "Graph degree")->required()->check(CLI::IsMember({2, 3}));

    std::size_t resolution = 256;
    std::string out_path;
    auto *sweep = app.add_subcommand("sweep", "CSV heatmap of F(gamma,beta)/n");
    sweep->add_option("--degree", degree)->required()->check(CLI::IsMember({2, 3}));
    sweep->add_option("--resolution", resolution, "Points per axis")->check(CLI::Range(2, 4096));
    sweep->add_option("--out", out_path, "Output CSV path (default stdout)");

    std::string graph_spec;
    std::size_t samples = 50;
    double tol = 1e-9;
    auto *verify = app.add_subcommand("verify", "Compare the analytic engine against dense simulation");
    verify->add_option("--graph", graph_spec, "cycle:<n> | named:<name> | random:<n>,<d>,<girth>,<seed> | file:<path>")
        ->required();
    verify->add_option("--samples", samples, "Random angle pairs")->check(CLI::PositiveNumber);
    verify->add_option("--tol", tol, "Allowed absolute difference");

    auto *classical = app.add_subcommand("classical", "One-round classical flip algorithm");
    classical->require_subcommand(1);
    std::size_t trials = 200, points = 101;
    std::string preset = "optimal", p_opt, q_opt;
    bool counts = false;
    auto *run = classical->add_subcommand("run", "Monte Carlo on a graph");
    run->add_option("--graph", graph_spec)->required();
    run->add_option("--trials", trials)->check(CLI::PositiveNumber);
    run->add_option("--preset", preset, "optimal | hrss")->check(CLI::IsMember({"optimal", "hrss"}));
    run->add_option("--p", p_opt, "Initial +1 probability");
    run->add_option("--q", q_opt, "Flip probabilities q0,...,qd");
    run->add_flag("--counts", counts, "Include per-trial satisfied counts");
    auto *exact = classical->add_subcommand("exact", "Exact per-vertex success probability");
    exact->add_option("--degree", degree)->required()->check(CLI::Range(1, 5));
    exact->add_option("--preset", preset)->check(CLI::IsMember({"optimal", "hrss"}));
    exact->add_option("--p", p_opt);
    exact->add_option("--q", q_opt);
    auto *curve = classical->add_subcommand("curve", "CSV of the best success probability at each p");
    curve->add_option("--degree", degree)->required()->check(CLI::IsMember({2, 3}));
    curve->add_option("--points", points)->check(CLI::Range(2, 100001));
    curve->add_option("--out", out_path);

    auto *graph_cmd = app.add_subcommand("graph", "Graph utilities");
    graph_cmd->require_subcommand(1);
    auto *gen = graph_cmd->add_subcommand("gen", "Write a graph as an edge list");
    gen->add_option("--graph", graph_spec)->required();
    gen->add_option("--out", out_path);

    auto *ham = app.add_subcommand("ham", "Hamiltonian utilities");
    ham->require_subcommand(1);
    auto *dump = ham->add_subcommand("dump", "JSON term map of the LocalMaxCut Hamiltonian");
    dump->add_option("--graph", graph_spec)->required();

    std::string patch, term;
    double gamma = 0, beta = 0;
    auto *qaoa = app.add_subcommand("qaoa", "Analytic engine utilities");
    qaoa->require_subcommand(1);
    auto *explain = qaoa->add_subcommand("explain", "Per-L breakdown of one <Z_K>");
    auto *graph_opt = explain->add_option("--graph", graph_spec);
    explain->add_option("--patch", patch, "Tree patch <degree>:<edge|pair|ball>")->excludes(graph_opt);
    explain->add_option("--term", term, "K as a vertex list, e.g. 0,1");
    explain->add_option("--gamma", gamma)->required();
    explain->add_option("--beta", beta)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        g.threads = threads_opt ? threads_opt : default_threads();
        if (!seed_given && g.format == "text") {
            std::cerr << "# no --seed given, using " << g.seed << '\n';
        }
        if (*reproduce) {
            return cmd_reproduce(g, degree);
        }
        if (*sweep) {
            return cmd_sweep(g, degree, resolution, out_path);
        }
        if (*verify) {
            return cmd_verify(g, graph_spec, samples, tol);
        }
        if (*run) {
            return cmd_classical_run(g, graph_spec, trials, preset, p_opt, q_opt, counts);
        }
        if (*exact) {
            return cmd_classical_exact(g, degree, preset, p_opt, q_opt);
        }
        if (*curve) {
            return cmd_classical_curve(g, degree, points, out_path);
        }
        if (*gen) {
            return cmd_graph_gen(g, graph_spec, out_path);
        }
        if (*dump) {
            return cmd_ham_dump(g, graph_spec);
        }
        if (*explain) {
            if (graph_spec.empty() && patch.empty()) {
                throw UsageError("give --graph or --patch");
            }
            return cmd_qaoa_explain(g, graph_spec, patch, term, gamma, beta);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const lmc::GraphError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
