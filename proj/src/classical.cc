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


#include "lmc/classical.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace lmc {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

enum Stream : uint64_t { kInitialStream = 1, kFlipStream = 2 };

// Uniform in [0, 1) keyed by (seed, stream, trial, vertex).
double counter_uniform(uint64_t seed, uint64_t stream, uint64_t trial, uint64_t vertex) {
    uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ stream);
    h = splitmix64(h ^ trial);
    h = splitmix64(h ^ vertex);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

double bit_prob(int bit, double p) {
    return bit ? p : 1 - p;
}

std::size_t graph_degree(const Graph &g) {
    auto d = g.regular_degree();
    if (!d) {
        throw std::invalid_argument("the flip algorithm needs a regular graph");
    }
    return *d;
}

}  // namespace

void validate_params(const ClassicalParams &params, std::size_t d) {
    if (params.q.size() != d + 1) {
        throw std::invalid_argument("flip vector has " + std::to_string(params.q.size()) + " entries, degree " +
                                    std::to_string(d) + " needs " + std::to_string(d + 1));
    }
    auto in_unit = [](double x) { return x >= 0 && x <= 1; };
    if (!in_unit(params.p) || !std::all_of(params.q.begin(), params.q.end(), in_unit)) {
        throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
}

std::size_t agreeing_count(const Graph &g, const Cut &cut, Vertex v) {
    std::size_t count = 0;
    for (Vertex u : g.neighbors(v)) {
        count += cut[u] == cut[v];
    }
    return count;
}

bool satisfied(const Graph &g, const Cut &cut, Vertex v) {
    return agreeing_count(g, cut, v) <= g.degree(v) / 2;
}

std::size_t satisfied_count(const Graph &g, const Cut &cut) {
    if (cut.size() != g.num_vertices()) {
        throw std::invalid_argument("cut length does not match the vertex count");
    }
    std::size_t count = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        count += satisfied(g, cut, v);
    }
    return count;
}

RoundResult run_one_round(const Graph &g, const ClassicalParams &params, uint64_t seed, uint64_t trial) {
    validate_params(params, graph_degree(g));
    const std::size_t n = g.num_vertices();
    RoundResult r;
    r.initial.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        r.initial[v] = counter_uniform(seed, kInitialStream, trial, v) < params.p ? 1 : -1;
    }
    r.final = r.initial;
    for (Vertex v = 0; v < n; ++v) {
        if (counter_uniform(seed, kFlipStream, trial, v) < params.q[agreeing_count(g, r.initial, v)]) {
            r.final[v] = static_cast<int8_t>(-r.final[v]);
        }
    }
    r.satisfied = satisfied_count(g, r.final);
    return r;
}

RunStats monte_carlo(const Graph &g, const ClassicalParams &params, std::size_t trials, uint64_t seed,
                     std::size_t threads) {
    if (trials == 0) {
        throw std::invalid_argument("monte_carlo needs at least one trial");
    }
    validate_params(params, graph_degree(g));
    RunStats stats;
    stats.trials = trials;
    stats.num_vertices = g.num_vertices();
    stats.counts.assign(trials, 0);
    threads = std::clamp<std::size_t>(threads, 1, trials);
    auto work = [&](std::size_t worker) {
        for (std::size_t t = worker; t < trials; t += threads) {
            stats.counts[t] = run_one_round(g, params, seed, t).satisfied;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back(work, w);
        }
    }
    const double n = static_cast<double>(g.num_vertices());
    double sum = 0;
    for (auto c : stats.counts) {
        sum += c / n;
    }
    stats.mean = sum / trials;
    if (trials > 1) {
        double ss = 0;
        for (auto c : stats.counts) {
            ss += (c / n - stats.mean) * (c / n - stats.mean);
        }
        stats.std_error = std::sqrt(ss / (trials - 1) / trials);
    }
    return stats;
}

std::size_t hrss_threshold(std::size_t d) {
    // Smallest r with 2r - d >= sqrt(d).
    std::size_t r = (d + 1) / 2;
    while ((2 * r - d) * (2 * r - d) < d) {
        ++r;
    }
    return r;
}

ClassicalParams hrss_preset(std::size_t d) {
    if (d < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    ClassicalParams params{0.5, std::vector<double>(d + 1, 0.0)};
    for (std::size_t l = hrss_threshold(d); l <= d; ++l) {
        params.q[l] = 1;
    }
    return params;
}

double prob_satisfied_initial(std::size_t d, double p) {
    if (p != 0.5) {
        throw std::invalid_argument("the closed form holds only for p = 1/2");
    }
    double binom = 1, total = 0;
    for (std::size_t j = 0; j <= d / 2; ++j) {
        total += binom;
        binom = binom * static_cast<double>(d - j) / static_cast<double>(j + 1);
    }
    return std::ldexp(total, -static_cast<int>(d));
}

double flip_prob(int a, int b, const ClassicalParams &params, std::size_t d) {
    validate_params(params, d);
    const double p = params.p;
    const auto &q = params.q;
    const int ab = (a ? 2 : 0) | (b ? 1 : 0);
    if (d == 2) {
        switch (ab) {
            case 0b00: return (1 - p) * q[2] + p * q[1];
            case 0b01: return (1 - p) * q[0] + p * q[1];
            case 0b10: return (1 - p) * q[1] + p * q[0];
            default: return p * q[2] + (1 - p) * q[1];
        }
    }
    if (d == 3) {
        const double s = (1 - p) * (1 - p), m = 2 * p * (1 - p), t = p * p;
        switch (ab) {
            case 0b00: return q[3] * s + q[2] * m + q[1] * t;
            case 0b01: return q[0] * s + q[1] * m + q[2] * t;
            case 0b10: return q[2] * s + q[1] * m + q[0] * t;
            default: return q[1] * s + q[2] * m + q[3] * t;
        }
    }
    throw std::invalid_argument("flip_prob supports degree 2 and 3 only");
}

double q2_star(double p, double q1) {
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    const double num = -3 + 11 * p - 15 * p2 + 8 * p3 - 4 * p4 + 4 * p * q1 - 14 * p2 * q1 + 20 * p3 * q1 - 10 * p4 * q1;
    const double den = -6 + 26 * p - 44 * p2 + 36 * p3 - 18 * p4;
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("q2_star: denominator vanishes at p = " + std::to_string(p));
    }
    return num / den;
}

double reduced_objective_d2(double p) {
    const double num = 9 + p * (-30 + p * (19 + p * (42 + p * (-55 + p * (-4 + p * (76 + p * (-64 + p * 16)))))));
    const double den = 12 + p * (-52 + p * (88 + p * (-72 + p * 36)));
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("reduced objective: denominator vanishes at p = " + std::to_string(p));
    }
    return num / den;
}

namespace {

// f[2a + b] = flip_prob(a, b).
std::array<double, 4> flip_table(const ClassicalParams &params, std::size_t d) {
    std::array<double, 4> f{};
    for (int ab = 0; ab < 4; ++ab) {
        f[ab] = flip_prob(ab >> 1, ab & 1, params, d);
    }
    return f;
}

// Bit 0 of `ball` is v, bits 1..d its neighbors.
double conditional_ball(unsigned ball, std::size_t d, const ClassicalParams &params, const std::array<double, 4> &f) {
    const int a = ball & 1;
    std::size_t agree = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        agree += static_cast<int>((ball >> i) & 1) == a;
    }
    const double qv = params.q[agree];
    double total = 0;
    for (unsigned fin = 0; fin < (1u << (d + 1)); ++fin) {
        const int x = fin & 1;
        std::size_t final_agree = 0;
        for (std::size_t i = 1; i <= d; ++i) {
            final_agree += static_cast<int>((fin >> i) & 1) == x;
        }
        if (2 * final_agree > d) {
            continue;
        }
        // v flips iff a != x; neighbor i flips iff b != y.
        double term = (a != x) ? qv : 1 - qv;
        for (std::size_t i = 1; i <= d; ++i) {
            const int b = (ball >> i) & 1, y = (fin >> i) & 1;
            const double fab = f[2 * a + b];
            term *= (b != y) ? fab : 1 - fab;
        }
        total += term;
    }
    return total;
}

double ball_weight(unsigned ball, std::size_t d, double p) {
    double w = 1;
    for (std::size_t i = 0; i <= d; ++i) {
        w *= bit_prob((ball >> i) & 1, p);
    }
    return w;
}

double exact_prob(std::size_t d, const ClassicalParams &params) {
    validate_params(params, d);
    const auto f = flip_table(params, d);
    double total = 0;
    for (unsigned ball = 0; ball < (1u << (d + 1)); ++ball) {
        total += ball_weight(ball, d, params.p) * conditional_ball(ball, d, params, f);
    }
    return total;
}

}  // namespace

double conditional_prob_d3(unsigned ball, const ClassicalParams &params) {
    validate_params(params, 3);
    if (ball >= 16) {
        throw std::invalid_argument("ball assignment must fit in 4 bits");
    }
    return conditional_ball(ball, 3, params, flip_table(params, 3));
}

double exact_prob_d2(const ClassicalParams &params) {
    return exact_prob(2, params);
}

double exact_prob_d3(const ClassicalParams &params) {
    return exact_prob(3, params);
}

double exact_prob_d3_symmetric(const ClassicalParams &params) {
    validate_params(params, 3);
    ClassicalParams mirrored{1 - params.p, params.q};
    // Bit 0 is v; representatives v=0 with 0, 1, 2, 3 neighbors at 1.
    const std::array<std::pair<unsigned, double>, 4> orbits{{{0b0000, 1}, {0b0010, 3}, {0b0110, 3}, {0b1110, 1}}};
    double total = 0;
    for (auto [ball, mult] : orbits) {
        total += mult * (conditional_prob_d3(ball, params) * ball_weight(ball, 3, params.p) +
                         conditional_prob_d3(ball, mirrored) * ball_weight(ball, 3, mirrored.p));
    }
    return total;
}

namespace {

// Radius-2 tree around v: vertex 0 is v, 1..d its neighbors, and the d-1
// children of neighbor i occupy d+1+(i-1)(d-1) .. d+(i)(d-1).
struct TreeOracle {
    std::size_t d;
    const ClassicalParams &params;

    std::size_t size() const {
        return 1 + d + d * (d - 1);
    }

    // Pr[v satisfied after the flip step | full initial assignment z].
    double satisfied_given(uint32_t z) const {
        auto bit = [&](std::size_t i) { return static_cast<int>((z >> i) & 1); };
        const int zv = bit(0);
        std::size_t lv = 0;
        std::vector<double> flip(d + 1);
        for (std::size_t i = 1; i <= d; ++i) {
            lv += bit(i) == zv;
            std::size_t li = bit(i) == zv;
            for (std::size_t j = 0; j + 1 < d; ++j) {
                li += bit(d + 1 + (i - 1) * (d - 1) + j) == bit(i);
            }
            flip[i] = params.q[li];
        }
        double total = 0;
        for (int fv = 0; fv <= 1; ++fv) {
            const double pv = fv ? params.q[lv] : 1 - params.q[lv];
            const int xv = zv ^ fv;
            // Distribution of the number of neighbors agreeing with v after the step.
            std::vector<double> dist(d + 1, 0.0);
            dist[0] = 1;
            for (std::size_t i = 1; i <= d; ++i) {
                const double agree = bit(i) == xv ? 1 - flip[i] : flip[i];
                for (std::size_t c = i; c > 0; --c) {
                    dist[c] = dist[c] * (1 - agree) + dist[c - 1] * agree;
                }
                dist[0] *= 1 - agree;
            }
            double ok = 0;
            for (std::size_t c = 0; c <= d / 2; ++c) {
                ok += dist[c];
            }
            total += pv * ok;
        }
        return total;
    }
};

void check_oracle_degree(std::size_t d, const ClassicalParams &params) {
    if (d < 1 || d > kMaxOracleDegree) {
        throw std::invalid_argument("neighborhood oracle supports degree 1.." + std::to_string(kMaxOracleDegree));
    }
    validate_params(params, d);
}

}  // namespace

double neighborhood_oracle_prob(std::size_t d, const ClassicalParams &params) {
    check_oracle_degree(d, params);
    TreeOracle oracle{d, params};
    const std::size_t n = oracle.size();
    std::vector<double> weight_by_ones(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        weight_by_ones[k] = std::pow(params.p, double(k)) * std::pow(1 - params.p, double(n - k));
    }
    double total = 0;
    for (uint32_t z = 0; z < (uint32_t{1} << n); ++z) {
        total += weight_by_ones[std::popcount(z)] * oracle.satisfied_given(z);
    }
    return total;
}

double neighborhood_oracle_conditional(std::size_t d, const ClassicalParams &params, unsigned ball) {
    check_oracle_degree(d, params);
    if (ball >> (d + 1)) {
        throw std::invalid_argument("ball assignment has bits beyond v and its neighbors");
    }
    TreeOracle oracle{d, params};
    const std::size_t children = oracle.size() - (d + 1);
    double total = 0;
    for (uint32_t c = 0; c < (uint32_t{1} << children); ++c) {
        const int ones = std::popcount(c);
        const double w = std::pow(params.p, double(ones)) * std::pow(1 - params.p, double(children - ones));
        total += w * oracle.satisfied_given(ball | (c << (d + 1)));
    }
    return total;
}

}  // namespace lmc
