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


#ifndef LMC_CLASSICAL_H
#define LMC_CLASSICAL_H

#include <array>
#include <cstdint>
#include <vector>

#include "lmc/graph.h"

namespace lmc {

/// One-round flip algorithm parameters: every vertex starts at +1 with
/// probability p, then flips with probability q[ℓ] where ℓ is its number of
/// agreeing neighbors.
struct ClassicalParams {
    double p = 0.5;
    std::vector<double> q;
};

/// Throws std::invalid_argument unless q has d+1 entries and all values lie in [0,1].
void validate_params(const ClassicalParams &params, std::size_t d);

/// Per-vertex assignment in {-1, +1}.
using Cut = std::vector<int8_t>;

std::size_t agreeing_count(const Graph &g, const Cut &cut, Vertex v);
/// At most ⌊deg/2⌋ agreeing neighbors, i.e. at least ⌈deg/2⌉ incident edges cut.
bool satisfied(const Graph &g, const Cut &cut, Vertex v);
std::size_t satisfied_count(const Graph &g, const Cut &cut);

struct RoundResult {
    Cut initial;
    Cut final;
    std::size_t satisfied = 0;
};

/// Draws τ0, applies one synchronous flip step and counts satisfied vertices
/// under τ1. Randomness is a pure function of (seed, trial, vertex).
RoundResult run_one_round(const Graph &g, const ClassicalParams &params, uint64_t seed, uint64_t trial = 0);

struct RunStats {
    std::size_t trials = 0;
    std::size_t num_vertices = 0;
    double mean = 0;
    double std_error = 0;
    std::vector<std::size_t> counts;
};

/// Trials 0..trials-1 of run_one_round. Trials are split across `threads`
/// workers; the result does not depend on the thread count.
RunStats monte_carlo(const Graph &g, const ClassicalParams &params, std::size_t trials, uint64_t seed,
                     std::size_t threads = 1);

/// Threshold rule q_ℓ = [ℓ >= ⌈(d+√d)/2⌉] with p = 1/2.
ClassicalParams hrss_preset(std::size_t d);
/// Threshold ⌈(d+√d)/2⌉, computed in integers.
std::size_t hrss_threshold(std::size_t d);

/// Pr[v satisfied under τ0] at p = 1/2: 2^-d Σ_{j ≤ ⌊d/2⌋} C(d, j).
/// Other values of p are rejected; use the neighborhood oracle for those.
double prob_satisfied_initial(std::size_t d, double p = 0.5);

/// f_ab: probability that a vertex holding bit b flips given that one of its
/// neighbors holds bit a (bit 1 is +1). d ∈ {2, 3}.
double flip_prob(int a, int b, const ClassicalParams &params, std::size_t d);

/// Pr[S_v^1] on a degree-2 graph of girth at least 7: sum over all 8 initial
/// ball assignments. With q0 = q1 = 0 an initially satisfied vertex cannot
/// become unsatisfied and this collapses to the 4-term polynomial in (p, q2).
double exact_prob_d2(const ClassicalParams &params);
/// Stationary q2 for given (p, q1). Throws std::domain_error where the
/// denominator vanishes.
double q2_star(double p, double q1);
/// Pr[S_v^1 | p, q1 = 0, q2 = q2_star(p, 0)] as a single rational function of p.
double reduced_objective_d2(double p);

/// Pr[S_v^1 | τ0(B(v)) = abcd] for d = 3. Bit 0 of `ball` is v, bits 1..3 its neighbors.
double conditional_prob_d3(unsigned ball, const ClassicalParams &params);
/// Pr[S_v^1] on a cubic graph of girth at least 7: sum over all 16 initial ball assignments.
double exact_prob_d3(const ClassicalParams &params);
/// The same probability assembled from the orbit representatives 0000,
/// 0001, 0011, 0111 (weighted by orbit size) evaluated at p and at 1-p.
double exact_prob_d3_symmetric(const ClassicalParams &params);

/// Largest degree accepted by the neighborhood oracle (2-ball of 26 vertices).
inline constexpr std::size_t kMaxOracleDegree = 5;

/// Pr[S_v^1] on the infinite d-regular tree by enumerating every initial
/// assignment of the radius-2 ball around v.
double neighborhood_oracle_prob(std::size_t d, const ClassicalParams &params);
/// Same, conditioned on τ0(B(v)) = ball (bit 0 is v, bit i its i-th neighbor).
double neighborhood_oracle_conditional(std::size_t d, const ClassicalParams &params, unsigned ball);

}  // namespace lmc

#endif
