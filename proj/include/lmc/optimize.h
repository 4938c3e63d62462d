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


#ifndef LMC_OPTIMIZE_H
#define LMC_OPTIMIZE_H

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lmc {

using Objective = std::function<double(std::span<const double>)>;

/// One grid axis. Points are lo + (i + offset) * step for i < resolution, where
/// step spans [lo, hi] when include_upper is set and [lo, hi) otherwise.
struct Axis {
    std::string name;
    double lo = 0;
    double hi = 1;
    std::size_t resolution = 2;
    bool include_upper = false;
    /// Fraction of a step by which the grid origin is shifted.
    double offset = 0;

    double step() const;
    double point(std::size_t i) const;
};

struct GridResult {
    std::vector<Axis> axes;
    /// Row-major: the last axis varies fastest.
    std::vector<double> values;
    std::size_t best_index = 0;
    std::vector<double> best_point;
    double best_value = 0;

    std::vector<double> point(std::size_t index) const;
    /// Indices of the k largest cells, ties broken by lower index.
    std::vector<std::size_t> top_k(std::size_t k) const;
};

/// Evaluates the objective on every grid cell. Equal values keep the lowest
/// linear index. Cells are split across `threads` workers.
GridResult grid_sweep(const Objective &f, std::vector<Axis> axes, std::size_t threads = 1);

/// CSV with one column per axis name plus `value`, rows in grid order.
void write_grid_csv(const GridResult &grid, std::ostream &out);

struct NelderMeadOptions {
    double tol = 1e-9;
    std::size_t max_iters = 2000;
    /// Initial simplex edge as a fraction of each box side.
    double initial_step = 0.05;
    /// Fresh simplices started from the incumbent after convergence.
    std::size_t max_restarts = 8;
};

struct NelderMeadResult {
    std::vector<double> point;
    double value = 0;
    std::size_t iterations = 0;
    std::size_t restarts = 0;
    bool converged = false;
    double diameter = 0;
    double spread = 0;
};

/// Maximizes f inside the box [lo, hi] (iterates are clamped). Stops when the
/// simplex diameter or the spread of vertex values drops below tol, or after
/// max_iters iterations in total (reported through `converged`).
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> start, std::span<const double> lo,
                             std::span<const double> hi, const NelderMeadOptions &opts = {});

struct LocalMaximum {
    std::vector<double> point;
    double value = 0;
};

struct OptimizationReport {
    std::string objective;
    std::vector<std::string> parameter_names;
    std::vector<double> argmax;
    double value = 0;
    std::vector<std::size_t> grid_resolution;
    double grid_best_value = 0;
    std::size_t starts = 0;
    std::size_t iterations = 0;
    double tolerance = 0;
    double achieved_diameter = 0;
    bool converged = false;
    /// Distinct refined maxima (parameter distance > 1e-3), best first.
    std::vector<LocalMaximum> maxima;
};

struct MultiStartOptions {
    std::size_t starts = 8;
    NelderMeadOptions nelder_mead;
    std::size_t threads = 1;
    double distinct_distance = 1e-3;
    /// Refined maxima this close to the best value count as ties; the
    /// lexicographically smallest point wins.
    double tie_tolerance = 1e-9;
};

/// Grid sweep followed by Nelder-Mead from the best `starts` cells.
OptimizationReport grid_then_refine(const std::string &name, const Objective &f, std::vector<Axis> axes,
                                    const MultiStartOptions &opts = {});

/// Axes of the QAOA search: γ ∈ [0, 2π), β ∈ [0, π).
std::vector<Axis> qaoa_axes(std::size_t resolution = 256, double offset = 0);

/// Maximizes F(γ,β)/n for degree 2 or 3 LocalMaxCut.
OptimizationReport optimize_qaoa(std::size_t d, std::size_t resolution = 256, double offset = 0,
                                 std::size_t threads = 1);

/// Axes (p, q0..qd) over [0,1]; 21 points each for d = 2, 11 for d = 3.
std::vector<Axis> classical_axes(std::size_t d, double offset = 0);

/// Maximizes Pr[S_v^1] over (p, q0..qd) for d ∈ {2, 3}. The objective is
/// invariant under p -> 1-p and under q -> 1-q, so the reported argmax is
/// mapped to p <= 1/2 and q_d >= 1/2.
OptimizationReport optimize_classical(std::size_t d, double offset = 0, std::size_t threads = 1);

/// Best achievable Pr[S_v^1] at fixed p (maximized over q), on a grid of p values.
std::vector<std::pair<double, double>> classical_curve(std::size_t d, std::size_t points);

}  // namespace lmc

#endif
