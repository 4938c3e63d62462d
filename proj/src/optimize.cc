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


#include "lmc/optimize.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "lmc/classical.h"
#include "lmc/closed_forms.h"

namespace lmc {

double Axis::step() const {
    return (hi - lo) / static_cast<double>(include_upper ? resolution - 1 : resolution);
}

double Axis::point(std::size_t i) const {
    return std::min(hi, lo + (static_cast<double>(i) + offset) * step());
}

std::vector<double> GridResult::point(std::size_t index) const {
    std::vector<double> x(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
        x[a] = axes[a].point(index % axes[a].resolution);
        index /= axes[a].resolution;
    }
    return x;
}

std::vector<std::size_t> GridResult::top_k(std::size_t k) const {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    k = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] > values[b] || (values[a] == values[b] && a < b); });
    idx.resize(k);
    return idx;
}

GridResult grid_sweep(const Objective &f, std::vector<Axis> axes, std::size_t threads) {
    if (axes.empty()) {
        throw std::invalid_argument("grid needs at least one axis");
    }
    std::size_t cells = 1;
    for (const auto &ax : axes) {
        if (ax.resolution < 2) {
            throw std::invalid_argument("axis '" + ax.name + "' needs at least 2 points");
        }
        if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi) || ax.hi < ax.lo) {
            throw std::invalid_argument("axis '" + ax.name + "' has invalid bounds");
        }
        cells *= ax.resolution;
    }
    GridResult g;
    g.axes = std::move(axes);
    g.values.resize(cells);
    threads = std::clamp<std::size_t>(threads, 1, cells);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            g.values[i] = f(g.point(i));
        }
    };
    if (threads == 1) {
        work(0, cells);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (cells + threads - 1) / threads;
        for (std::size_t begin = 0; begin < cells; begin += chunk) {
            pool.emplace_back(work, begin, std::min(cells, begin + chunk));
        }
    }
    for (std::size_t i = 1; i < cells; ++i) {
        if (g.values[i] > g.values[g.best_index]) {
            g.best_index = i;
        }
    }
    g.best_point = g.point(g.best_index);
    g.best_value = g.values[g.best_index];
    return g;
}

void write_grid_csv(const GridResult &grid, std::ostream &out) {
    for (const auto &ax : grid.axes) {
        out << ax.name << ',';
    }
    out << "value\n";
    out.precision(17);
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        for (double x : grid.point(i)) {
            out << x << ',';
        }
        out << grid.values[i] << '\n';
    }
}

namespace {

struct SimplexPoint {
    std::vector<double> x;
    double f;
};

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

struct SimplexRun {
    const Objective &f;
    std::span<const double> lo, hi;
    const NelderMeadOptions &opts;

    SimplexPoint make(std::vector<double> x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], lo[i], hi[i]);
        }
        double v = f(x);
        return {std::move(x), v};
    }

    // x = c + t (w - c)
    SimplexPoint along(const std::vector<double> &c, const std::vector<double> &w, double t) const {
        std::vector<double> x(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            x[i] = c[i] + t * (w[i] - c[i]);
        }
        return make(std::move(x));
    }

    NelderMeadResult run(const SimplexPoint &start) const {
        const std::size_t n = start.x.size();
        std::vector<SimplexPoint> s{start};
        for (std::size_t i = 0; i < n; ++i) {
            auto x = start.x;
            const double h = opts.initial_step * (hi[i] - lo[i]);
            x[i] = (x[i] + h <= hi[i]) ? x[i] + h : x[i] - h;
            s.push_back(make(std::move(x)));
        }
        NelderMeadResult r;
        auto by_value = [](const SimplexPoint &a, const SimplexPoint &b) { return a.f > b.f; };
        while (true) {
            std::stable_sort(s.begin(), s.end(), by_value);
            r.diameter = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                r.diameter = std::max(r.diameter, distance(s[i].x, s[0].x));
            }
            r.spread = s[0].f - s[n].f;
            if (r.diameter < opts.tol || r.spread < opts.tol) {
                r.converged = true;
                break;
            }
            if (r.iterations >= opts.max_iters) {
                break;
            }
            ++r.iterations;
            std::vector<double> c(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    c[j] += s[i].x[j] / static_cast<double>(n);
                }
            }
            const SimplexPoint &worst = s[n];
            SimplexPoint reflected = along(c, worst.x, -1);
            if (reflected.f > s[0].f) {
                SimplexPoint expanded = along(c, worst.x, -2);
                s[n] = expanded.f > reflected.f ? std::move(expanded) : std::move(reflected);
                continue;
            }
            if (reflected.f > s[n - 1].f) {
                s[n] = std::move(reflected);
                continue;
            }
            const bool outside = reflected.f > worst.f;
            SimplexPoint contracted = outside ? along(c, worst.x, -0.5) : along(c, worst.x, 0.5);
            if (contracted.f > (outside ? reflected.f : worst.f) ||
                (outside && contracted.f == reflected.f)) {
                s[n] = std::move(contracted);
                continue;
            }
            for (std::size_t i = 1; i <= n; ++i) {
                s[i] = along(s[0].x, s[i].x, 0.5);
            }
        }
        r.point = s[0].x;
        r.value = s[0].f;
        return r;
    }
};

}  // namespace

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> start, std::span<const double> lo,
                             std::span<const double> hi, const NelderMeadOptions &opts) {
    if (start.empty() || lo.size() != start.size() || hi.size() != start.size()) {
        throw std::invalid_argument("start and box dimensions differ");
    }
    SimplexRun runner{f, lo, hi, opts};
    NelderMeadResult best = runner.run(runner.make(std::move(start)));
    bool all_converged = best.converged;
    std::size_t iterations = best.iterations;
    std::size_t restarts = 0;
    while (restarts < opts.max_restarts) {
        NelderMeadResult next = runner.run(SimplexPoint{best.point, best.value});
        ++restarts;
        iterations += next.iterations;
        all_converged = all_converged && next.converged;
        const bool improved = next.value > best.value + opts.tol;
        if (next.value >= best.value) {
            best = std::move(next);
        }
        if (!improved) {
            break;
        }
    }
    best.iterations = iterations;
    best.restarts = restarts;
    best.converged = all_converged;
    return best;
}

OptimizationReport grid_then_refine(const std::string &name, const Objective &f, std::vector<Axis> axes,
                                    const MultiStartOptions &opts) {
    std::vector<double> lo, hi;
    for (const auto &ax : axes) {
        lo.push_back(ax.lo);
        hi.push_back(ax.hi);
    }
    GridResult grid = grid_sweep(f, axes, opts.threads);
    const auto seeds = grid.top_k(opts.starts);
    std::vector<NelderMeadResult> refined(seeds.size());
    const std::size_t threads = std::clamp<std::size_t>(opts.threads, 1, seeds.size());
    auto work = [&](std::size_t worker) {
        for (std::size_t i = worker; i < seeds.size(); i += threads) {
            refined[i] = nelder_mead(f, grid.point(seeds[i]), lo, hi, opts.nelder_mead);
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

    OptimizationReport rep;
    rep.objective = name;
    for (const auto &ax : axes) {
        rep.parameter_names.push_back(ax.name);
        rep.grid_resolution.push_back(ax.resolution);
    }
    rep.grid_best_value = grid.best_value;
    rep.starts = seeds.size();
    rep.tolerance = opts.nelder_mead.tol;
    rep.converged = true;
    for (const auto &r : refined) {
        rep.iterations += r.iterations;
        rep.converged = rep.converged && r.converged;
    }
    std::vector<std::size_t> order(refined.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (refined[a].value != refined[b].value) {
            return refined[a].value > refined[b].value;
        }
        return refined[a].point < refined[b].point;
    });
    for (std::size_t i : order) {
        const auto &r = refined[i];
        bool fresh = std::none_of(rep.maxima.begin(), rep.maxima.end(), [&](const LocalMaximum &m) {
            return distance(m.point, r.point) <= opts.distinct_distance;
        });
        if (fresh) {
            rep.maxima.push_back({r.point, r.value});
        }
    }
    // Symmetric copies of the optimum differ only by rounding; report the
    // lexicographically smallest of them.
    const NelderMeadResult *best = &refined[order.front()];
    for (std::size_t i : order) {
        if (refined[i].value >= refined[order.front()].value - opts.tie_tolerance && refined[i].point < best->point) {
            best = &refined[i];
        }
    }
    rep.argmax = best->point;
    rep.value = f(rep.argmax);
    rep.achieved_diameter = best->diameter;
    return rep;
}

std::vector<Axis> qaoa_axes(std::size_t resolution, double offset) {
    return {Axis{"gamma", 0, 2 * std::numbers::pi, resolution, false, offset},
            Axis{"beta", 0, std::numbers::pi, resolution, false, offset}};
}

OptimizationReport optimize_qaoa(std::size_t d, std::size_t resolution, double offset, std::size_t threads) {
    Objective f;
    if (d == 2) {
        f = [](std::span<const double> x) { return closed_form_f2(1, QaoaAngles{x[0], x[1]}); };
    } else if (d == 3) {
        f = [](std::span<const double> x) { return closed_form_f3(1, QaoaAngles{x[0], x[1]}); };
    } else {
        throw std::invalid_argument("optimize_qaoa supports degree 2 and 3 only");
    }
    MultiStartOptions opts;
    opts.threads = threads;
    return grid_then_refine("qaoa_d" + std::to_string(d), f, qaoa_axes(resolution, offset), opts);
}

namespace {

Objective classical_objective(std::size_t d) {
    if (d == 2) {
        return [](std::span<const double> x) {
            return exact_prob_d2(ClassicalParams{x[0], std::vector<double>(x.begin() + 1, x.end())});
        };
    }
    if (d == 3) {
        return [](std::span<const double> x) {
            return exact_prob_d3(ClassicalParams{x[0], std::vector<double>(x.begin() + 1, x.end())});
        };
    }
    throw std::invalid_argument("optimize_classical supports degree 2 and 3 only");
}

}  // namespace

std::vector<Axis> classical_axes(std::size_t d, double offset) {
    const std::size_t res = d == 2 ? 21 : 11;
    std::vector<Axis> axes{Axis{"p", 0, 1, res, true, offset}};
    for (std::size_t i = 0; i <= d; ++i) {
        axes.push_back(Axis{"q" + std::to_string(i), 0, 1, res, true, offset});
    }
    return axes;
}

OptimizationReport optimize_classical(std::size_t d, double offset, std::size_t threads) {
    Objective f = classical_objective(d);
    MultiStartOptions opts;
    opts.threads = threads;
    OptimizationReport rep = grid_then_refine("classical_d" + std::to_string(d), f, classical_axes(d, offset), opts);
    auto &x = rep.argmax;
    if (x[0] > 0.5) {
        x[0] = 1 - x[0];
    }
    if (x.back() < 0.5) {
        for (std::size_t i = 1; i < x.size(); ++i) {
            x[i] = 1 - x[i];
        }
    }
    rep.value = f(x);
    return rep;
}

std::vector<std::pair<double, double>> classical_curve(std::size_t d, std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("curve needs at least 2 points");
    }
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < points; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(points - 1);
        if (d == 2) {
            out.emplace_back(p, reduced_objective_d2(p));
        } else if (d == 3) {
            Objective f = [p](std::span<const double> q) {
                return exact_prob_d3(ClassicalParams{p, std::vector<double>(q.begin(), q.end())});
            };
            std::vector<Axis> axes;
            for (int j = 0; j <= 3; ++j) {
                axes.push_back(Axis{"q" + std::to_string(j), 0, 1, 6, true, 0});
            }
            MultiStartOptions opts;
            opts.starts = 2;
            out.emplace_back(p, grid_then_refine("curve", f, axes, opts).value);
        } else {
            throw std::invalid_argument("classical curve supports degree 2 and 3 only");
        }
    }
    return out;
}

}  // namespace lmc
