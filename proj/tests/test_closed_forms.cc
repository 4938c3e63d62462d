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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lmc/closed_forms.h"

namespace lmc {
namespace {

constexpr double kPi = std::numbers::pi;

template <typename Fn>
void for_each_grid_angle(Fn &&fn) {
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            fn(QaoaAngles{2 * kPi * i / 32, kPi * j / 32});
        }
    }
}

TEST(TreePatch, VertexCounts) {
    EXPECT_EQ(tree_patch(2, PatchKind::Edge).labels.size(), 6u);
    EXPECT_EQ(tree_patch(2, PatchKind::Pair).labels.size(), 7u);
    EXPECT_EQ(tree_patch(3, PatchKind::Edge).labels.size(), 14u);
    EXPECT_EQ(tree_patch(3, PatchKind::Ball).labels.size(), 22u);
    EXPECT_THROW(tree_patch(2, PatchKind::Ball), std::invalid_argument);
    EXPECT_THROW(tree_patch(3, PatchKind::Pair), std::invalid_argument);
    EXPECT_THROW(tree_patch(4, PatchKind::Edge), std::invalid_argument);
}

TEST(TreePatch, EdgePatchD2MatchesPathLabels) {
    auto p = tree_patch(2, PatchKind::Edge);
    const auto u = p.vertex("u"), v = p.vertex("v"), u1 = p.vertex("u'"), u2 = p.vertex("u''"),
               v1 = p.vertex("v'");
    EXPECT_EQ(p.k, (VertexSet{u, v}));
    auto o = odd_intersection_terms(p.hamiltonian, VertexSet{u});
    ASSERT_EQ(o.size(), 4u);
    for (auto s : {VertexSet{u2, u}, VertexSet{u1, u}, VertexSet{u, v}, VertexSet{u, v1}}) {
        EXPECT_NE(p.hamiltonian.weight(s), 0.0) << s.str();
    }
    EXPECT_THROW(p.vertex("nope"), std::out_of_range);
}

TEST(TreePatch, BallPatchOddSetForLeaves) {
    auto p = tree_patch(3, PatchKind::Ball);
    VertexSet leaves{p.vertex("u1"), p.vertex("u2"), p.vertex("u3")};
    EXPECT_EQ(odd_intersection_terms(p.hamiltonian, leaves).size(), 19u);
}

TEST(ClosedForms, TrivialValues) {
    EXPECT_EQ(closed_form_f2(1, {0, 0.7}), 0.75);
    EXPECT_EQ(closed_form_f3(1, {0, 0.7}), 0.5);
    EXPECT_NEAR(zk_edge_d3({0.9, kPi / 4}), 0.0, 1e-16);
    EXPECT_NEAR(closed_form_f2(1, {0.5973404, 0.3143350}), 0.93937, 1e-5);
    EXPECT_NEAR(closed_form_f3(1, {0.6358585, 0.3459564}), 0.819292, 1e-6);
}

struct PatchCase {
    std::size_t d;
    PatchKind kind;
    double (*form)(QaoaAngles);
    const char *name;
};

TEST(ClosedForms, MatchEngineOnTreePatches) {
    const PatchCase cases[] = {{2, PatchKind::Edge, zk_edge_d2, "d2 edge"},
                               {2, PatchKind::Pair, zk_pair_d2, "d2 pair"},
                               {3, PatchKind::Edge, zk_edge_d3, "d3 edge"},
                               {3, PatchKind::Ball, zk_ball_d3, "d3 ball"}};
    for (const auto &c : cases) {
        auto p = tree_patch(c.d, c.kind);
        ZkPlan plan(p.hamiltonian, p.k);
        double worst = 0;
        for_each_grid_angle([&](QaoaAngles a) { worst = std::max(worst, std::abs(plan.evaluate(a) - c.form(a))); });
        EXPECT_LE(worst, 1e-9) << c.name;
    }
}

TEST(ClosedForms, F2MatchesEngineOnLongCycles) {
    for (std::size_t n = 7; n <= 12; ++n) {
        QaoaExpectation f(build_localmaxcut_hamiltonian(make_cycle(n)));
        for_each_grid_angle([&](QaoaAngles a) {
            if (std::fmod(a.gamma * 7 + a.beta * 3, 1.0) < 0.2) {  // a spread-out fifth of the grid
                ASSERT_NEAR(f.evaluate(a), closed_form_f2(double(n), a), 1e-9) << n;
            }
        });
    }
}

TEST(ClosedForms, F3MatchesEngineOnGirthSevenCubicGraph) {
    Graph g = make_named(NamedGraph::McGee);
    const double n = double(g.num_vertices());
    QaoaExpectation f(build_localmaxcut_hamiltonian(g));
    for_each_grid_angle([&](QaoaAngles a) {
        const double engine = f.evaluate(a);
        const double assembled = n / 2 - 0.5 * (1.5 * n) * zk_edge_d3(a) + 0.25 * n * zk_ball_d3(a);
        ASSERT_NEAR(engine, assembled, 1e-9);
        ASSERT_NEAR(engine, closed_form_f3(n, a), 1e-9);
    });
}

TEST(ClosedForms, F2AssemblesFromTermForms) {
    for_each_grid_angle([](QaoaAngles a) {
        ASSERT_NEAR(closed_form_f2(1, a), 0.75 - 0.5 * zk_edge_d2(a) - 0.25 * zk_pair_d2(a), 1e-12);
    });
}

TEST(DoubleAngle, Identities) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> dist(-4 * kPi, 4 * kPi);
    for (int i = 0; i < 1000; ++i) {
        const double g = dist(rng);
        const double c = std::cos(g), s = std::sin(g), ch = std::cos(g / 2), sh = std::sin(g / 2);
        EXPECT_NEAR(c * ch + s * sh, ch, 1e-12);
        EXPECT_NEAR(c * ch - s * sh, std::cos(1.5 * g), 1e-12);
        EXPECT_NEAR(c * c * c * sh + s * s * s * ch, 0.25 * (3 * std::sin(1.5 * g) - std::sin(2.5 * g)), 1e-12);
        EXPECT_NEAR(c * c * c * ch - s * s * s * sh, 0.25 * (3 * std::cos(1.5 * g) + std::cos(2.5 * g)), 1e-12);
    }
}

}  // namespace
}  // namespace lmc
