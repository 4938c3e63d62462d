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

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.h"
#include "lmc/classical.h"
#include "lmc/hamiltonian.h"

namespace lmc {
namespace {

Clause bound_clause(std::size_t d) {
    return local_satisfaction_clause(d);
}

TEST(Hamiltonian, EncodesDegree2Clause) {
    auto h = fourier_encode_clause(bound_clause(2), 3);
    EXPECT_EQ(h.constant(), 0.75);
    ASSERT_EQ(h.terms().size(), 3u);
    EXPECT_EQ(h.weight(VertexSet{0, 1}), -0.25);
    EXPECT_EQ(h.weight(VertexSet{0, 2}), -0.25);
    EXPECT_EQ(h.weight(VertexSet{1, 2}), -0.25);
}

TEST(Hamiltonian, EncodesDegree3Clause) {
    auto h = fourier_encode_clause(bound_clause(3), 4);
    EXPECT_EQ(h.constant(), 0.5);
    ASSERT_EQ(h.terms().size(), 4u);
    EXPECT_EQ(h.weight(VertexSet{0, 1}), -0.25);
    EXPECT_EQ(h.weight(VertexSet{0, 2}), -0.25);
    EXPECT_EQ(h.weight(VertexSet{0, 3}), -0.25);
    EXPECT_EQ(h.weight(VertexSet{0, 1, 2, 3}), 0.25);
}

TEST(Hamiltonian, ConstantClause) {
    auto h = fourier_encode_clause(Clause{{0, 1}, {1, 1, 1, 1}}, 2);
    EXPECT_EQ(h.constant(), 1.0);
    EXPECT_TRUE(h.terms().empty());
}

TEST(Hamiltonian, EncoderRoundTripOnRandomClauses) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> val(-2, 2);
    for (std::size_t k = 1; k <= 8; ++k) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<std::size_t> support(k);
            std::iota(support.begin(), support.end(), 0);
            std::shuffle(support.begin(), support.end(), rng);
            for (auto &s : support) {
                s += 3;  // place the clause away from vertex 0
            }
            Clause c{support, std::vector<double>(std::size_t{1} << k)};
            for (auto &t : c.truth_table) {
                t = rep == 0 ? double(rng() & 1) : val(rng);
            }
            auto h = fourier_encode_clause(c, k + 3);
            for (std::size_t a = 0; a < c.truth_table.size(); ++a) {
                uint64_t x = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    if ((a >> i) & 1) {
                        x |= uint64_t{1} << support[i];
                    }
                }
                EXPECT_NEAR(h.evaluate(x), c.truth_table[a], 1e-12);
            }
        }
    }
}

TEST(Hamiltonian, EncoderRejectsBadClauses) {
    Clause wide{std::vector<std::size_t>(17), std::vector<double>(std::size_t{1} << 17)};
    std::iota(wide.support.begin(), wide.support.end(), 0);
    EXPECT_THROW(fourier_encode_clause(wide, 20), std::invalid_argument);
    EXPECT_THROW(fourier_encode_clause(Clause{{0, 1}, {1, 0, 0}}, 2), std::invalid_argument);
    EXPECT_THROW(fourier_encode_clause(Clause{{0, 0}, {1, 0, 0, 1}}, 2), std::invalid_argument);
}

TEST(Hamiltonian, LocalSatisfactionClauseValues) {
    auto c2 = local_satisfaction_clause(2);
    // assignment index bit i = value of support[i]; support[0] is the center.
    EXPECT_EQ(c2.truth_table[0b110], 1.0);  // x = (0,1,1)
    EXPECT_EQ(c2.truth_table[0b000], 0.0);
    EXPECT_EQ(c2.truth_table[0b010], 1.0);  // one of two edges cut
    auto c3 = local_satisfaction_clause(3);
    EXPECT_EQ(c3.truth_table[0b1100], 1.0);  // x = (0,0,1,1): 2 of 3 cut
    EXPECT_EQ(c3.truth_table[0b0100], 0.0);
    EXPECT_EQ(c3.support.size(), 4u);
}

TEST(Hamiltonian, TriangleGolden) {
    auto h = build_localmaxcut_hamiltonian(make_cycle(3));
    EXPECT_EQ(h.constant(), 9.0 / 4);
    ASSERT_EQ(h.terms().size(), 3u);
    for (const auto &t : h.terms()) {
        EXPECT_EQ(t.support.size(), 2u);
        EXPECT_EQ(t.weight, -0.75);
    }
}

TEST(Hamiltonian, Cycle7Golden) {
    Graph g = make_cycle(7);
    auto h = build_localmaxcut_hamiltonian(g);
    EXPECT_EQ(h.constant(), 21.0 / 4);
    ASSERT_EQ(h.terms().size(), 14u);
    for (std::size_t v = 0; v < 7; ++v) {
        EXPECT_EQ(h.weight(VertexSet{v, (v + 1) % 7}), -0.5);
        EXPECT_EQ(h.weight(VertexSet{v, (v + 2) % 7}), -0.25);
    }
}

TEST(Hamiltonian, K4Golden) {
    Graph k4 = make_named(NamedGraph::K4);
    auto h = build_localmaxcut_hamiltonian(k4);
    EXPECT_EQ(h.constant(), 2.0);
    ASSERT_EQ(h.terms().size(), 7u);
    EXPECT_EQ(h.weight(VertexSet{0, 1, 2, 3}), 1.0);
    for (auto [a, b] : k4.edges()) {
        EXPECT_EQ(h.weight(VertexSet{a, b}), -0.5);
    }
}

TEST(Hamiltonian, GirthFiveCycleTermCount) {
    for (std::size_t n = 5; n <= 12; ++n) {
        auto h = build_localmaxcut_hamiltonian(make_cycle(n));
        EXPECT_EQ(h.terms().size() + 1, 1 + 2 * n) << n;
        EXPECT_NE(h.constant(), 0.0);
    }
}

TEST(Hamiltonian, RejectsIrregularGraph) {
    EXPECT_THROW(build_localmaxcut_hamiltonian(load_edge_list("0 1\n1 2\n")), std::invalid_argument);
}

TEST(Hamiltonian, CountsSatisfiedVerticesOnEveryCut) {
    for (const auto &f : testing::small_fixture_graphs()) {
        const Graph &g = f.graph;
        auto h = build_localmaxcut_hamiltonian(g);
        const std::size_t n = g.num_vertices();
        std::vector<uint8_t> bits(n);
        Cut cut(n);
        for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
            for (std::size_t v = 0; v < n; ++v) {
                bits[v] = (x >> v) & 1;
                cut[v] = bits[v] ? 1 : -1;
            }
            ASSERT_EQ(evaluate_classical(h, bits), double(satisfied_count(g, cut))) << f.name << " x=" << x;
        }
    }
}

TEST(Hamiltonian, AccumulationIsOrderIndependent) {
    Graph g = make_named(NamedGraph::Petersen);
    auto reference = build_localmaxcut_hamiltonian(g);
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        std::shuffle(order.begin(), order.end(), rng);
        HamiltonianBuilder b(g.num_vertices());
        for (Vertex v : order) {
            Clause c = local_satisfaction_clause(3);
            auto ball = g.neighborhood(v);
            c.support.assign(ball.begin(), ball.end());
            b.add(fourier_encode_clause(c, g.num_vertices()));
        }
        EXPECT_EQ(b.build(), reference);
    }
}

TEST(Hamiltonian, DropsCancelledTerms) {
    HamiltonianBuilder b(4);
    b.add(VertexSet{0, 1}, 0.5);
    b.add(VertexSet{0, 1}, -0.5);
    b.add(VertexSet{2}, 1.0);
    auto h = b.build();
    ASSERT_EQ(h.terms().size(), 1u);
    EXPECT_EQ(h.weight(VertexSet{0, 1}), 0.0);
    EXPECT_THROW(b.add(VertexSet{4}, 1.0), std::out_of_range);
}

TEST(Hamiltonian, EvaluateClassicalEdgeCases) {
    auto h = build_localmaxcut_hamiltonian(make_cycle(5));
    EXPECT_EQ(evaluate_classical(h, std::vector<uint8_t>(5, 0)), 0.0);
    EXPECT_THROW(evaluate_classical(h, std::vector<uint8_t>(4, 0)), std::invalid_argument);
    auto c = DiagonalHamiltonian::from_terms(3, std::vector<PauliTerm>{{VertexSet{}, 2.5}});
    for (uint64_t x = 0; x < 8; ++x) {
        EXPECT_EQ(c.evaluate(x), 2.5);
    }
}

}  // namespace
}  // namespace lmc
