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

#include <fstream>
#include <numeric>

#include "fixtures.h"
#include "lmc/graph.h"

namespace lmc {
namespace {

using testing::girth_by_edge_removal;

std::size_t degree_sum(const Graph &g) {
    std::size_t s = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        s += g.degree(v);
    }
    return s;
}

TEST(Graph, RejectsMalformedEdgeSets) {
    EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
    Graph g(5, {{4, 0}, {2, 0}, {1, 0}, {3, 2}});
    EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2, 4}));
    EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{0, 3}));
    for (auto [a, b] : g.edges()) {
        EXPECT_LT(a, b);
        EXPECT_TRUE(g.has_edge(a, b));
        EXPECT_TRUE(g.has_edge(b, a));
    }
    EXPECT_FALSE(g.regular_degree().has_value());
    EXPECT_THROW(g.neighbors(5), std::out_of_range);
}

TEST(Graph, Cycles) {
    Graph c3 = make_cycle(3);
    EXPECT_EQ(c3.num_edges(), 3u);
    EXPECT_EQ(girth(c3), 3u);
    Graph c4 = make_cycle(4);
    EXPECT_EQ(c4.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    Graph c7 = make_cycle(7);
    EXPECT_EQ(c7.num_edges(), 7u);
    EXPECT_EQ(girth(c7), 7u);
    EXPECT_EQ(c7.regular_degree(), 2u);
    EXPECT_THROW(make_cycle(2), GraphError);
}

TEST(Graph, Neighborhoods) {
    EXPECT_EQ(make_cycle(4).neighborhood(0), (std::vector<Vertex>{0, 1, 3}));
    EXPECT_EQ(make_named(NamedGraph::K4).neighborhood(2), (std::vector<Vertex>{2, 0, 1, 3}));
    EXPECT_EQ(make_named(NamedGraph::Petersen).neighborhood(0), (std::vector<Vertex>{0, 1, 4, 5}));
    EXPECT_THROW(make_cycle(4).neighborhood(4), std::out_of_range);
}

struct NamedCase {
    NamedGraph name;
    std::size_t n, m, girth;
};

TEST(Graph, NamedCubicGraphs) {
    const NamedCase cases[] = {{NamedGraph::K4, 4, 6, 3},       {NamedGraph::Cube, 8, 12, 4},
                               {NamedGraph::K33, 6, 9, 4},      {NamedGraph::Petersen, 10, 15, 5},
                               {NamedGraph::Heawood, 14, 21, 6}, {NamedGraph::McGee, 24, 36, 7}};
    for (const auto &c : cases) {
        Graph g = make_named(c.name);
        SCOPED_TRACE(std::string(named_graph_name(c.name)));
        EXPECT_EQ(g.num_vertices(), c.n);
        EXPECT_EQ(g.num_edges(), c.m);
        EXPECT_EQ(g.regular_degree(), 3u);
        EXPECT_EQ(girth_by_edge_removal(g), c.girth);
        EXPECT_EQ(girth(g), c.girth);
        EXPECT_EQ(degree_sum(g), 2 * g.num_edges());
        EXPECT_EQ(parse_named_graph(named_graph_name(c.name)), c.name);
    }
    EXPECT_EQ(parse_named_graph("PETERSEN"), NamedGraph::Petersen);
    EXPECT_THROW(parse_named_graph("dodecahedron"), GraphError);
}

TEST(Graph, GirthOfForestIsInfinite) {
    Graph path = load_edge_list("0 1\n1 2\n2 3\n");
    EXPECT_EQ(girth(path), kInfiniteGirth);
    EXPECT_FALSE(has_cycle_shorter_than(make_cycle(6), 6));
    EXPECT_TRUE(has_cycle_shorter_than(make_cycle(6), 7));
}

TEST(Graph, GirthMatchesEdgeRemovalOracleOnRandomGraphs) {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = make_random_regular(30, 3, 3, seed);
        EXPECT_EQ(girth(g), girth_by_edge_removal(g)) << "seed " << seed;
    }
}

TEST(Graph, RandomRegularMeetsGirthAndRegularity) {
    Graph g = make_random_regular(100, 3, 5, 1);
    EXPECT_EQ(g.num_vertices(), 100u);
    EXPECT_EQ(g.regular_degree(), 3u);
    EXPECT_GE(girth_by_edge_removal(g), 5u);
    EXPECT_EQ(degree_sum(g), 2 * g.num_edges());

    Graph g4 = make_random_regular(40, 4, 4, 3);
    EXPECT_EQ(g4.regular_degree(), 4u);
    EXPECT_GE(girth_by_edge_removal(g4), 4u);
}

TEST(Graph, RandomRegularIsDeterministic) {
    EXPECT_EQ(make_random_regular(60, 3, 5, 42).edges(), make_random_regular(60, 3, 5, 42).edges());
    EXPECT_NE(make_random_regular(60, 3, 5, 42).edges(), make_random_regular(60, 3, 5, 43).edges());
}

TEST(Graph, RandomRegularReportsInfeasibleParameters) {
    EXPECT_THROW(make_random_regular(5, 3, 3, 1), GraphError);
    EXPECT_THROW(make_random_regular(10, 1, 3, 1), GraphError);
    // K4 is the only cubic graph on 4 vertices and has girth 3.
    EXPECT_THROW(make_random_regular(4, 3, 4, 1, 500), GraphError);
}

TEST(Graph, EdgeListRoundTrip) {
    Graph tri = load_edge_list("0 1\n1 2\n2 0");
    EXPECT_EQ(tri, make_cycle(3));
    EXPECT_EQ(save_edge_list(make_cycle(3)), "0 1\n0 2\n1 2\n");
    for (const auto &f : testing::small_fixture_graphs()) {
        EXPECT_EQ(load_edge_list(save_edge_list(f.graph), f.graph.num_vertices()), f.graph) << f.name;
    }
    Graph r = make_random_regular(50, 3, 4, 9);
    EXPECT_EQ(load_edge_list(save_edge_list(r)), r);
    EXPECT_EQ(load_edge_list("# comment\n\n0 1  \n").num_edges(), 1u);
}

TEST(Graph, EdgeListErrors) {
    EXPECT_THROW(load_edge_list("0 0"), GraphError);
    EXPECT_THROW(load_edge_list("0 1\n1 0"), GraphError);
    EXPECT_THROW(load_edge_list("0 x"), GraphError);
    EXPECT_THROW(load_edge_list("0"), GraphError);
    EXPECT_THROW(load_edge_list("0 1 2"), GraphError);
    EXPECT_THROW(load_edge_list("-1 2"), GraphError);
}

TEST(Graph, SpecLanguage) {
    EXPECT_EQ(graph_from_spec("cycle:9"), make_cycle(9));
    EXPECT_EQ(graph_from_spec("named:heawood"), make_named(NamedGraph::Heawood));
    EXPECT_EQ(graph_from_spec("random:20,3,4,5"), make_random_regular(20, 3, 4, 5));
    const std::string path = ::testing::TempDir() + "lmc_spec_graph.txt";
    {
        std::ofstream out(path);
        out << save_edge_list(make_named(NamedGraph::Cube));
    }
    EXPECT_EQ(graph_from_spec("file:" + path), make_named(NamedGraph::Cube));
    EXPECT_THROW(graph_from_spec("cycle"), GraphError);
    EXPECT_THROW(graph_from_spec("cycle:x"), GraphError);
    EXPECT_THROW(graph_from_spec("random:10,3"), GraphError);
    EXPECT_THROW(graph_from_spec("torus:3"), GraphError);
    EXPECT_THROW(graph_from_spec("file:/nonexistent/lmc"), GraphError);
}

}  // namespace
}  // namespace lmc
