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


// Shared test fixtures and independent reference computations.

#ifndef LMC_TESTS_FIXTURES_H
#define LMC_TESTS_FIXTURES_H

#include <deque>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lmc/graph.h"

namespace lmc::testing {

struct NamedFixture {
    std::string name;
    Graph graph;
};

/// C_3..C_9 plus the small cubic graphs, all with at most 16 vertices.
inline std::vector<NamedFixture> small_fixture_graphs() {
    std::vector<NamedFixture> out;
    for (std::size_t n = 3; n <= 9; ++n) {
        out.push_back({"C" + std::to_string(n), make_cycle(n)});
    }
    for (auto g : {NamedGraph::K4, NamedGraph::Cube, NamedGraph::K33, NamedGraph::Petersen, NamedGraph::Heawood}) {
        out.push_back({std::string(named_graph_name(g)), make_named(g)});
    }
    return out;
}

/// Girth by deleting each edge in turn and measuring the remaining distance
/// between its endpoints.
inline std::size_t girth_by_edge_removal(const Graph &g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto [a, b] : g.edges()) {
        std::vector<std::size_t> dist(g.num_vertices(), std::numeric_limits<std::size_t>::max());
        std::deque<Vertex> queue{a};
        dist[a] = 0;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if ((x == a && y == b) || (x == b && y == a)) {
                    continue;
                }
                if (dist[y] == std::numeric_limits<std::size_t>::max()) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[b] != std::numeric_limits<std::size_t>::max()) {
            best = std::min(best, dist[b] + 1);
        }
    }
    return best;
}

}  // namespace lmc::testing

#endif
