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

#ifndef LMC_GRAPH_H
#define LMC_GRAPH_H

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lmc {

using Vertex = uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when a graph cannot be constructed (bad input, infeasible generator parameters).
struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored as (lo, hi) pairs in sorted
/// order and every adjacency list is ascending, so `neighborhood(v)` is
/// reproducible across runs and platforms.
class Graph {
   public:
    Graph() = default;

    /// Validates and builds. Rejects self-loops, duplicate edges and
    /// out-of-range endpoints.
    Graph(std::size_t n, const std::vector<Edge> &edges);

    std::size_t num_vertices() const {
        return adjacency_.size();
    }
    std::size_t num_edges() const {
        return edges_.size();
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Vertex> &neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const {
        return neighbors(v).size();
    }
    bool has_edge(Vertex u, Vertex v) const;

    /// Common degree if the graph is regular (and non-empty).
    std::optional<std::size_t> regular_degree() const;

    /// (v, neighbors ascending).
    std::vector<Vertex> neighborhood(Vertex v) const;

    bool operator==(const Graph &other) const {
        return edges_ == other.edges_ && adjacency_.size() == other.adjacency_.size();
    }

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Cubic fixtures with literal edge lists (labelings documented in graph.cc).
enum class NamedGraph { K4, Cube, K33, Petersen, Heawood, McGee };

NamedGraph parse_named_graph(std::string_view name);
std::string_view named_graph_name(NamedGraph g);

Graph make_cycle(std::size_t n);
Graph make_named(NamedGraph name);

/// Pairing-model random d-regular graph with girth at least `min_girth`.
///
/// Each attempt shuffles n*d half-edge stubs and pairs them; the attempt is
/// rejected on self-loops, parallel edges or a cycle shorter than `min_girth`.
/// Throws GraphError on odd n*d or after `max_attempts` rejections.
Graph make_random_regular(std::size_t n, std::size_t d, std::size_t min_girth, uint64_t seed,
                          std::size_t max_attempts = 20000);

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

/// Length of the shortest cycle, or kInfiniteGirth for forests.
std::size_t girth(const Graph &g);

/// True when g contains a cycle of length < bound. Bounded-depth BFS.
bool has_cycle_shorter_than(const Graph &g, std::size_t bound);

/// "u v" per line, 0-based. Blank lines and '#' comments are skipped; the vertex
/// count is one more than the largest id unless `n` is given.
Graph load_edge_list(std::string_view text, std::optional<std::size_t> n = std::nullopt);
/// Canonical sorted edge list, one "u v" per line with u < v.
std::string save_edge_list(const Graph &g);

/// Parses the CLI graph spec mini-language:
/// `cycle:<n>`, `named:<name>`, `random:<n>,<d>,<girth>,<seed>`, `file:<path>`.
Graph graph_from_spec(std::string_view spec);

}  // namespace lmc

#endif
