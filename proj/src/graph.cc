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

#include "lmc/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace lmc {

Graph::Graph(std::size_t n, const std::vector<Edge> &edges) : adjacency_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw GraphError("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range for n=" +
                             std::to_string(n));
        }
        if (a == b) {
            throw GraphError("self-loop at vertex " + std::to_string(a));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");
    }
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto &adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
}

const std::vector<Vertex> &Graph::neighbors(Vertex v) const {
    if (v >= adjacency_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto &adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (adjacency_.empty()) {
        return std::nullopt;
    }
    std::size_t d = adjacency_[0].size();
    for (const auto &adj : adjacency_) {
        if (adj.size() != d) {
            return std::nullopt;
        }
    }
    return d;
}

std::vector<Vertex> Graph::neighborhood(Vertex v) const {
    std::vector<Vertex> out{v};
    const auto &adj = neighbors(v);
    out.insert(out.end(), adj.begin(), adj.end());
    return out;
}

Graph make_cycle(std::size_t n) {
    if (n < 3) {
        throw GraphError("cycle needs at least 3 vertices, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return Graph(n, edges);
}

namespace {

// Labelings:
//   K4        complete graph on 0..3.
//   CUBE      3-cube; vertex ids are 3-bit words, edges join words at Hamming distance 1.
//   K33       parts {0,1,2} and {3,4,5}.
//   PETERSEN  outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
//   HEAWOOD   Hamiltonian cycle 0..13 with chords from LCF [5,-5]^7.
//   MCGEE     Hamiltonian cycle 0..23 with chords from LCF [12,7,-7]^8.
const std::vector<Edge> kK4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
const std::vector<Edge> kCube = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                                 {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
const std::vector<Edge> kK33 = {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
const std::vector<Edge> kPetersen = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                     {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
const std::vector<Edge> kHeawood = {{0, 1},  {0, 5},   {0, 13},  {1, 2},  {1, 10},  {2, 3},   {2, 7},
                                    {3, 4},  {3, 12},  {4, 5},   {4, 9},  {5, 6},   {6, 7},   {6, 11},
                                    {7, 8},  {8, 9},   {8, 13},  {9, 10}, {10, 11}, {11, 12}, {12, 13}};
const std::vector<Edge> kMcGee = {{0, 1},   {0, 12},  {0, 23},  {1, 2},   {1, 8},   {2, 3},   {2, 19},  {3, 4},
                                  {3, 15},  {4, 5},   {4, 11},  {5, 6},   {5, 22},  {6, 7},   {6, 18},  {7, 8},
                                  {7, 14},  {8, 9},   {9, 10},  {9, 21},  {10, 11}, {10, 17}, {11, 12}, {12, 13},
                                  {13, 14}, {13, 20}, {14, 15}, {15, 16}, {16, 17}, {16, 23}, {17, 18}, {18, 19},
                                  {19, 20}, {20, 21}, {21, 22}, {22, 23}};

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Fisher-Yates with explicit rejection sampling so results don't depend on the
// standard library's distribution implementations.
uint64_t bounded(std::mt19937_64 &rng, uint64_t bound) {
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

std::size_t girth_bounded(const Graph &g, std::size_t bound) {
    const std::size_t n = g.num_vertices();
    std::size_t best = bound;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n), queue;
    std::vector<Vertex> touched;
    constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
    std::fill(dist.begin(), dist.end(), kUnseen);
    for (Vertex root = 0; root < n; ++root) {
        queue.clear();
        touched.clear();
        queue.push_back(root);
        touched.push_back(root);
        dist[root] = 0;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (2 * dist[x] + 1 >= best) {
                break;
            }
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                    touched.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        for (Vertex t : touched) {
            dist[t] = kUnseen;
        }
    }
    return best;
}

}  // namespace

NamedGraph parse_named_graph(std::string_view name) {
    auto s = lowercase(name);
    if (s == "k4") return NamedGraph::K4;
    if (s == "cube") return NamedGraph::Cube;
    if (s == "k33") return NamedGraph::K33;
    if (s == "petersen") return NamedGraph::Petersen;
    if (s == "heawood") return NamedGraph::Heawood;
    if (s == "mcgee") return NamedGraph::McGee;
    throw GraphError("unknown named graph '" + std::string(name) + "'");
}

std::string_view named_graph_name(NamedGraph g) {
    switch (g) {
        case NamedGraph::K4: return "K4";
        case NamedGraph::Cube: return "CUBE";
        case NamedGraph::K33: return "K33";
        case NamedGraph::Petersen: return "PETERSEN";
        case NamedGraph::Heawood: return "HEAWOOD";
        case NamedGraph::McGee: return "MCGEE";
    }
    return "?";
}

Graph make_named(NamedGraph name) {
    switch (name) {
        case NamedGraph::K4: return Graph(4, kK4);
        case NamedGraph::Cube: return Graph(8, kCube);
        case NamedGraph::K33: return Graph(6, kK33);
        case NamedGraph::Petersen: return Graph(10, kPetersen);
        case NamedGraph::Heawood: return Graph(14, kHeawood);
        case NamedGraph::McGee: return Graph(24, kMcGee);
    }
    throw GraphError("unknown named graph");
}

Graph make_random_regular(std::size_t n, std::size_t d, std::size_t min_girth, uint64_t seed,
                          std::size_t max_attempts) {
    if (d < 2) {
        throw GraphError("random regular graph needs d >= 2");
    }
    if ((n * d) % 2 != 0) {
        throw GraphError("n*d must be even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }
    if (n <= d) {
        throw GraphError("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
    }
    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs(n * d);
    std::vector<Edge> edges(n * d / 2);
    std::set<Edge> seen;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) {
            stubs[i] = static_cast<Vertex>(i / d);
        }
        for (std::size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[bounded(rng, i)]);
        }
        bool simple = true;
        seen.clear();
        for (std::size_t k = 0; k < edges.size() && simple; ++k) {
            Vertex a = stubs[2 * k], b = stubs[2 * k + 1];
            Edge e{std::min(a, b), std::max(a, b)};
            simple = a != b && seen.insert(e).second;
            edges[k] = e;
        }
        if (!simple) {
            continue;
        }
        Graph g(n, edges);
        if (min_girth > 3 && has_cycle_shorter_than(g, min_girth)) {
            continue;
        }
        return g;
    }
    throw GraphError("no " + std::to_string(d) + "-regular graph with girth >= " + std::to_string(min_girth) + " on " +
                     std::to_string(n) + " vertices after " + std::to_string(max_attempts) + " attempts");
}

std::size_t girth(const Graph &g) {
    return girth_bounded(g, kInfiniteGirth);
}

bool has_cycle_shorter_than(const Graph &g, std::size_t bound) {
    return girth_bounded(g, bound) < bound;
}

Graph load_edge_list(std::string_view text, std::optional<std::size_t> n) {
    std::vector<Edge> edges;
    std::size_t max_id = 0;
    bool any = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) {
            continue;
        }
        auto parse = [&](const std::string &tok) {
            uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value > std::numeric_limits<Vertex>::max()) {
                throw GraphError("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
            }
            return static_cast<Vertex>(value);
        };
        if (!(fields >> b) || (fields >> extra)) {
            throw GraphError("line " + std::to_string(line_no) + ": expected two vertex ids");
        }
        Vertex u = parse(a), v = parse(b);
        max_id = std::max<std::size_t>(max_id, std::max(u, v));
        any = true;
        edges.emplace_back(u, v);
    }
    std::size_t count = n.value_or(any ? max_id + 1 : 0);
    return Graph(count, edges);
}

std::string save_edge_list(const Graph &g) {
    std::string out;
    for (auto [a, b] : g.edges()) {
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
}

Graph graph_from_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw GraphError("graph spec '" + std::string(spec) + "' lacks a kind prefix");
    }
    auto kind = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    auto to_int = [&](std::string_view tok) {
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw GraphError("graph spec '" + std::string(spec) + "': bad integer '" + std::string(tok) + "'");
        }
        return value;
    };
    if (kind == "cycle") {
        return make_cycle(to_int(arg));
    }
    if (kind == "named") {
        return make_named(parse_named_graph(arg));
    }
    if (kind == "random") {
        std::vector<uint64_t> parts;
        std::size_t start = 0;
        while (true) {
            auto comma = arg.find(',', start);
            parts.push_back(to_int(arg.substr(start, comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (parts.size() != 4) {
            throw GraphError("random spec is random:<n>,<d>,<girth>,<seed>");
        }
        return make_random_regular(parts[0], parts[1], parts[2], parts[3]);
    }
    if (kind == "file") {
        std::ifstream f{std::string(arg)};
        if (!f) {
            throw GraphError("cannot open edge list '" + std::string(arg) + "'");
        }
        std::stringstream buf;
        buf << f.rdbuf();
        return load_edge_list(buf.str());
    }
    throw GraphError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace lmc
