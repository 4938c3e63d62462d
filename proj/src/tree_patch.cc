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

#include <algorithm>
#include <stdexcept>

#include "lmc/closed_forms.h"

namespace lmc {

namespace {

// Any term meeting K is an edge with an endpoint in K or the ball (pair) of a
// vertex within distance 1 of K. Growing the tree to distance 2 from K
// therefore holds every such term in full.
constexpr std::size_t kRadius = 2;

struct PatchBuilder {
    std::size_t d;
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::size_t> dist;
    std::vector<std::string> labels;
    std::vector<bool> core;

    std::size_t add_vertex(std::string label, std::size_t distance, bool is_core) {
        adj.emplace_back();
        dist.push_back(distance);
        labels.push_back(std::move(label));
        core.push_back(is_core);
        return adj.size() - 1;
    }
    void connect(std::size_t a, std::size_t b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    void grow() {
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (dist[v] >= kRadius) {
                continue;
            }
            std::size_t made = 0;
            while (adj[v].size() < d) {
                ++made;
                std::string name;
                if (core[v] || d == 2) {
                    name = labels[v] + std::string(core[v] ? made : 1, '\'');
                } else {
                    name = labels[v] + "." + static_cast<char>('a' + made - 1);
                }
                std::size_t c = add_vertex(name, dist[v] + 1, false);
                connect(v, c);
            }
        }
    }

    DiagonalHamiltonian hamiltonian() const {
        const std::size_t n = adj.size();
        HamiltonianBuilder b(n);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t u : adj[v]) {
                if (u > v) {
                    b.add(VertexSet{u, v}, -0.5);
                }
            }
            if (dist[v] > 1) {
                continue;
            }
            if (d == 2) {
                b.add(VertexSet{adj[v][0], adj[v][1]}, -0.25);
            } else {
                VertexSet ball{v};
                for (std::size_t u : adj[v]) {
                    ball.insert(u);
                }
                b.add(ball, 0.25);
            }
        }
        return b.build();
    }
};

}  // namespace

std::size_t TreePatch::vertex(const std::string &label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::out_of_range("no patch vertex labelled '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

TreePatch tree_patch(std::size_t d, PatchKind kind) {
    PatchBuilder b{d, {}, {}, {}, {}};
    VertexSet k;
    if (d == 2 && kind == PatchKind::Edge) {
        auto u = b.add_vertex("u", 0, true);
        auto v = b.add_vertex("v", 0, true);
        b.connect(u, v);
        k = VertexSet{u, v};
    } else if (d == 2 && kind == PatchKind::Pair) {
        auto w = b.add_vertex("w", 1, true);
        auto w1 = b.add_vertex("w1", 0, true);
        auto w2 = b.add_vertex("w2", 0, true);
        b.connect(w, w1);
        b.connect(w, w2);
        k = VertexSet{w1, w2};
    } else if (d == 3 && kind == PatchKind::Edge) {
        auto u = b.add_vertex("u", 0, true);
        auto v = b.add_vertex("v", 0, true);
        b.connect(u, v);
        k = VertexSet{u, v};
    } else if (d == 3 && kind == PatchKind::Ball) {
        auto u = b.add_vertex("u", 0, true);
        k = VertexSet{u};
        for (int i = 1; i <= 3; ++i) {
            auto ui = b.add_vertex("u" + std::to_string(i), 0, true);
            b.connect(u, ui);
            k.insert(ui);
        }
    } else {
        throw std::invalid_argument("no tree patch for this (degree, kind) combination");
    }
    b.grow();
    if (b.adj.size() > kMaxSetVertices) {
        throw std::logic_error("tree patch exceeds 64 vertices");
    }
    return TreePatch{b.hamiltonian(), k, b.labels};
}

}  // namespace lmc
