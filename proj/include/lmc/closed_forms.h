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

#ifndef LMC_CLOSED_FORMS_H
#define LMC_CLOSED_FORMS_H

#include <string>
#include <vector>

#include "lmc/hamiltonian.h"
#include "lmc/qaoa_engine.h"

namespace lmc {

// Hand-derived trigonometric polynomials for LocalMaxCut on degree-2 graphs of
// girth >= 7 and cubic graphs of girth >= 7. Below that girth they do not apply;
// use the engine instead.

/// ⟨Z_uv⟩ for an edge, d = 2.
double zk_edge_d2(QaoaAngles a);
/// ⟨Z_{w1 w2}⟩ for the two neighbors of a vertex, d = 2.
double zk_pair_d2(QaoaAngles a);
/// ⟨Z_uv⟩ for an edge, d = 3.
double zk_edge_d3(QaoaAngles a);
/// ⟨Z_{B(u)}⟩ for a closed neighborhood, d = 3.
double zk_ball_d3(QaoaAngles a);

/// F(γ,β) on an n-vertex degree-2 graph.
double closed_form_f2(double n, QaoaAngles a);
/// F(γ,β) on an n-vertex cubic graph.
double closed_form_f3(double n, QaoaAngles a);

enum class PatchKind { Edge, Pair, Ball };

/// Truncated infinite d-regular tree around K carrying every LocalMaxCut term
/// that can meet K.
struct TreePatch {
    DiagonalHamiltonian hamiltonian;
    VertexSet k;
    /// Vertex names ("u", "u'", "u'.a", ...), indexed by vertex id.
    std::vector<std::string> labels;

    std::size_t vertex(const std::string &label) const;
};

/// Valid combinations: (2, Edge), (2, Pair), (3, Edge), (3, Ball).
TreePatch tree_patch(std::size_t d, PatchKind kind);

}  // namespace lmc

#endif
