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

#ifndef LMC_HAMILTONIAN_H
#define LMC_HAMILTONIAN_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lmc/graph.h"
#include "lmc/vertex_set.h"

namespace lmc {

/// One Z_S term with weight W_S.
struct PauliTerm {
    VertexSet support;
    double weight = 0;

    bool operator==(const PauliTerm &) const = default;
};

/// Diagonal operator Σ_S W_S Z_S on at most 64 qubits.
///
/// Terms are kept sorted by support bits with zero weights removed. The
/// identity coefficient W_∅ is stored separately from `terms()`, so `terms()`
/// is exactly the collection of nonempty supports with nonzero weight.
class DiagonalHamiltonian {
   public:
    DiagonalHamiltonian() = default;
    explicit DiagonalHamiltonian(std::size_t num_qubits);

    /// Accumulates every (support, weight) pair; cancelled supports are dropped.
    static DiagonalHamiltonian from_terms(std::size_t num_qubits, std::span<const PauliTerm> terms);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    double constant() const {
        return constant_;
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    /// W_S, or 0 when S is absent. W_∅ is the constant.
    double weight(VertexSet support) const;

    /// Σ_S W_S χ_S(x) for a basis state given as a bitmask (bit v = x_v).
    double evaluate(uint64_t x) const;

    bool operator==(const DiagonalHamiltonian &) const = default;

    friend class HamiltonianBuilder;

   private:
    std::size_t num_qubits_ = 0;
    double constant_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Order-independent accumulator for Hamiltonian terms.
class HamiltonianBuilder {
   public:
    explicit HamiltonianBuilder(std::size_t num_qubits);

    void add(VertexSet support, double weight);
    void add(const DiagonalHamiltonian &h);
    DiagonalHamiltonian build() const;

   private:
    std::size_t num_qubits_;
    std::map<uint64_t, double> acc_;
};

/// A real-valued function of k ≤ 16 variables given by its truth table.
///
/// `truth_table[a]` is the value on assignment a, where bit i of a is the value
/// of `support[i]`.
struct Clause {
    std::vector<std::size_t> support;
    std::vector<double> truth_table;
};

inline constexpr std::size_t kMaxClauseArity = 16;

/// Fourier (Walsh) expansion Ĉ(S) = 2^-k Σ_x C(x) χ_S(x), mapped onto the
/// clause's global vertex ids.
DiagonalHamiltonian fourier_encode_clause(const Clause &c, std::size_t num_qubits);

/// Clause on (x_v, x_1, ..., x_d): 1 iff at least ⌈d/2⌉ of the x_i differ from x_v.
/// The support is left as 0..d; callers rebind it onto graph vertices.
Clause local_satisfaction_clause(std::size_t d);

/// Σ_v (encoded local satisfaction clause at B(v)). Requires a regular graph
/// with at most 64 vertices.
DiagonalHamiltonian build_localmaxcut_hamiltonian(const Graph &g);

/// Evaluates on a bitstring given as one 0/1 entry per qubit.
double evaluate_classical(const DiagonalHamiltonian &h, std::span<const uint8_t> x);

}  // namespace lmc

#endif
