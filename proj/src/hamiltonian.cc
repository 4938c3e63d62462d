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

#include "lmc/hamiltonian.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace lmc {

DiagonalHamiltonian::DiagonalHamiltonian(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxSetVertices) {
        throw std::invalid_argument("diagonal Hamiltonians support at most 64 qubits, got " +
                                    std::to_string(num_qubits));
    }
}

DiagonalHamiltonian DiagonalHamiltonian::from_terms(std::size_t num_qubits, std::span<const PauliTerm> terms) {
    HamiltonianBuilder b(num_qubits);
    for (const auto &t : terms) {
        b.add(t.support, t.weight);
    }
    return b.build();
}

double DiagonalHamiltonian::weight(VertexSet support) const {
    if (support.empty()) {
        return constant_;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), support,
                               [](const PauliTerm &t, VertexSet s) { return t.support < s; });
    return it != terms_.end() && it->support == support ? it->weight : 0.0;
}

double DiagonalHamiltonian::evaluate(uint64_t x) const {
    double total = constant_;
    for (const auto &t : terms_) {
        total += (std::popcount(x & t.support.bits()) & 1) ? -t.weight : t.weight;
    }
    return total;
}

HamiltonianBuilder::HamiltonianBuilder(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxSetVertices) {
        throw std::invalid_argument("diagonal Hamiltonians support at most 64 qubits, got " +
                                    std::to_string(num_qubits));
    }
}

void HamiltonianBuilder::add(VertexSet support, double weight) {
    if (!support.is_subset_of(VertexSet::first_n(num_qubits_))) {
        throw std::out_of_range("term support " + support.str() + " exceeds " + std::to_string(num_qubits_) +
                                " qubits");
    }
    acc_[support.bits()] += weight;
}

void HamiltonianBuilder::add(const DiagonalHamiltonian &h) {
    add(VertexSet(), h.constant());
    for (const auto &t : h.terms()) {
        add(t.support, t.weight);
    }
}

DiagonalHamiltonian HamiltonianBuilder::build() const {
    DiagonalHamiltonian h(num_qubits_);
    for (auto [bits, w] : acc_) {
        if (w == 0.0) {
            continue;
        }
        if (bits == 0) {
            h.constant_ = w;
        } else {
            h.terms_.push_back({VertexSet(bits), w});
        }
    }
    return h;
}

DiagonalHamiltonian fourier_encode_clause(const Clause &c, std::size_t num_qubits) {
    const std::size_t k = c.support.size();
    if (k > kMaxClauseArity) {
        throw std::invalid_argument("clause arity " + std::to_string(k) + " exceeds " +
                                    std::to_string(kMaxClauseArity));
    }
    const std::size_t size = std::size_t{1} << k;
    if (c.truth_table.size() != size) {
        throw std::invalid_argument("truth table has " + std::to_string(c.truth_table.size()) +
                                    " entries, expected " + std::to_string(size));
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (c.support[i] == c.support[j]) {
                throw std::invalid_argument("clause support repeats vertex " + std::to_string(c.support[i]));
            }
        }
    }

    // In-place fast Walsh-Hadamard transform: coeff[S] = Σ_x C(x) (-1)^{|x∧S|}.
    std::vector<double> coeff(c.truth_table);
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            for (std::size_t j = block; j < block + half; ++j) {
                double a = coeff[j], b = coeff[j + half];
                coeff[j] = a + b;
                coeff[j + half] = a - b;
            }
        }
    }

    HamiltonianBuilder b(num_qubits);
    const double scale = 1.0 / static_cast<double>(size);
    for (std::size_t s = 0; s < size; ++s) {
        VertexSet support;
        for (std::size_t i = 0; i < k; ++i) {
            if ((s >> i) & 1) {
                support.insert(c.support[i]);
            }
        }
        b.add(support, coeff[s] * scale);
    }
    return b.build();
}

Clause local_satisfaction_clause(std::size_t d) {
    if (d < 1 || d + 1 > kMaxClauseArity) {
        throw std::invalid_argument("local satisfaction clause needs 1 <= d < 16");
    }
    Clause c;
    c.support.resize(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        c.support[i] = i;
    }
    const std::size_t need = (d + 1) / 2;
    c.truth_table.resize(std::size_t{1} << (d + 1));
    for (std::size_t a = 0; a < c.truth_table.size(); ++a) {
        std::size_t center = a & 1;
        std::size_t cut = 0;
        for (std::size_t i = 1; i <= d; ++i) {
            cut += ((a >> i) & 1) != center;
        }
        c.truth_table[a] = cut >= need ? 1.0 : 0.0;
    }
    return c;
}

DiagonalHamiltonian build_localmaxcut_hamiltonian(const Graph &g) {
    auto d = g.regular_degree();
    if (!d) {
        throw std::invalid_argument("LocalMaxCut Hamiltonian requires a regular graph");
    }
    const std::size_t n = g.num_vertices();
    auto clause = local_satisfaction_clause(*d);
    HamiltonianBuilder b(n);
    for (Vertex v = 0; v < n; ++v) {
        auto ball = g.neighborhood(v);
        clause.support.assign(ball.begin(), ball.end());
        b.add(fourier_encode_clause(clause, n));
    }
    return b.build();
}

double evaluate_classical(const DiagonalHamiltonian &h, std::span<const uint8_t> x) {
    if (x.size() != h.num_qubits()) {
        throw std::invalid_argument("bitstring length " + std::to_string(x.size()) + " != " +
                                    std::to_string(h.num_qubits()) + " qubits");
    }
    uint64_t bits = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 1) {
            throw std::invalid_argument("bitstring entries must be 0 or 1");
        }
        bits |= static_cast<uint64_t>(x[i]) << i;
    }
    return h.evaluate(bits);
}

}  // namespace lmc
