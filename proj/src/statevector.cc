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


#include "lmc/statevector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lmc {

namespace {

using cplx = std::complex<double>;

constexpr std::size_t kPhaseChunk = 4096;

void check_size(std::size_t n) {
    if (n > kMaxStateQubits) {
        throw std::length_error("statevector of " + std::to_string(n) + " qubits exceeds the " +
                                std::to_string(kMaxStateQubits) + "-qubit cap");
    }
}

void check_match(std::size_t expected, const State &state) {
    if (state.num_qubits != expected || state.amps.size() != (std::size_t{1} << expected)) {
        throw std::invalid_argument("dimension mismatch: operator acts on " + std::to_string(expected) +
                                    " qubits, state has " + std::to_string(state.num_qubits));
    }
}

}  // namespace

double State::norm() const {
    return std::sqrt(kernels::active_kernels().norm_squared(amps));
}

State uniform_state(std::size_t n) {
    check_size(n);
    const std::size_t dim = std::size_t{1} << n;
    return State{n, std::vector<cplx>(dim, cplx(1.0 / std::sqrt(double(dim)), 0))};
}

State basis_state(std::size_t n, uint64_t x) {
    check_size(n);
    const std::size_t dim = std::size_t{1} << n;
    if (x >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    State s{n, std::vector<cplx>(dim)};
    s.amps[x] = 1;
    return s;
}

std::vector<double> basis_values(const DiagonalHamiltonian &h, const kernels::KernelTable &k) {
    check_size(h.num_qubits());
    std::vector<double> values(std::size_t{1} << h.num_qubits(), h.constant());
    for (const auto &t : h.terms()) {
        k.accumulate_term(values, t.support.bits(), t.weight);
    }
    return values;
}

State apply_phase(std::span<const double> values, double gamma, State state, const kernels::KernelTable &k) {
    if (values.size() != state.amps.size()) {
        throw std::invalid_argument("dimension mismatch between diagonal and state");
    }
    std::vector<cplx> factors(std::min(kPhaseChunk, values.size()));
    for (std::size_t start = 0; start < values.size(); start += factors.size()) {
        for (std::size_t j = 0; j < factors.size(); ++j) {
            factors[j] = std::polar(1.0, -gamma * values[start + j]);
        }
        k.complex_multiply(std::span<cplx>(state.amps).subspan(start, factors.size()), factors);
    }
    return state;
}

State apply_phase(const DiagonalHamiltonian &h, double gamma, State state, const kernels::KernelTable &k) {
    check_match(h.num_qubits(), state);
    return apply_phase(basis_values(h, k), gamma, std::move(state), k);
}

State apply_mixer(double beta, State state, const kernels::KernelTable &k) {
    check_match(state.num_qubits, state);
    const double c = std::cos(beta), s = std::sin(beta);
    for (std::size_t q = 0; q < state.num_qubits; ++q) {
        k.mixer_qubit(state.amps, q, c, s);
    }
    return state;
}

double expectation_sv(const DiagonalHamiltonian &h, const State &state, const kernels::KernelTable &k) {
    check_match(h.num_qubits(), state);
    return k.weighted_norm(state.amps, basis_values(h, k));
}

double expectation_zk_sv(const State &state, VertexSet support, const kernels::KernelTable &k) {
    if (state.num_qubits < 64 && (support.bits() >> state.num_qubits) != 0) {
        throw std::invalid_argument("support " + support.str() + " exceeds the state's qubits");
    }
    std::vector<double> values(state.amps.size(), 0.0);
    k.accumulate_term(values, support.bits(), 1.0);
    return k.weighted_norm(state.amps, values);
}

State qaoa_state(const DiagonalHamiltonian &h, QaoaAngles angles, const kernels::KernelTable &k) {
    return apply_mixer(angles.beta, apply_phase(h, angles.gamma, uniform_state(h.num_qubits()), k), k);
}

double qaoa_expectation_sv(const DiagonalHamiltonian &h, QaoaAngles angles, const kernels::KernelTable &k) {
    check_size(h.num_qubits());
    std::vector<double> values = basis_values(h, k);
    State s = apply_phase(values, angles.gamma, uniform_state(h.num_qubits()), k);
    s = apply_mixer(angles.beta, std::move(s), k);
    return k.weighted_norm(s.amps, values);
}

}  // namespace lmc
