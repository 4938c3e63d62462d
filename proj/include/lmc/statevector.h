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


#ifndef LMC_STATEVECTOR_H
#define LMC_STATEVECTOR_H

#include <complex>
#include <span>
#include <vector>

#include "lmc/hamiltonian.h"
#include "lmc/kernels.h"
#include "lmc/qaoa_engine.h"

namespace lmc {

/// 2^26 amplitudes is 1 GiB of complex doubles.
inline constexpr std::size_t kMaxStateQubits = 26;

/// Dense state vector, computational-basis order (bit v of the index is qubit v).
struct State {
    std::size_t num_qubits = 0;
    std::vector<std::complex<double>> amps;

    double norm() const;
};

/// |s⟩ = 2^{-n/2} Σ_x |x⟩. Throws std::length_error above kMaxStateQubits.
State uniform_state(std::size_t n);
State basis_state(std::size_t n, uint64_t x);

/// Values h(x) for every basis state x.
std::vector<double> basis_values(const DiagonalHamiltonian &h,
                                 const kernels::KernelTable &k = kernels::active_kernels());

/// Multiplies amplitude x by exp(-iγ h(x)).
State apply_phase(const DiagonalHamiltonian &h, double gamma, State state,
                  const kernels::KernelTable &k = kernels::active_kernels());
State apply_phase(std::span<const double> values, double gamma, State state,
                  const kernels::KernelTable &k = kernels::active_kernels());

/// Applies exp(-iβX) to every qubit.
State apply_mixer(double beta, State state, const kernels::KernelTable &k = kernels::active_kernels());

/// Σ_x |amp_x|^2 h(x).
double expectation_sv(const DiagonalHamiltonian &h, const State &state,
                      const kernels::KernelTable &k = kernels::active_kernels());
/// ⟨Z_K⟩ in the given state.
double expectation_zk_sv(const State &state, VertexSet support,
                         const kernels::KernelTable &k = kernels::active_kernels());

/// U_M U_C |s⟩ for the given Hamiltonian and angles.
State qaoa_state(const DiagonalHamiltonian &h, QaoaAngles angles,
                 const kernels::KernelTable &k = kernels::active_kernels());
/// ⟨γ,β|H|γ,β⟩ by dense simulation.
double qaoa_expectation_sv(const DiagonalHamiltonian &h, QaoaAngles angles,
                           const kernels::KernelTable &k = kernels::active_kernels());

}  // namespace lmc

#endif
