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

#ifndef LMC_KERNELS_H
#define LMC_KERNELS_H

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace lmc::kernels {

using cplx = std::complex<double>;

/// Amplitude-loop primitives behind the statevector oracle.
///
/// Every variant must agree with the scalar reference to within rounding
/// (FMA contraction and summation order differ). Spans passed to a kernel
/// have power-of-two length.
struct KernelTable {
    std::string_view name;
    /// diag[x] += weight * (-1)^{popcount(x & mask)}.
    void (*accumulate_term)(std::span<double> diag, uint64_t mask, double weight);
    /// amps[x] *= factors[x].
    void (*complex_multiply)(std::span<cplx> amps, std::span<const cplx> factors);
    /// exp(-iβX) on one qubit: (a, b) -> (c a - i s b, c b - i s a) with c = cos β, s = sin β.
    void (*mixer_qubit)(std::span<cplx> amps, std::size_t qubit, double c, double s);
    /// Σ_x |amps[x]|^2 diag[x].
    double (*weighted_norm)(std::span<const cplx> amps, std::span<const double> diag);
    /// Σ_x |amps[x]|^2.
    double (*norm_squared)(std::span<const cplx> amps);
};

const KernelTable &scalar_kernels();

/// nullptr unless the AVX2 variant was compiled in and the CPU supports AVX2+FMA.
const KernelTable *avx2_kernels();

/// Best available table. Setting LMC_KERNELS=scalar forces the reference path.
const KernelTable &active_kernels();

}  // namespace lmc::kernels

#endif
