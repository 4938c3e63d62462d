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

#include <bit>

#include "lmc/kernels.h"

namespace lmc::kernels {

namespace {

void accumulate_term(std::span<double> diag, uint64_t mask, double weight) {
    for (std::size_t x = 0; x < diag.size(); ++x) {
        diag[x] += (std::popcount(x & mask) & 1) ? -weight : weight;
    }
}

void complex_multiply(std::span<cplx> amps, std::span<const cplx> factors) {
    for (std::size_t x = 0; x < amps.size(); ++x) {
        amps[x] *= factors[x];
    }
}

void mixer_qubit(std::span<cplx> amps, std::size_t qubit, double c, double s) {
    const std::size_t stride = std::size_t{1} << qubit;
    const cplx mis{0, -s};
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            cplx a = amps[i], b = amps[i + stride];
            amps[i] = c * a + mis * b;
            amps[i + stride] = c * b + mis * a;
        }
    }
}

double weighted_norm(std::span<const cplx> amps, std::span<const double> diag) {
    double total = 0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        total += std::norm(amps[x]) * diag[x];
    }
    return total;
}

double norm_squared(std::span<const cplx> amps) {
    double total = 0;
    for (auto a : amps) {
        total += std::norm(a);
    }
    return total;
}

constexpr KernelTable kScalar{"scalar", accumulate_term, complex_multiply, mixer_qubit, weighted_norm, norm_squared};

}  // namespace

const KernelTable &scalar_kernels() {
    return kScalar;
}

}  // namespace lmc::kernels
