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

// Compiled with -mavx2 -mfma. Nothing here may run before kernels.cc has
// confirmed CPU support.

#include <immintrin.h>

#include "lmc/kernels.h"

namespace lmc::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].

void accumulate_term(std::span<double> diag, uint64_t mask, double weight) {
    if (diag.size() < 4) {
        scalar_kernels().accumulate_term(diag, mask, weight);
        return;
    }
    const __m256i vmask = _mm256_set1_epi64x(static_cast<long long>(mask));
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i four = _mm256_set1_epi64x(4);
    const __m256i zero = _mm256_setzero_si256();
    const __m256d plus = _mm256_set1_pd(weight);
    const __m256d minus = _mm256_set1_pd(-weight);
    __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);
    double *out = diag.data();
    for (std::size_t x = 0; x < diag.size(); x += 4) {
        __m256i p = _mm256_and_si256(idx, vmask);
        p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 32));
        p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 16));
        p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 8));
        p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 4));
        p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 2));
        p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 1));
        __m256d even = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(p, one), zero));
        __m256d term = _mm256_blendv_pd(minus, plus, even);
        _mm256_storeu_pd(out + x, _mm256_add_pd(_mm256_loadu_pd(out + x), term));
        idx = _mm256_add_epi64(idx, four);
    }
}

void complex_multiply(std::span<cplx> amps, std::span<const cplx> factors) {
    if (amps.size() < 2) {
        scalar_kernels().complex_multiply(amps, factors);
        return;
    }
    double *a = reinterpret_cast<double *>(amps.data());
    const double *f = reinterpret_cast<const double *>(factors.data());
    for (std::size_t i = 0; i < 2 * amps.size(); i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vf = _mm256_loadu_pd(f + i);
        __m256d fr = _mm256_movedup_pd(vf);
        __m256d fi = _mm256_permute_pd(vf, 0xF);
        __m256d swapped = _mm256_permute_pd(va, 0x5);
        _mm256_storeu_pd(a + i, _mm256_fmaddsub_pd(va, fr, _mm256_mul_pd(swapped, fi)));
    }
}

void mixer_qubit(std::span<cplx> amps, std::size_t qubit, double c, double s) {
    if (amps.size() < 2) {
        scalar_kernels().mixer_qubit(amps, qubit, c, s);
        return;
    }
    double *data = reinterpret_cast<double *>(amps.data());
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_setr_pd(s, -s, s, -s);
    if (qubit == 0) {
        // Partner amplitudes share a register.
        for (std::size_t i = 0; i < 2 * amps.size(); i += 4) {
            __m256d v = _mm256_loadu_pd(data + i);
            __m256d t = _mm256_permute_pd(_mm256_permute4x64_pd(v, 0x4E), 0x5);
            _mm256_storeu_pd(data + i, _mm256_fmadd_pd(t, vs, _mm256_mul_pd(vc, v)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            double *pa = data + 2 * i;
            double *pb = data + 2 * (i + stride);
            __m256d a = _mm256_loadu_pd(pa);
            __m256d b = _mm256_loadu_pd(pb);
            __m256d na = _mm256_fmadd_pd(_mm256_permute_pd(b, 0x5), vs, _mm256_mul_pd(vc, a));
            __m256d nb = _mm256_fmadd_pd(_mm256_permute_pd(a, 0x5), vs, _mm256_mul_pd(vc, b));
            _mm256_storeu_pd(pa, na);
            _mm256_storeu_pd(pb, nb);
        }
    }
}

double horizontal_sum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double weighted_norm(std::span<const cplx> amps, std::span<const double> diag) {
    if (amps.size() < 2) {
        return scalar_kernels().weighted_norm(amps, diag);
    }
    const double *a = reinterpret_cast<const double *>(amps.data());
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t x = 0; x < amps.size(); x += 2) {
        __m256d v = _mm256_loadu_pd(a + 2 * x);
        __m128d d2 = _mm_loadu_pd(diag.data() + x);
        __m256d d = _mm256_permute4x64_pd(_mm256_castpd128_pd256(d2), 0x50);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), d, acc);
    }
    return horizontal_sum(acc);
}

double norm_squared(std::span<const cplx> amps) {
    if (amps.size() < 2) {
        return scalar_kernels().norm_squared(amps);
    }
    const double *a = reinterpret_cast<const double *>(amps.data());
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < 2 * amps.size(); i += 4) {
        __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    return horizontal_sum(acc);
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{"avx2", accumulate_term, complex_multiply, mixer_qubit, weighted_norm, norm_squared};

}  // namespace lmc::kernels
