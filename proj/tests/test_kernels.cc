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


#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lmc/kernels.h"

namespace lmc::kernels {
namespace {

std::vector<cplx> random_amps(std::size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    std::vector<cplx> out(n);
    for (auto &a : out) {
        a = {d(rng), d(rng)};
    }
    return out;
}

class Avx2Equivalence : public ::testing::TestWithParam<std::size_t> {
  protected:
    void SetUp() override {
        fast_ = avx2_kernels();
        if (fast_ == nullptr) {
            GTEST_SKIP() << "AVX2 kernels unavailable on this build or CPU";
        }
    }
    const KernelTable &ref_ = scalar_kernels();
    const KernelTable *fast_ = nullptr;
};

void expect_close(const std::vector<cplx> &a, const std::vector<cplx> &b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_NEAR(a[i].real(), b[i].real(), tol) << i;
        ASSERT_NEAR(a[i].imag(), b[i].imag(), tol) << i;
    }
}

TEST_P(Avx2Equivalence, AccumulateTerm) {
    const std::size_t n = std::size_t{1} << GetParam();
    std::mt19937_64 rng(GetParam());
    std::vector<double> a(n, 0.25), b(n, 0.25);
    for (int t = 0; t < 12; ++t) {
        const uint64_t mask = rng() & (n - 1);
        const double w = double(rng() % 1000) / 997 - 0.5;
        ref_.accumulate_term(a, mask, w);
        fast_->accumulate_term(b, mask, w);
    }
    for (std::size_t i = 0; i < n; ++i) {
        ASSERT_DOUBLE_EQ(a[i], b[i]) << i;
    }
}

TEST_P(Avx2Equivalence, ComplexMultiply) {
    const std::size_t n = std::size_t{1} << GetParam();
    auto a = random_amps(n, 1), b = a, f = random_amps(n, 2);
    ref_.complex_multiply(a, f);
    fast_->complex_multiply(b, f);
    expect_close(a, b, 1e-13);
}

TEST_P(Avx2Equivalence, MixerEveryQubit) {
    const std::size_t q = GetParam();
    const std::size_t n = std::size_t{1} << q;
    for (std::size_t qubit = 0; qubit < q; ++qubit) {
        auto a = random_amps(n, 10 + qubit), b = a;
        ref_.mixer_qubit(a, qubit, std::cos(0.37), std::sin(0.37));
        fast_->mixer_qubit(b, qubit, std::cos(0.37), std::sin(0.37));
        expect_close(a, b, 1e-13);
    }
}

TEST_P(Avx2Equivalence, Reductions) {
    const std::size_t n = std::size_t{1} << GetParam();
    auto a = random_amps(n, 5);
    std::vector<double> diag(n);
    std::mt19937_64 rng(6);
    for (auto &d : diag) {
        d = double(rng() % 100) - 50;
    }
    const double scale = double(n) * 50;
    EXPECT_NEAR(ref_.norm_squared(a), fast_->norm_squared(a), 1e-13 * double(n));
    EXPECT_NEAR(ref_.weighted_norm(a, diag), fast_->weighted_norm(a, diag), 1e-13 * scale);
}

INSTANTIATE_TEST_SUITE_P(Sizes, Avx2Equivalence, ::testing::Values(0, 1, 2, 3, 5, 10, 14));

TEST(Dispatch, ActiveTableIsKnown) {
    const auto &k = active_kernels();
    EXPECT_TRUE(k.name == "scalar" || k.name == "avx2");
    if (avx2_kernels() == nullptr) {
        EXPECT_EQ(k.name, "scalar");
    }
}

TEST(Scalar, MixerMatchesDefinition) {
    std::vector<cplx> a{{1, 0}, {0, 2}};
    scalar_kernels().mixer_qubit(a, 0, 0.6, 0.8);
    // (c a - i s b, c b - i s a) with a = 1, b = 2i.
    EXPECT_NEAR(a[0].real(), 0.6 + 1.6, 1e-15);
    EXPECT_NEAR(a[0].imag(), 0, 1e-15);
    EXPECT_NEAR(a[1].real(), 0, 1e-15);
    EXPECT_NEAR(a[1].imag(), 1.2 - 0.8, 1e-15);
}

}  // namespace
}  // namespace lmc::kernels
