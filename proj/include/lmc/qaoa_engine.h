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

#ifndef LMC_QAOA_ENGINE_H
#define LMC_QAOA_ENGINE_H

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lmc/hamiltonian.h"
#include "lmc/vertex_set.h"

namespace lmc {

/// Single-round QAOA angles. Any finite reals are accepted; the optimizer
/// searches γ ∈ [0, 2π), β ∈ [0, π).
struct QaoaAngles {
    double gamma = 0;
    double beta = 0;
};

/// Default bound on |O(L)| for exhaustive family enumeration.
inline constexpr std::size_t kDefaultFamilyCap = 25;

struct EnumerationCapExceeded : std::length_error {
    using std::length_error::length_error;
};

/// Thrown when an expectation's imaginary part exceeds kRealnessTolerance.
struct ImaginaryResidue : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr double kRealnessTolerance = 1e-9;

struct SolutionFamily {
    std::vector<VertexSet> members;
    std::complex<double> alpha;
};

struct LContribution {
    VertexSet l;
    std::complex<double> nu;
    std::vector<SolutionFamily> families;
    std::complex<double> rho;
};

/// Every term of the ⟨Z_K⟩ expansion, one record per L ⊆ K (including ∅).
struct ZkBreakdown {
    VertexSet k;
    std::vector<LContribution> per_l;
    std::complex<double> raw_total;
    double total = 0;
};

/// Terms M of h (nonempty, nonzero weight) with |M ∩ L| odd, in h's term order.
std::vector<PauliTerm> odd_intersection_terms(const DiagonalHamiltonian &h, VertexSet l);

/// All subfamilies F of `terms` with △F = K, each as a bitmask over term
/// indices (bit j set when terms[j] ∈ F).
///
/// Depth-first over the list with a running symmetric difference; a branch is
/// cut when bits of (acc △ K) lie outside the union of the remaining terms.
std::vector<uint32_t> solution_family_masks(std::span<const VertexSet> terms, VertexSet k,
                                            std::size_t cap = kDefaultFamilyCap);

/// Same enumeration, materialized as lists of subsets.
std::vector<std::vector<VertexSet>> solution_families(std::span<const VertexSet> terms, VertexSet k,
                                                      std::size_t cap = kDefaultFamilyCap);

/// Angle-independent part of ⟨γ,β|Z_K|γ,β⟩: O(L) and O_K(L) for each L ⊆ K.
class ZkPlan {
   public:
    ZkPlan(const DiagonalHamiltonian &h, VertexSet k, std::size_t cap = kDefaultFamilyCap);

    VertexSet k() const {
        return k_;
    }

    /// Real expectation; throws ImaginaryResidue if the imaginary part is not negligible.
    double evaluate(QaoaAngles angles) const;
    ZkBreakdown explain(QaoaAngles angles) const;

   private:
    struct Slice {
        VertexSet l;
        std::vector<PauliTerm> odd_terms;
        std::vector<uint32_t> families;
    };

    std::complex<double> slice_sum(const Slice &s, QaoaAngles angles, std::vector<SolutionFamily> *out) const;
    std::complex<double> nu(VertexSet l, QaoaAngles angles) const;

    VertexSet k_;
    std::vector<Slice> slices_;
};

/// ⟨γ,β|Z_K|γ,β⟩ with its full breakdown. K must be nonempty.
ZkBreakdown expectation_zk(const DiagonalHamiltonian &h, VertexSet k, QaoaAngles angles,
                           std::size_t cap = kDefaultFamilyCap);

/// Precomputed plans for every term of h; evaluates F(γ,β) = ⟨γ,β|H|γ,β⟩.
class QaoaExpectation {
   public:
    explicit QaoaExpectation(const DiagonalHamiltonian &h, std::size_t cap = kDefaultFamilyCap);

    double evaluate(QaoaAngles angles) const;
    /// ⟨Z_K⟩ for each term K of h, in h's term order.
    std::vector<double> term_expectations(QaoaAngles angles) const;
    const DiagonalHamiltonian &hamiltonian() const {
        return h_;
    }

   private:
    DiagonalHamiltonian h_;
    std::vector<ZkPlan> plans_;
};

double expectation_full(const DiagonalHamiltonian &h, QaoaAngles angles, std::size_t cap = kDefaultFamilyCap);

}  // namespace lmc

#endif
