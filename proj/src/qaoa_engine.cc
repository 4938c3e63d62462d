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

#include "lmc/qaoa_engine.h"

#include <cmath>
#include <string>

namespace lmc {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> i_pow(std::size_t k) {
    switch (k & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

void enumerate(std::span<const VertexSet> terms, std::span<const uint64_t> suffix_union, VertexSet k,
               std::size_t index, VertexSet acc, uint32_t chosen, std::vector<uint32_t> &out) {
    if ((acc.bits() ^ k.bits()) & ~suffix_union[index]) {
        return;
    }
    if (index == terms.size()) {
        out.push_back(chosen);
        return;
    }
    enumerate(terms, suffix_union, k, index + 1, acc, chosen, out);
    enumerate(terms, suffix_union, k, index + 1, acc ^ terms[index], chosen | (uint32_t{1} << index), out);
}

}  // namespace

std::vector<PauliTerm> odd_intersection_terms(const DiagonalHamiltonian &h, VertexSet l) {
    std::vector<PauliTerm> out;
    for (const auto &t : h.terms()) {
        if (t.support.odd_overlap(l)) {
            out.push_back(t);
        }
    }
    return out;
}

std::vector<uint32_t> solution_family_masks(std::span<const VertexSet> terms, VertexSet k, std::size_t cap) {
    if (terms.size() > cap || terms.size() > 31) {
        throw EnumerationCapExceeded("family enumeration over " + std::to_string(terms.size()) +
                                     " terms exceeds the cap of " + std::to_string(std::min<std::size_t>(cap, 31)));
    }
    std::vector<uint64_t> suffix_union(terms.size() + 1, 0);
    for (std::size_t i = terms.size(); i-- > 0;) {
        suffix_union[i] = suffix_union[i + 1] | terms[i].bits();
    }
    std::vector<uint32_t> out;
    enumerate(terms, suffix_union, k, 0, VertexSet(), 0, out);
    return out;
}

std::vector<std::vector<VertexSet>> solution_families(std::span<const VertexSet> terms, VertexSet k,
                                                      std::size_t cap) {
    std::vector<std::vector<VertexSet>> out;
    for (uint32_t mask : solution_family_masks(terms, k, cap)) {
        auto &fam = out.emplace_back();
        for (std::size_t j = 0; j < terms.size(); ++j) {
            if ((mask >> j) & 1) {
                fam.push_back(terms[j]);
            }
        }
    }
    return out;
}

ZkPlan::ZkPlan(const DiagonalHamiltonian &h, VertexSet k, std::size_t cap) : k_(k) {
    if (k.empty()) {
        throw std::invalid_argument("⟨Z_K⟩ requires a nonempty K");
    }
    if (!k.is_subset_of(VertexSet::first_n(h.num_qubits()))) {
        throw std::out_of_range("K = " + k.str() + " exceeds the Hamiltonian's qubits");
    }
    for_each_subset(k, [&](VertexSet l) {
        Slice s{l, odd_intersection_terms(h, l), {}};
        std::vector<VertexSet> supports;
        supports.reserve(s.odd_terms.size());
        for (const auto &t : s.odd_terms) {
            supports.push_back(t.support);
        }
        s.families = solution_family_masks(supports, k, cap);
        slices_.push_back(std::move(s));
    });
}

std::complex<double> ZkPlan::nu(VertexSet l, QaoaAngles angles) const {
    const double s = std::sin(2 * angles.beta);
    const double c = std::cos(2 * angles.beta);
    const int in = static_cast<int>(l.size());
    const int out = static_cast<int>(k_.size()) - in;
    return i_pow(l.size()) * std::pow(s, in) * std::pow(c, out);
}

std::complex<double> ZkPlan::slice_sum(const Slice &s, QaoaAngles angles, std::vector<SolutionFamily> *out) const {
    if (s.families.empty()) {
        return {0, 0};
    }
    const std::size_t m = s.odd_terms.size();
    std::vector<std::complex<double>> chosen(m), skipped(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double w = s.odd_terms[j].weight;
        chosen[j] = kI * std::sin(-2 * angles.gamma * w);
        skipped[j] = std::cos(2 * angles.gamma * w);
    }
    std::complex<double> sum{0, 0};
    for (uint32_t mask : s.families) {
        std::complex<double> alpha{1, 0};
        for (std::size_t j = 0; j < m; ++j) {
            alpha *= ((mask >> j) & 1) ? chosen[j] : skipped[j];
        }
        sum += alpha;
        if (out) {
            auto &fam = out->emplace_back();
            fam.alpha = alpha;
            for (std::size_t j = 0; j < m; ++j) {
                if ((mask >> j) & 1) {
                    fam.members.push_back(s.odd_terms[j].support);
                }
            }
        }
    }
    return sum;
}

double ZkPlan::evaluate(QaoaAngles angles) const {
    std::complex<double> total{0, 0};
    for (const auto &s : slices_) {
        if (!s.families.empty()) {
            total += nu(s.l, angles) * slice_sum(s, angles, nullptr);
        }
    }
    if (std::abs(total.imag()) > kRealnessTolerance) {
        throw ImaginaryResidue("⟨Z_K⟩ for K = " + k_.str() + " has imaginary part " + std::to_string(total.imag()));
    }
    return total.real();
}

ZkBreakdown ZkPlan::explain(QaoaAngles angles) const {
    ZkBreakdown b;
    b.k = k_;
    for (const auto &s : slices_) {
        LContribution c;
        c.l = s.l;
        c.nu = nu(s.l, angles);
        c.rho = c.nu * slice_sum(s, angles, &c.families);
        b.raw_total += c.rho;
        b.per_l.push_back(std::move(c));
    }
    if (std::abs(b.raw_total.imag()) > kRealnessTolerance) {
        throw ImaginaryResidue("⟨Z_K⟩ for K = " + k_.str() + " has imaginary part " +
                               std::to_string(b.raw_total.imag()));
    }
    b.total = b.raw_total.real();
    return b;
}

ZkBreakdown expectation_zk(const DiagonalHamiltonian &h, VertexSet k, QaoaAngles angles, std::size_t cap) {
    return ZkPlan(h, k, cap).explain(angles);
}

QaoaExpectation::QaoaExpectation(const DiagonalHamiltonian &h, std::size_t cap) : h_(h) {
    plans_.reserve(h.terms().size());
    for (const auto &t : h.terms()) {
        plans_.emplace_back(h, t.support, cap);
    }
}

double QaoaExpectation::evaluate(QaoaAngles angles) const {
    double total = h_.constant();
    for (std::size_t i = 0; i < plans_.size(); ++i) {
        total += h_.terms()[i].weight * plans_[i].evaluate(angles);
    }
    return total;
}

std::vector<double> QaoaExpectation::term_expectations(QaoaAngles angles) const {
    std::vector<double> out;
    out.reserve(plans_.size());
    for (const auto &p : plans_) {
        out.push_back(p.evaluate(angles));
    }
    return out;
}

double expectation_full(const DiagonalHamiltonian &h, QaoaAngles angles, std::size_t cap) {
    return QaoaExpectation(h, cap).evaluate(angles);
}

}  // namespace lmc
