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

#ifndef LMC_VERTEX_SET_H
#define LMC_VERTEX_SET_H

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmc {

/// Maximum number of vertices addressable by a VertexSet.
inline constexpr std::size_t kMaxSetVertices = 64;

/// A subset of {0, ..., 63} stored as a single machine word.
///
/// Pauli-Z products compose by symmetric difference, so `^` is the workhorse
/// of the expectation engine. Parity of an intersection is a popcount.
class VertexSet {
   public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(uint64_t bits) : bits_(bits) {
    }
    VertexSet(std::initializer_list<std::size_t> vertices) {
        for (auto v : vertices) {
            insert(v);
        }
    }

    static VertexSet from_vertices(std::span<const std::size_t> vertices) {
        VertexSet s;
        for (auto v : vertices) {
            s.insert(v);
        }
        return s;
    }

    /// The set {0, ..., n-1}.
    static constexpr VertexSet first_n(std::size_t n) {
        return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
    }

    constexpr uint64_t bits() const {
        return bits_;
    }
    constexpr bool empty() const {
        return bits_ == 0;
    }
    constexpr std::size_t size() const {
        return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool contains(std::size_t v) const {
        return v < 64 && ((bits_ >> v) & 1) != 0;
    }
    constexpr bool is_subset_of(VertexSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    /// True when |this ∩ other| is odd.
    constexpr bool odd_overlap(VertexSet other) const {
        return (std::popcount(bits_ & other.bits_) & 1) != 0;
    }

    void insert(std::size_t v) {
        if (v >= kMaxSetVertices) {
            throw std::out_of_range("vertex " + std::to_string(v) + " exceeds the 64-vertex set capacity");
        }
        bits_ |= uint64_t{1} << v;
    }

    /// Ascending list of members.
    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        }
        return out;
    }

    /// Formats as "{0,3,5}".
    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (auto v : to_vector()) {
            if (!first) {
                out += ',';
            }
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

    constexpr VertexSet operator^(VertexSet o) const {
        return VertexSet(bits_ ^ o.bits_);
    }
    constexpr VertexSet operator&(VertexSet o) const {
        return VertexSet(bits_ & o.bits_);
    }
    constexpr VertexSet operator|(VertexSet o) const {
        return VertexSet(bits_ | o.bits_);
    }
    constexpr VertexSet &operator^=(VertexSet o) {
        bits_ ^= o.bits_;
        return *this;
    }
    constexpr VertexSet &operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr auto operator<=>(const VertexSet &) const = default;

   private:
    uint64_t bits_ = 0;
};

/// Calls `fn(sub)` for every subset of `set`, including the empty set and `set`
/// itself, in increasing order of the underlying bits.
template <typename Fn>
void for_each_subset(VertexSet set, Fn &&fn) {
    const uint64_t full = set.bits();
    uint64_t sub = 0;
    while (true) {
        fn(VertexSet(sub));
        if (sub == full) {
            break;
        }
        sub = (sub - full) & full;
    }
}

}  // namespace lmc

#endif
