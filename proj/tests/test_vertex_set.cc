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

#include <set>

#include "lmc/vertex_set.h"

namespace lmc {
namespace {

TEST(VertexSet, BasicQueries) {
    VertexSet s{0, 3, 5};
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(4));
    EXPECT_FALSE(s.contains(100));
    EXPECT_EQ(s.str(), "{0,3,5}");
    EXPECT_EQ(s.to_vector(), (std::vector<std::size_t>{0, 3, 5}));
    EXPECT_TRUE(VertexSet{}.empty());
    EXPECT_EQ(VertexSet{}.str(), "{}");
}

TEST(VertexSet, SymmetricDifferenceAndParity) {
    VertexSet a{0, 1, 2}, b{1, 2, 3};
    EXPECT_EQ(a ^ b, (VertexSet{0, 3}));
    EXPECT_EQ(a & b, (VertexSet{1, 2}));
    EXPECT_EQ(a | b, (VertexSet{0, 1, 2, 3}));
    EXPECT_FALSE(a.odd_overlap(b));
    EXPECT_TRUE(a.odd_overlap(VertexSet{2}));
    EXPECT_TRUE((VertexSet{1}).is_subset_of(a));
    EXPECT_FALSE(b.is_subset_of(a));
}

TEST(VertexSet, RejectsVertexBeyondCapacity) {
    VertexSet s;
    s.insert(63);
    EXPECT_EQ(s.size(), 1u);
    EXPECT_THROW(s.insert(64), std::out_of_range);
    EXPECT_EQ(VertexSet::first_n(64).size(), 64u);
    EXPECT_EQ(VertexSet::first_n(3), (VertexSet{0, 1, 2}));
}

TEST(VertexSet, ForEachSubsetVisitsPowerSetOnce) {
    VertexSet s{1, 4, 6, 9};
    std::set<uint64_t> seen;
    uint64_t prev = 0;
    bool first = true;
    for_each_subset(s, [&](VertexSet sub) {
        EXPECT_TRUE(sub.is_subset_of(s));
        if (!first) {
            EXPECT_GT(sub.bits(), prev);
        }
        first = false;
        prev = sub.bits();
        seen.insert(sub.bits());
    });
    EXPECT_EQ(seen.size(), 16u);
    std::size_t count = 0;
    for_each_subset(VertexSet{}, [&](VertexSet sub) {
        EXPECT_TRUE(sub.empty());
        ++count;
    });
    EXPECT_EQ(count, 1u);
}

}  // namespace
}  // namespace lmc
