/*
 * Copyright 2026 The tdgir Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "tdg/source_problems.hpp"

namespace tdg {
namespace {

TEST(DecideSource, EquitablePartitionFirstSplit) {
    const auto d = decide_source(EquitablePartition{{8, 8, 8, 8}});
    ASSERT_TRUE(d.yes);
    EXPECT_EQ(std::get<IndexSubset>(*d.certificate).indices, (std::vector<std::size_t>{0, 1}));
    EXPECT_FALSE(decide_source(EquitablePartition{{1, 1, 1, 3}}).yes);
    EXPECT_FALSE(decide_source(EquitablePartition{{1, 2, 3}}).yes);
}

TEST(DecideSource, ThreePartition) {
    const ThreePartition yes{{5, 5, 6, 6, 7, 7}, 18};
    const auto d = decide_source(yes);
    ASSERT_TRUE(d.yes);
    EXPECT_FALSE(certificate_defect(yes, *d.certificate));
    EXPECT_FALSE(decide_source(ThreePartition{{5, 5, 5, 7, 7, 7}, 18}).yes);
    EXPECT_FALSE(decide_source(ThreePartition{{6, 6, 6, 6, 7, 9}, 20}).yes);
}

TEST(DecideSource, IndependentSetAndClique) {
    EXPECT_FALSE(decide_source(IndependentSet{complete_graph(3), 2}).yes);
    const auto d = decide_source(IndependentSet{path_graph(3), 2});
    ASSERT_TRUE(d.yes);
    EXPECT_EQ(std::get<VertexSubset>(*d.certificate).vertices, (std::vector<VertexId>{0, 2}));
    EXPECT_TRUE(decide_source(Clique{complete_graph(3), 3}).yes);
    EXPECT_FALSE(decide_source(Clique{path_graph(3), 3}).yes);
}

TEST(DecideSource, BinPacking) {
    // No bin of capacity 4 can hold a 3 together with anything else.
    EXPECT_FALSE(decide_source(UnaryBinPacking{{2, 3, 3}, 2, 4}).yes);
    const UnaryBinPacking packable{{2, 2, 4}, 2, 4};
    const auto d = decide_source(packable);
    ASSERT_TRUE(d.yes);
    EXPECT_FALSE(certificate_defect(packable, *d.certificate));
    EXPECT_FALSE(decide_source(UnaryBinPacking{{5, 3}, 2, 4}).yes);
}

TEST(DecideSource, BudgetIsEnforced) {
    EquitablePartition big;
    // 40 items, even total, but one item exceeds half of it: a no-instance
    // that only exhaustive enumeration can settle.
    for (Item i = 1; i < 40; ++i) big.items.push_back(2 * i);
    big.items.push_back(10000);
    EXPECT_THROW(decide_source(big, 1000), OracleBudgetError);
}

TEST(CertificateDefect, RejectsBadCertificates) {
    const EquitablePartition ep{{1, 2, 3, 4}};
    EXPECT_FALSE(certificate_defect(ep, IndexSubset{{0, 3}}));
    EXPECT_TRUE(certificate_defect(ep, IndexSubset{{0, 1}}));
    EXPECT_TRUE(certificate_defect(ep, IndexSubset{{3, 0}}));
    EXPECT_TRUE(certificate_defect(ep, BinAllocation{{0, 0, 1, 1}}));
    EXPECT_TRUE(certificate_defect(IndependentSet{path_graph(3), 2}, VertexSubset{{0, 1}}));
    EXPECT_TRUE(certificate_defect(Clique{path_graph(3), 2}, VertexSubset{{0, 2}}));
}

}  // namespace
}  // namespace tdg
