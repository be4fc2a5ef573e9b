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

#include "tdg/instance.hpp"
#include "tdg/reductions.hpp"

namespace tdg {
namespace {

bool has_message(const std::vector<Violation>& v, const std::string& message) {
    for (const auto& x : v)
        if (x.message == message) return true;
    return false;
}

TEST(Instance, SingleAgentUtilityIsZero) {
    const Instance inst = make_instance(path_graph(3), 1);
    const auto d = shortest_distances(inst.topology);
    EXPECT_EQ(agent_utility(inst, Assignment{{2}}, 0, d), Rational(0));
}

TEST(Instance, UtilityAlongPath) {
    Instance inst = make_instance(path_graph(3), 2);
    inst.utilities[0][1] = 2;
    const auto d = shortest_distances(inst.topology);
    EXPECT_EQ(agent_utility(inst, Assignment{{0, 2}}, 0, d), Rational(1));
}

TEST(Instance, BinPackingCertificateGivesZero) {
    const auto g = gen_unary_bin_packing({{2, 2, 2, 2}, 2, 4}, DistanceFactorFunction::table({Rational(1)}));
    const IrReport r = is_individually_rational(g.instance, certificate_to_assignment(g, BinAllocation{{0, 0, 1, 1}}));
    EXPECT_TRUE(r.individually_rational);
    for (const auto& u : r.utilities) EXPECT_EQ(u, Rational(0));
}

TEST(Instance, AllZeroUtilitiesAreRational) {
    const Instance inst = make_instance(complete_graph(4), 3);
    EXPECT_TRUE(is_individually_rational(inst, Assignment{{3, 1, 0}}).individually_rational);
}

TEST(Instance, MutualEnemiesOnK2) {
    Instance inst = make_instance(complete_graph(2), 2);
    inst.utilities[0][1] = inst.utilities[1][0] = -1;
    const IrReport r = is_individually_rational(inst, Assignment{{0, 1}});
    EXPECT_FALSE(r.individually_rational);
    EXPECT_EQ(r.utilities, (std::vector<Rational>{-1, -1}));
}

TEST(Instance, IndependentSetCertificateOnP3) {
    const auto g = gen_independent_set({path_graph(3), 2}, 1, DistanceFactorFunction::reciprocal());
    const IrReport r = is_individually_rational(g.instance, Assignment{{0, 2, 3}});
    EXPECT_TRUE(r.individually_rational);
    EXPECT_EQ(r.utilities[0], Rational(0));
    EXPECT_EQ(r.utilities[1], Rational(0));
}

TEST(Instance, InvalidAssignmentsThrow) {
    const Instance inst = make_instance(path_graph(3), 2);
    EXPECT_THROW(is_individually_rational(inst, Assignment{{1, 1}}), ValidationError);
    EXPECT_THROW(is_individually_rational(inst, Assignment{{0, 3}}), ValidationError);
    EXPECT_THROW(is_individually_rational(inst, Assignment{{0}}), ValidationError);
}

TEST(Instance, EnmityClassification) {
    Instance inst = make_instance(complete_graph(4), 4);
    EXPECT_EQ(enmity_structure(inst).classification, EnmityClass::NoArcs);

    inst.utilities[2][0] = -1;
    inst.utilities[2][3] = Rational(-1, 2);
    auto s = enmity_structure(inst);
    EXPECT_EQ(s.classification, EnmityClass::SingleSource);
    EXPECT_EQ(s.center, AgentId{2});
    EXPECT_EQ(s.arc_count(), 2u);

    inst = make_instance(complete_graph(4), 4);
    inst.utilities[0][3] = -1;
    inst.utilities[1][3] = -2;
    s = enmity_structure(inst);
    EXPECT_EQ(s.classification, EnmityClass::SingleSink);
    EXPECT_EQ(s.center, AgentId{3});

    inst.utilities[3][0] = -1;
    EXPECT_EQ(enmity_structure(inst).classification, EnmityClass::General);
}

TEST(Instance, SingleArcIsReportedAsSource) {
    Instance inst = make_instance(complete_graph(2), 2);
    inst.utilities[1][0] = -1;
    const auto s = enmity_structure(inst);
    EXPECT_EQ(s.classification, EnmityClass::SingleSource);
    EXPECT_EQ(s.center, AgentId{1});
    EXPECT_TRUE(s.all_enter(0));
}

TEST(Instance, ValidationMessages) {
    Instance inst = make_instance(path_graph(2), 2);
    inst.utilities[0][0] = 1;
    EXPECT_TRUE(has_message(validate_instance(inst), "diagonal nonzero"));
    EXPECT_TRUE(has_message(validate_instance(make_instance(path_graph(2), 3)), "fewer vertices than agents"));
    inst = make_instance(path_graph(2), 2, DistanceFactorFunction::table({Rational(1), Rational(1)}));
    EXPECT_TRUE(has_message(validate_instance(inst), "not strictly decreasing"));
}

TEST(Instance, TableMustCoverEveryComponentDiameter) {
    const Topology t = disjoint_union(path_graph(2), path_graph(4));
    EXPECT_FALSE(validate_instance(make_instance(t, 2, DistanceFactorFunction::table({Rational(2), Rational(1)}))).empty());
    EXPECT_TRUE(validate_instance(make_instance(t, 2, DistanceFactorFunction::table({Rational(3), Rational(2), Rational(1)}))).empty());
}

}  // namespace
}  // namespace tdg
