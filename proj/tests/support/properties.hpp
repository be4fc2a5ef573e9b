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

#pragma once

// Randomised invariant checks shared by the unit tests and the acceptance
// binary. Each check builds one random case and returns a description of the
// failure, or nullopt when the invariant held.

#include <optional>
#include <string>

#include "random_instances.hpp"
#include "naive_enumerator.hpp"
#include "tdg/solvers.hpp"

namespace tdg::testing {

inline Assignment random_assignment(Rng& rng, const Instance& inst) {
    std::vector<VertexId> vertices(inst.topology.vertex_count);
    std::iota(vertices.begin(), vertices.end(), VertexId{0});
    std::shuffle(vertices.begin(), vertices.end(), rng);
    vertices.resize(inst.agent_count());
    return Assignment{vertices};
}

/// Multiplying one agent's utility row by c > 0 scales that agent's utility
/// by c and leaves every IR verdict unchanged.
inline std::optional<std::string> check_row_scaling(Rng& rng) {
    Instance inst = random_instance(rng, 7, 6);
    const Assignment a = random_assignment(rng, inst);
    const AgentId i = uniform(rng, 0, inst.agent_count() - 1);
    const Rational c = random_rational(rng, 0, 5) + Rational(1, 7);
    const IrReport before = is_individually_rational(inst, a);
    for (auto& x : inst.utilities[i]) x *= c;
    const IrReport after = is_individually_rational(inst, a);
    if (after.utilities[i] != before.utilities[i] * c) return "scaled utility is not c times the original";
    if (after.individually_rational != before.individually_rational) return "IR verdict changed under row scaling";
    for (AgentId j = 0; j < inst.agent_count(); ++j)
        if (after.utilities[j].sign() != before.utilities[j].sign()) return "utility sign changed under row scaling";
    return std::nullopt;
}

/// Renaming vertices by a permutation does not change the answer.
inline std::optional<std::string> check_vertex_relabeling(Rng& rng) {
    const Instance inst = random_instance(rng, 6, 5);
    std::vector<VertexId> pi(inst.topology.vertex_count);
    std::iota(pi.begin(), pi.end(), VertexId{0});
    std::shuffle(pi.begin(), pi.end(), rng);
    Instance relabeled = inst;
    for (auto& e : relabeled.topology.edges) e = {pi[e.u], pi[e.v]};
    const auto before = solve_brute_force(inst);
    const auto after = solve_brute_force(relabeled);
    if (before.answer != after.answer) return "answer changed under vertex relabeling";
    return std::nullopt;
}

/// An extra isolated vertex never turns a yes into a no.
inline std::optional<std::string> check_isolated_vertex(Rng& rng) {
    const Instance inst = random_instance(rng, 6, 5);
    Instance grown = inst;
    grown.topology.vertex_count += 1;
    if (solve_brute_force(inst).yes() && !solve_brute_force(grown).yes()) return "isolated vertex removed a yes";
    return std::nullopt;
}

/// Utilities toward agents in another component contribute nothing.
inline std::optional<std::string> check_cross_component(Rng& rng) {
    const std::size_t left = uniform(rng, 1, 4), right = uniform(rng, 1, 4);
    Topology topo = disjoint_union(random_topology(rng, left, 0.6), random_topology(rng, right, 0.6));
    const std::size_t m = uniform(rng, 2, left + right);
    Instance inst = make_instance(topo, m);
    for (AgentId i = 0; i < m; ++i)
        for (AgentId j = 0; j < m; ++j)
            if (i != j) inst.utilities[i][j] = random_rational(rng, -3, 3);
    const Assignment a = random_assignment(rng, inst);
    const auto dist = shortest_distances(inst.topology);
    const IrReport before = is_individually_rational(inst, a);
    for (AgentId i = 0; i < m; ++i)
        for (AgentId j = 0; j < m; ++j)
            if (i != j && !dist.at(a[i], a[j]).reachable()) inst.utilities[i][j] = random_rational(rng, -9, 9);
    const IrReport after = is_individually_rational(inst, a);
    if (before.utilities != after.utilities) return "utility depends on an agent in another component";
    return std::nullopt;
}

/// BFS distances equal Floyd-Warshall, are symmetric, zero on the diagonal,
/// one on edges and satisfy the triangle inequality.
inline std::optional<std::string> check_distance_matrix(Rng& rng) {
    const Topology t = random_topology(rng, uniform(rng, 1, 10), std::uniform_real_distribution<>(0.05, 0.7)(rng));
    const auto d = shortest_distances(t);
    const auto ref = floyd_warshall(t);
    const std::size_t n = t.vertex_count;
    for (VertexId a = 0; a < n; ++a) {
        if (d.at(a, a) != Distance::finite(0)) return "nonzero diagonal";
        for (VertexId b = 0; b < n; ++b) {
            const Distance expected = ref[a][b] == kNoPath ? Distance::unreachable() : Distance::finite(ref[a][b]);
            if (d.at(a, b) != expected) return "BFS distance differs from Floyd-Warshall";
            if (d.at(a, b) != d.at(b, a)) return "asymmetric distance";
            for (VertexId c = 0; c < n; ++c) {
                const Distance ab = d.at(a, b), bc = d.at(b, c), ac = d.at(a, c);
                if (ab.reachable() && bc.reachable() && (!ac.reachable() || ac.hops() > ab.hops() + bc.hops()))
                    return "triangle inequality violated";
            }
        }
    }
    for (const auto& e : t.edges)
        if (d.at(e.u, e.v) != Distance::finite(1)) return "edge endpoints not at distance 1";
    return std::nullopt;
}

/// A table passes validation iff it is positive and strictly decreasing.
inline std::optional<std::string> check_table_validation(Rng& rng) {
    const std::size_t len = uniform(rng, 1, 6);
    std::vector<Rational> values;
    if (coin(rng, 0.5)) {
        Rational v = random_rational(rng, 1, 6) + Rational(1);
        for (std::size_t i = 0; i < len; ++i) {
            values.push_back(v);
            v = v / Rational(2) + (coin(rng, 0.1) ? Rational(5) : Rational(0));
        }
    } else {
        for (std::size_t i = 0; i < len; ++i) values.push_back(random_rational(rng, -1, 4));
    }
    bool expected = true;
    for (std::size_t i = 0; i < len; ++i) {
        if (values[i].raw() <= 0) expected = false;
        if (i > 0 && values[i].raw() >= values[i - 1].raw()) expected = false;
    }
    const bool accepted = DistanceFactorFunction::table(values).violations().empty();
    if (accepted != expected) return "table validation disagrees with the definition";
    return std::nullopt;
}

}  // namespace tdg::testing
