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

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdg/distance_factor.hpp"
#include "tdg/errors.hpp"
#include "tdg/rational.hpp"
#include "tdg/topology.hpp"

namespace tdg {

/// utilities[i][j] is the value agent i assigns to agent j.
using UtilityMatrix = std::vector<std::vector<Rational>>;

/// A complete topological distance game.
struct Instance {
    Topology topology;
    std::vector<std::string> agent_names;
    UtilityMatrix utilities;
    DistanceFactorFunction dff;

    std::size_t agent_count() const noexcept { return agent_names.size(); }
    const Rational& utility(AgentId i, AgentId j) const { return utilities[i][j]; }

    std::optional<AgentId> find_agent(std::string_view name) const {
        for (AgentId i = 0; i < agent_names.size(); ++i)
            if (agent_names[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Instance&) const = default;
};

/// Agent names "a0", "a1", ... and an all-zero utility matrix.
inline Instance make_instance(Topology topology, std::size_t agents,
                              DistanceFactorFunction dff = DistanceFactorFunction::reciprocal()) {
    Instance inst;
    inst.topology = std::move(topology);
    for (std::size_t i = 0; i < agents; ++i) inst.agent_names.push_back("a" + std::to_string(i));
    inst.utilities.assign(agents, std::vector<Rational>(agents, Rational(0)));
    inst.dff = std::move(dff);
    return inst;
}

/// Injective map agent index -> vertex id.
struct Assignment {
    std::vector<VertexId> placement;

    std::size_t size() const noexcept { return placement.size(); }
    VertexId operator[](AgentId a) const { return placement[a]; }

    auto operator<=>(const Assignment&) const = default;
};

/// Every Instance invariant; empty result means valid.
inline std::vector<Violation> validate_instance(const Instance& inst) {
    std::vector<Violation> out = inst.topology.violations();
    const std::size_t m = inst.agent_count();

    if (m > inst.topology.vertex_count) out.push_back({"$.agents", "fewer vertices than agents"});

    std::set<std::string_view> names;
    for (std::size_t i = 0; i < m; ++i) {
        if (inst.agent_names[i].empty())
            out.push_back({"$.agents[" + std::to_string(i) + "]", "empty agent name"});
        if (!names.insert(inst.agent_names[i]).second)
            out.push_back({"$.agents[" + std::to_string(i) + "]", "duplicate agent name"});
    }

    bool square = inst.utilities.size() == m;
    if (!square) out.push_back({"$.utilities", "utility matrix must have one row per agent"});
    for (std::size_t i = 0; i < inst.utilities.size(); ++i) {
        if (inst.utilities[i].size() != m) {
            square = false;
            out.push_back({"$.utilities[" + std::to_string(i) + "]", "utility row must have one entry per agent"});
        }
    }
    if (square) {
        for (std::size_t i = 0; i < m; ++i)
            if (!inst.utilities[i][i].is_zero())
                out.push_back({"$.utilities[" + std::to_string(i) + "][" + std::to_string(i) + "]",
                               "diagonal nonzero"});
    }

    const auto dff_violations = inst.dff.violations();
    out.insert(out.end(), dff_violations.begin(), dff_violations.end());

    if (const auto covered = inst.dff.defined_up_to(); covered && inst.topology.violations().empty()) {
        const auto dist = shortest_distances(inst.topology);
        const auto needed = max_finite_distance(dist);
        if (needed > *covered)
            out.push_back({"$.dff.values", "table of length " + std::to_string(*covered) +
                                               " does not cover component diameter " + std::to_string(needed)});
    }
    return out;
}

inline void require_valid(const Instance& inst) {
    if (auto v = validate_instance(inst); !v.empty()) throw ValidationError(std::move(v));
}

/// Totality, range and injectivity of an assignment.
inline std::vector<Violation> assignment_violations(const Instance& inst, const Assignment& assignment) {
    std::vector<Violation> out;
    if (assignment.size() != inst.agent_count()) {
        out.push_back({"$", "assignment must place every agent exactly once"});
        return out;
    }
    std::vector<std::optional<AgentId>> owner(inst.topology.vertex_count);
    for (AgentId a = 0; a < assignment.size(); ++a) {
        const std::string& name = a < inst.agent_names.size() ? inst.agent_names[a] : std::to_string(a);
        const VertexId v = assignment[a];
        if (v >= inst.topology.vertex_count) {
            out.push_back({"$." + name, "vertex " + std::to_string(v) + " out of range"});
            continue;
        }
        if (owner[v])
            out.push_back({"$." + name, "duplicate vertex " + std::to_string(v) + " (also used by " +
                                            inst.agent_names[*owner[v]] + ")"});
        else
            owner[v] = a;
    }
    return out;
}

/// u_agent(assignment) = sum over j != agent of u[agent][j] * f(dist(assignment(agent), assignment(j))).
inline Rational agent_utility(const Instance& inst, const Assignment& assignment, AgentId agent,
                              const DistanceMatrix& dist) {
    Rational total;
    for (AgentId j = 0; j < inst.agent_count(); ++j) {
        if (j == agent || inst.utility(agent, j).is_zero()) continue;
        const Distance d = dist.at(assignment[agent], assignment[j]);
        if (!d.reachable()) continue;
        total += inst.utility(agent, j) * inst.dff(d);
    }
    return total;
}

struct IrReport {
    bool individually_rational = true;
    std::vector<Rational> utilities;  // indexed by agent
};

/// Throws ValidationError for a non-injective, partial or out-of-range assignment.
inline IrReport is_individually_rational(const Instance& inst, const Assignment& assignment) {
    if (auto v = assignment_violations(inst, assignment); !v.empty()) throw ValidationError(std::move(v));
    const auto dist = shortest_distances(inst.topology);
    IrReport report;
    report.utilities.reserve(inst.agent_count());
    for (AgentId a = 0; a < inst.agent_count(); ++a) {
        report.utilities.push_back(agent_utility(inst, assignment, a, dist));
        if (report.utilities.back().is_negative()) report.individually_rational = false;
    }
    return report;
}

enum class EnmityClass { NoArcs, SingleSource, SingleSink, General };

inline std::string_view to_string(EnmityClass c) {
    switch (c) {
        case EnmityClass::NoArcs: return "no-arcs";
        case EnmityClass::SingleSource: return "single-source";
        case EnmityClass::SingleSink: return "single-sink";
        case EnmityClass::General: return "general";
    }
    return "general";
}

struct Arc {
    AgentId from = 0;
    AgentId to = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Directed enmity graph: arc i -> j iff u[i][j] < 0.
struct EnmityStructure {
    std::vector<Arc> arcs;  // row-major order
    EnmityClass classification = EnmityClass::NoArcs;
    std::optional<AgentId> center;  // the source or sink agent

    std::size_t arc_count() const noexcept { return arcs.size(); }

    bool all_leave(AgentId p) const {
        return std::all_of(arcs.begin(), arcs.end(), [p](const Arc& a) { return a.from == p; });
    }
    bool all_enter(AgentId p) const {
        return std::all_of(arcs.begin(), arcs.end(), [p](const Arc& a) { return a.to == p; });
    }
};

/// Classification priority: NoArcs, then SingleSource, then SingleSink.
inline EnmityStructure enmity_structure(const Instance& inst) {
    EnmityStructure s;
    for (AgentId i = 0; i < inst.agent_count(); ++i)
        for (AgentId j = 0; j < inst.agent_count(); ++j)
            if (i != j && inst.utility(i, j).is_negative()) s.arcs.push_back({i, j});
    if (s.arcs.empty()) return s;
    if (s.all_leave(s.arcs.front().from)) {
        s.classification = EnmityClass::SingleSource;
        s.center = s.arcs.front().from;
    } else if (s.all_enter(s.arcs.front().to)) {
        s.classification = EnmityClass::SingleSink;
        s.center = s.arcs.front().to;
    } else {
        s.classification = EnmityClass::General;
    }
    return s;
}

}  // namespace tdg
