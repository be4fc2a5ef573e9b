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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tdg/errors.hpp"
#include "tdg/instance.hpp"
#include "tdg/reductions.hpp"
#include "tdg/source_problems.hpp"

namespace tdg::io {

using Json = nlohmann::json;

namespace detail {

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing key \"" + key + "\"");
    return *it;
}

inline std::uint64_t unsigned_at(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ParseError(where + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
}

inline Rational rational_at(const Json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_unsigned()) return Rational(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    throw ParseError(where + ": expected a rational string or an integer");
}

inline std::vector<Rational> rationals_at(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline Topology topology_at(const Json& doc, const std::string& where) {
    Topology t(unsigned_at(field(doc, "vertices", where), where + ".vertices"));
    const Json& edges = field(doc, "edges", where);
    if (!edges.is_array()) throw ParseError(where + ".edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string at = where + ".edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) throw ParseError(at + ": expected a pair [u, v]");
        t.edges.push_back({unsigned_at(edges[i][0], at + "[0]"), unsigned_at(edges[i][1], at + "[1]")});
    }
    return t;
}

inline Json topology_json(const Topology& t) {
    Json edges = Json::array();
    for (const auto& e : t.edges) edges.push_back({e.u, e.v});
    return {{"vertices", t.vertex_count}, {"edges", edges}};
}

inline DistanceFactorFunction dff_at(const Json& doc) {
    const std::string where = "$.dff";
    const Json& kind = field(doc, "kind", where);
    if (!kind.is_string()) throw ParseError(where + ".kind: expected a string");
    const auto k = kind.get<std::string>();
    if (k == "reciprocal") return DistanceFactorFunction::reciprocal();
    if (k == "table") return DistanceFactorFunction::table(rationals_at(field(doc, "values", where), where + ".values"));
    if (k == "exponential") return DistanceFactorFunction::exponential(rational_at(field(doc, "base", where), where + ".base"));
    if (k == "bounded")
        return DistanceFactorFunction::bounded(rationals_at(field(doc, "values", where), where + ".values"),
                                               unsigned_at(field(doc, "cutoff", where), where + ".cutoff"));
    throw ParseError(where + ".kind: unknown distance factor kind \"" + k + "\"");
}

inline Json rationals_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& r : values) out.push_back(r.to_string());
    return out;
}

inline Json dff_json(const DistanceFactorFunction& dff) {
    Json out = {{"kind", dff.kind()}};
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, TableFactor>) {
                out["values"] = rationals_json(f.values);
            } else if constexpr (std::is_same_v<T, ExponentialFactor>) {
                out["base"] = f.base.to_string();
            } else if constexpr (std::is_same_v<T, BoundedFactor>) {
                out["values"] = rationals_json(f.values);
                out["cutoff"] = f.cutoff;
            }
        },
        dff.variant());
    return out;
}

inline std::vector<Item> items_at(const Json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Item> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(unsigned_at(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace detail

/// Instance from a JSON value; an {"instance": ...} envelope is unwrapped.
/// Shape errors throw ParseError, invariant violations ValidationError.
inline Instance instance_from_json(const Json& input) {
    const Json& doc = input.is_object() && input.contains("instance") ? input["instance"] : input;
    Instance inst;
    inst.topology = detail::topology_at(doc, "$");

    const Json& agents = detail::field(doc, "agents", "$");
    if (!agents.is_array()) throw ParseError("$.agents: expected an array");
    for (std::size_t i = 0; i < agents.size(); ++i) {
        if (!agents[i].is_string()) throw ParseError("$.agents[" + std::to_string(i) + "]: expected a string");
        inst.agent_names.push_back(agents[i].get<std::string>());
    }

    const Json& rows = detail::field(doc, "utilities", "$");
    if (!rows.is_array()) throw ParseError("$.utilities: expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i)
        inst.utilities.push_back(detail::rationals_at(rows[i], "$.utilities[" + std::to_string(i) + "]"));

    inst.dff = doc.contains("dff") ? detail::dff_at(doc["dff"]) : DistanceFactorFunction::reciprocal();
    require_valid(inst);
    return inst;
}

inline Instance parse_instance(std::string_view text) { return instance_from_json(detail::parse_json(text)); }

inline Json instance_to_json(const Instance& inst) {
    Json rows = Json::array();
    for (const auto& row : inst.utilities) rows.push_back(detail::rationals_json(row));
    Json out = detail::topology_json(inst.topology);
    out["agents"] = inst.agent_names;
    out["utilities"] = rows;
    out["dff"] = detail::dff_json(inst.dff);
    return out;
}

/// Sorted keys, rationals as canonical strings; parse_instance inverts it.
inline std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

/// Assignment from {"agent name": vertex, ...}; every agent must appear.
inline Assignment parse_assignment(std::string_view text, const Instance& inst) {
    const Json doc = detail::parse_json(text);
    if (!doc.is_object()) throw ParseError("$: assignment must be an object mapping agent names to vertices");
    std::vector<Violation> problems;
    std::vector<std::optional<VertexId>> placed(inst.agent_count());
    for (const auto& [name, value] : doc.items()) {
        const auto agent = inst.find_agent(name);
        if (!agent) {
            problems.push_back({"$." + name, "unknown agent"});
            continue;
        }
        placed[*agent] = detail::unsigned_at(value, "$." + name);
    }
    for (AgentId a = 0; a < placed.size(); ++a)
        if (!placed[a]) problems.push_back({"$." + inst.agent_names[a], "agent is not assigned"});
    if (!problems.empty()) throw ValidationError(std::move(problems));

    Assignment out;
    for (const auto& v : placed) out.placement.push_back(*v);
    if (auto v = assignment_violations(inst, out); !v.empty()) throw ValidationError(std::move(v));
    return out;
}

inline Json assignment_to_json(const Assignment& a, const Instance& inst) {
    Json out = Json::object();
    for (AgentId i = 0; i < a.size(); ++i) out[inst.agent_names[i]] = a[i];
    return out;
}

/// Source problem from {"source": {...}} or the bare inner object.
inline SourceProblem source_from_json(const Json& input) {
    const Json& doc = input.is_object() && input.contains("source") ? input["source"] : input;
    const std::string where = "$.source";
    const Json& kind_json = detail::field(doc, "kind", where);
    if (!kind_json.is_string()) throw ParseError(where + ".kind: expected a string");
    const auto kind = kind_json.get<std::string>();
    auto items = [&] { return detail::items_at(detail::field(doc, "items", where), where + ".items"); };
    auto count = [&](const char* key) {
        return detail::unsigned_at(detail::field(doc, key, where), where + "." + key);
    };
    if (kind == "unary-bin-packing") return UnaryBinPacking{items(), count("bins"), count("capacity")};
    if (kind == "equitable-partition") return EquitablePartition{items()};
    if (kind == "three-partition") return ThreePartition{items(), count("target")};
    if (kind == "independent-set" || kind == "clique") {
        Topology graph = detail::topology_at(detail::field(doc, "graph", where), where + ".graph");
        if (auto v = graph.violations(); !v.empty()) throw ValidationError(std::move(v));
        const std::size_t k = count("k");
        if (kind == "clique") return Clique{std::move(graph), k};
        return IndependentSet{std::move(graph), k};
    }
    throw ParseError(where + ".kind: unknown source problem \"" + kind + "\"");
}

inline SourceProblem parse_source(std::string_view text) { return source_from_json(detail::parse_json(text)); }

inline Json source_to_json(const SourceProblem& src) {
    Json body = std::visit(
        [](const auto& p) -> Json {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, UnaryBinPacking>)
                return {{"items", p.items}, {"bins", p.bins}, {"capacity", p.capacity}};
            else if constexpr (std::is_same_v<P, EquitablePartition>)
                return {{"items", p.items}};
            else if constexpr (std::is_same_v<P, ThreePartition>)
                return {{"items", p.items}, {"target", p.target}};
            else
                return {{"graph", detail::topology_json(p.graph)}, {"k", p.k}};
        },
        src);
    body["kind"] = family_name(src);
    return {{"source", body}};
}

inline Json generated_to_json(const GeneratedInstance& gen) {
    return {{"gadget", to_string(gen.gadget)}, {"metadata", gen.metadata}, {"instance", instance_to_json(gen.instance)}};
}

inline std::string serialize_generated(const GeneratedInstance& gen) { return generated_to_json(gen).dump(2) + "\n"; }

}  // namespace tdg::io
