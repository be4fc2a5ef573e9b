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

// Reference implementation used as a test oracle. It shares only the data
// types with the library: distances come from Floyd-Warshall, utilities are
// summed in raw mpq_class, and every injective assignment is enumerated with
// no pruning or symmetry reduction.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "tdg/instance.hpp"

namespace tdg::testing {

inline constexpr std::uint32_t kNoPath = 0xffffffffu;

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Topology& t) {
    const std::size_t n = t.vertex_count;
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kNoPath));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& e : t.edges) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] != kNoPath && d[k][j] != kNoPath && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline mpq_class naive_factor(const DistanceFactorFunction& dff, std::uint32_t d) {
    if (d == kNoPath) return 0;
    const auto& v = dff.variant();
    if (std::holds_alternative<ReciprocalFactor>(v)) return mpq_class(1, d);
    if (const auto* e = std::get_if<ExponentialFactor>(&v)) {
        mpq_class out = 1;
        for (std::uint32_t i = 0; i < d; ++i) out *= e->base.raw();
        return out;
    }
    if (const auto* t = std::get_if<TableFactor>(&v)) return t->values.at(d - 1).raw();
    const auto& b = std::get<BoundedFactor>(v);
    return d > b.cutoff ? mpq_class(0) : b.values.at(d - 1).raw();
}

inline std::vector<mpq_class> naive_utilities(const Instance& inst, const std::vector<VertexId>& placement) {
    const auto d = floyd_warshall(inst.topology);
    std::vector<mpq_class> out(inst.agent_count(), 0);
    for (std::size_t i = 0; i < inst.agent_count(); ++i)
        for (std::size_t j = 0; j < inst.agent_count(); ++j)
            if (i != j) out[i] += inst.utilities[i][j].raw() * naive_factor(inst.dff, d[placement[i]][placement[j]]);
    return out;
}

/// First IR assignment in lexicographic order of placements, if any.
inline std::optional<std::vector<VertexId>> naive_solve(const Instance& inst) {
    const std::size_t m = inst.agent_count(), n = inst.topology.vertex_count;
    const auto d = floyd_warshall(inst.topology);
    std::vector<std::vector<mpq_class>> f(n, std::vector<mpq_class>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) f[a][b] = a == b ? mpq_class(0) : naive_factor(inst.dff, d[a][b]);

    std::vector<VertexId> placement(m);
    std::vector<bool> used(n, false);
    std::optional<std::vector<VertexId>> found;
    auto rec = [&](auto&& self, std::size_t agent) -> bool {
        if (agent == m) {
            for (std::size_t i = 0; i < m; ++i) {
                mpq_class u = 0;
                for (std::size_t j = 0; j < m; ++j)
                    if (i != j) u += inst.utilities[i][j].raw() * f[placement[i]][placement[j]];
                if (u < 0) return false;
            }
            found = placement;
            return true;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            placement[agent] = v;
            if (self(self, agent + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

}  // namespace tdg::testing
