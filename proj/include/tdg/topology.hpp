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
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tdg/errors.hpp"

namespace tdg {

using VertexId = std::size_t;
using AgentId = std::size_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are kept in insertion order so documents round-trip unchanged;
/// `violations()` reports self-loops, duplicates and out-of-range endpoints.
struct Topology {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;

    Topology() = default;
    explicit Topology(std::size_t n, std::vector<Edge> e = {}) : vertex_count(n), edges(std::move(e)) {}

    Topology& add_edge(VertexId u, VertexId v) {
        edges.push_back({u, v});
        return *this;
    }

    std::vector<Violation> violations() const {
        std::vector<Violation> out;
        std::set<std::pair<VertexId, VertexId>> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto [u, v] = edges[i];
            const std::string where = "$.edges[" + std::to_string(i) + "]";
            if (u >= vertex_count || v >= vertex_count) {
                out.push_back({where, "edge endpoint out of range"});
                continue;
            }
            if (u == v) {
                out.push_back({where, "self-loop"});
                continue;
            }
            if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
                out.push_back({where, "duplicate edge"});
        }
        return out;
    }

    /// Sorted neighbour lists. Requires a valid topology.
    std::vector<std::vector<VertexId>> adjacency() const {
        std::vector<std::vector<VertexId>> adj(vertex_count);
        for (const auto& [u, v] : edges) {
            assert(u < vertex_count && v < vertex_count);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& list : adj) std::sort(list.begin(), list.end());
        return adj;
    }

    bool has_edge(VertexId a, VertexId b) const {
        return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return (e.u == a && e.v == b) || (e.u == b && e.v == a);
        });
    }

    bool operator==(const Topology&) const = default;
};

inline Topology path_graph(std::size_t n) {
    Topology t(n);
    for (std::size_t i = 0; i + 1 < n; ++i) t.add_edge(i, i + 1);
    return t;
}

inline Topology complete_graph(std::size_t n) {
    Topology t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) t.add_edge(i, j);
    return t;
}

/// Vertex ids of `b` are shifted past those of `a`.
inline Topology disjoint_union(const Topology& a, const Topology& b) {
    Topology t(a.vertex_count + b.vertex_count, a.edges);
    for (const auto& [u, v] : b.edges) t.add_edge(u + a.vertex_count, v + a.vertex_count);
    return t;
}

/// Graph distance: a non-negative hop count or the distinct unreachable value.
class Distance {
   public:
    constexpr Distance() = default;
    static constexpr Distance finite(std::uint32_t hops) { return Distance(hops); }
    static constexpr Distance unreachable() { return Distance(kUnreachable); }

    constexpr bool reachable() const { return hops_ != kUnreachable; }
    constexpr std::uint32_t hops() const {
        assert(reachable());
        return hops_;
    }

    // Unreachable orders after every finite distance.
    constexpr auto operator<=>(const Distance&) const = default;

    std::string to_string() const { return reachable() ? std::to_string(hops_) : "unreachable"; }

   private:
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
    constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}
    std::uint32_t hops_ = 0;
};

class DistanceMatrix {
   public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, Distance::unreachable()) {
        for (std::size_t v = 0; v < n; ++v) set(v, v, Distance::finite(0));
    }

    std::size_t size() const noexcept { return n_; }
    Distance at(VertexId u, VertexId v) const {
        assert(u < n_ && v < n_);
        return dist_[u * n_ + v];
    }
    void set(VertexId u, VertexId v, Distance d) { dist_[u * n_ + v] = d; }

    bool operator==(const DistanceMatrix&) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<Distance> dist_;
};

/// All-pairs unweighted distances, one breadth-first search per source.
inline DistanceMatrix shortest_distances(const Topology& topology) {
    const auto adj = topology.adjacency();
    const std::size_t n = topology.vertex_count;
    DistanceMatrix dm(n);
    std::vector<std::uint32_t> level(n);
    std::vector<bool> seen(n);
    std::queue<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        seen[s] = true;
        level[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            dm.set(s, u, Distance::finite(level[u]));
            for (VertexId w : adj[u]) {
                if (seen[w]) continue;
                seen[w] = true;
                level[w] = level[u] + 1;
                queue.push(w);
            }
        }
    }
    return dm;
}

struct Component {
    std::vector<VertexId> vertices;  // ascending
    std::uint32_t diameter = 0;
};

/// Connected components ordered by smallest vertex id.
inline std::vector<Component> connected_components(const Topology& topology, const DistanceMatrix& dist) {
    const std::size_t n = topology.vertex_count;
    std::vector<bool> assigned(n, false);
    std::vector<Component> out;
    for (VertexId s = 0; s < n; ++s) {
        if (assigned[s]) continue;
        Component c;
        for (VertexId v = s; v < n; ++v) {
            if (dist.at(s, v).reachable()) {
                assigned[v] = true;
                c.vertices.push_back(v);
            }
        }
        for (VertexId a : c.vertices)
            for (VertexId b : c.vertices) c.diameter = std::max(c.diameter, dist.at(a, b).hops());
        out.push_back(std::move(c));
    }
    return out;
}

/// Largest finite distance over all vertex pairs (0 for edgeless graphs).
inline std::uint32_t max_finite_distance(const DistanceMatrix& dist) {
    std::uint32_t best = 0;
    for (VertexId u = 0; u < dist.size(); ++u)
        for (VertexId v = 0; v < dist.size(); ++v)
            if (dist.at(u, v).reachable()) best = std::max(best, dist.at(u, v).hops());
    return best;
}

/// Vertices in path order starting from the lower-id endpoint, or nullopt if
/// the topology is not a path. A single vertex is a path; the empty graph is not.
inline std::optional<std::vector<VertexId>> path_order(const Topology& topology) {
    const std::size_t n = topology.vertex_count;
    if (n == 0 || !topology.violations().empty()) return std::nullopt;
    if (n == 1) return topology.edges.empty() ? std::optional(std::vector<VertexId>{0}) : std::nullopt;
    if (topology.edges.size() != n - 1) return std::nullopt;
    const auto adj = topology.adjacency();
    std::optional<VertexId> start;
    for (VertexId v = 0; v < n; ++v) {
        if (adj[v].empty() || adj[v].size() > 2) return std::nullopt;
        if (adj[v].size() == 1 && !start) start = v;
    }
    if (!start) return std::nullopt;
    std::vector<VertexId> order{*start};
    std::vector<bool> seen(n, false);
    seen[*start] = true;
    while (order.size() < n) {
        const VertexId cur = order.back();
        auto next = std::find_if(adj[cur].begin(), adj[cur].end(), [&](VertexId w) { return !seen[w]; });
        if (next == adj[cur].end()) return std::nullopt;  // disconnected: a path plus cycles
        seen[*next] = true;
        order.push_back(*next);
    }
    return order;
}

inline bool is_path(const Topology& topology) { return path_order(topology).has_value(); }

}  // namespace tdg
