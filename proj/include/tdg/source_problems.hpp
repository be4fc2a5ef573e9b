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
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tdg/errors.hpp"
#include "tdg/topology.hpp"

namespace tdg {

using Item = std::uint64_t;

/// Pack `items` into `bins` bins of exactly `capacity` each.
struct UnaryBinPacking {
    std::vector<Item> items;
    std::uint64_t bins = 0;
    std::uint64_t capacity = 0;
};

/// Split 2n items into two halves of n items with equal sums.
struct EquitablePartition {
    std::vector<Item> items;
};

/// Group 3n items into n triples each summing to `target`.
struct ThreePartition {
    std::vector<Item> items;
    std::uint64_t target = 0;
};

struct IndependentSet {
    Topology graph;
    std::size_t k = 0;
};

struct Clique {
    Topology graph;
    std::size_t k = 0;
};

using SourceProblem = std::variant<UnaryBinPacking, EquitablePartition, ThreePartition, IndependentSet, Clique>;

inline std::string_view family_name(const SourceProblem& src) {
    constexpr std::string_view names[] = {"unary-bin-packing", "equitable-partition", "three-partition",
                                          "independent-set", "clique"};
    return names[src.index()];
}

/// bin_of_item[i] is the bin (0-based) of item i.
struct BinAllocation {
    std::vector<std::size_t> bin_of_item;
    bool operator==(const BinAllocation&) const = default;
};

/// Item indices (0-based, ascending) of one half of the partition.
struct IndexSubset {
    std::vector<std::size_t> indices;
    bool operator==(const IndexSubset&) const = default;
};

/// group_of_item[i] is the triple (0-based) containing item i.
struct TripleGrouping {
    std::vector<std::size_t> group_of_item;
    bool operator==(const TripleGrouping&) const = default;
};

/// Vertices (ascending) of an independent set or clique.
struct VertexSubset {
    std::vector<VertexId> vertices;
    bool operator==(const VertexSubset&) const = default;
};

using SourceCertificate = std::variant<BinAllocation, IndexSubset, TripleGrouping, VertexSubset>;

struct SourceDecision {
    bool yes = false;
    std::optional<SourceCertificate> certificate;  // present iff yes
};

inline std::uint64_t item_sum(const std::vector<Item>& items) {
    return std::accumulate(items.begin(), items.end(), std::uint64_t{0});
}

/// Checks a certificate against its source problem; returns a reason on failure.
inline std::optional<std::string> certificate_defect(const SourceProblem& src, const SourceCertificate& cert) {
    return std::visit(
        [&](const auto& p) -> std::optional<std::string> {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, UnaryBinPacking>) {
                const auto* a = std::get_if<BinAllocation>(&cert);
                if (!a) return "expected a bin allocation";
                if (a->bin_of_item.size() != p.items.size()) return "allocation must cover every item";
                std::vector<std::uint64_t> load(p.bins, 0);
                for (std::size_t i = 0; i < p.items.size(); ++i) {
                    if (a->bin_of_item[i] >= p.bins) return "bin index out of range";
                    load[a->bin_of_item[i]] += p.items[i];
                }
                for (auto l : load)
                    if (l != p.capacity) return "bin load differs from capacity";
                return std::nullopt;
            } else if constexpr (std::is_same_v<P, EquitablePartition>) {
                const auto* s = std::get_if<IndexSubset>(&cert);
                if (!s) return "expected an index subset";
                const std::size_t n = p.items.size() / 2;
                if (s->indices.size() != n) return "subset must contain exactly half of the items";
                if (!std::is_sorted(s->indices.begin(), s->indices.end()) ||
                    std::adjacent_find(s->indices.begin(), s->indices.end()) != s->indices.end())
                    return "subset indices must be strictly increasing";
                std::uint64_t sum = 0;
                for (auto i : s->indices) {
                    if (i >= p.items.size()) return "item index out of range";
                    sum += p.items[i];
                }
                if (2 * sum != item_sum(p.items)) return "subset sum differs from half the total";
                return std::nullopt;
            } else if constexpr (std::is_same_v<P, ThreePartition>) {
                const auto* g = std::get_if<TripleGrouping>(&cert);
                if (!g) return "expected a triple grouping";
                const std::size_t groups = p.items.size() / 3;
                if (g->group_of_item.size() != p.items.size()) return "grouping must cover every item";
                std::vector<std::uint64_t> sum(groups, 0), count(groups, 0);
                for (std::size_t i = 0; i < p.items.size(); ++i) {
                    if (g->group_of_item[i] >= groups) return "group index out of range";
                    sum[g->group_of_item[i]] += p.items[i];
                    ++count[g->group_of_item[i]];
                }
                for (std::size_t t = 0; t < groups; ++t)
                    if (count[t] != 3 || sum[t] != p.target) return "group is not a triple summing to the target";
                return std::nullopt;
            } else {
                const auto* s = std::get_if<VertexSubset>(&cert);
                if (!s) return "expected a vertex subset";
                if (s->vertices.size() != p.k) return "vertex subset must have exactly k vertices";
                for (std::size_t i = 0; i < s->vertices.size(); ++i) {
                    if (s->vertices[i] >= p.graph.vertex_count) return "vertex out of range";
                    if (i > 0 && s->vertices[i] <= s->vertices[i - 1])
                        return "vertices must be strictly increasing";
                }
                constexpr bool want_edges = std::is_same_v<P, Clique>;
                for (std::size_t i = 0; i < s->vertices.size(); ++i)
                    for (std::size_t j = i + 1; j < s->vertices.size(); ++j)
                        if (p.graph.has_edge(s->vertices[i], s->vertices[j]) != want_edges)
                            return want_edges ? "vertices are not pairwise adjacent"
                                              : "vertices are not pairwise non-adjacent";
                return std::nullopt;
            }
        },
        src);
}

namespace detail {

class StepBudget {
   public:
    explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
    void tick() {
        if (++used_ > limit_) throw OracleBudgetError("source oracle exceeded its budget of " +
                                                      std::to_string(limit_) + " steps");
    }

   private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Visits k-subsets of {0..n-1} in lexicographic order until `fn` returns true.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, StepBudget& budget, Fn&& fn) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        budget.tick();
        if (fn(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool pack_bins(const UnaryBinPacking& p, const std::vector<std::size_t>& order, std::size_t pos,
                      std::vector<std::uint64_t>& load, std::vector<std::size_t>& bin_of, StepBudget& budget) {
    if (pos == order.size()) return std::all_of(load.begin(), load.end(), [&](auto l) { return l == p.capacity; });
    const std::size_t item = order[pos];
    for (std::size_t b = 0; b < load.size(); ++b) {
        budget.tick();
        if (load[b] + p.items[item] > p.capacity) continue;
        // Empty bins are interchangeable; trying the first one suffices.
        if (load[b] == 0 && b > 0 && load[b - 1] == 0) break;
        load[b] += p.items[item];
        bin_of[item] = b;
        if (pack_bins(p, order, pos + 1, load, bin_of, budget)) return true;
        load[b] -= p.items[item];
    }
    return false;
}

inline bool group_triples(const ThreePartition& p, std::vector<std::size_t>& group_of, std::size_t next_group,
                          StepBudget& budget) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    const auto first = std::find(group_of.begin(), group_of.end(), none);
    if (first == group_of.end()) return true;
    const std::size_t a = static_cast<std::size_t>(first - group_of.begin());
    group_of[a] = next_group;
    for (std::size_t b = a + 1; b < group_of.size(); ++b) {
        if (group_of[b] != none) continue;
        for (std::size_t c = b + 1; c < group_of.size(); ++c) {
            budget.tick();
            if (group_of[c] != none || p.items[a] + p.items[b] + p.items[c] != p.target) continue;
            group_of[b] = group_of[c] = next_group;
            if (group_triples(p, group_of, next_group + 1, budget)) return true;
            group_of[b] = group_of[c] = none;
        }
    }
    group_of[a] = none;
    return false;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Exact answer to a source problem by exhaustive search, with a certificate
/// on yes. Throws OracleBudgetError once `budget` search steps are used.
inline SourceDecision decide_source(const SourceProblem& src, std::uint64_t budget = kDefaultOracleBudget) {
    detail::StepBudget steps(budget);
    return std::visit(
        [&](const auto& p) -> SourceDecision {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, UnaryBinPacking>) {
                if (item_sum(p.items) != p.bins * p.capacity) return {};
                std::vector<std::size_t> order(p.items.size());
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::stable_sort(order.begin(), order.end(),
                                 [&](auto a, auto b) { return p.items[a] > p.items[b]; });
                std::vector<std::uint64_t> load(p.bins, 0);
                std::vector<std::size_t> bin_of(p.items.size(), 0);
                if (!detail::pack_bins(p, order, 0, load, bin_of, steps)) return {};
                return {true, BinAllocation{bin_of}};
            } else if constexpr (std::is_same_v<P, EquitablePartition>) {
                const std::uint64_t total = item_sum(p.items);
                if (p.items.size() % 2 != 0 || total % 2 != 0) return {};
                IndexSubset found;
                const bool yes = detail::for_each_combination(
                    p.items.size(), p.items.size() / 2, steps, [&](const std::vector<std::size_t>& idx) {
                        std::uint64_t s = 0;
                        for (auto i : idx) s += p.items[i];
                        if (2 * s != total) return false;
                        found.indices = idx;
                        return true;
                    });
                if (!yes) return {};
                return {true, found};
            } else if constexpr (std::is_same_v<P, ThreePartition>) {
                if (p.items.size() % 3 != 0 || item_sum(p.items) != p.target * (p.items.size() / 3)) return {};
                std::vector<std::size_t> group_of(p.items.size(), static_cast<std::size_t>(-1));
                if (!detail::group_triples(p, group_of, 0, steps)) return {};
                return {true, TripleGrouping{group_of}};
            } else {
                constexpr bool want_edges = std::is_same_v<P, Clique>;
                VertexSubset found;
                const bool yes = detail::for_each_combination(
                    p.graph.vertex_count, p.k, steps, [&](const std::vector<std::size_t>& idx) {
                        for (std::size_t i = 0; i < idx.size(); ++i)
                            for (std::size_t j = i + 1; j < idx.size(); ++j)
                                if (p.graph.has_edge(idx[i], idx[j]) != want_edges) return false;
                        found.vertices = idx;
                        return true;
                    });
                if (!yes) return {};
                return {true, found};
            }
        },
        src);
}

}  // namespace tdg
