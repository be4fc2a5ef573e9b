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
#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tdg/detail/weights.hpp"
#include "tdg/errors.hpp"
#include "tdg/instance.hpp"

namespace tdg {

enum class Answer { Yes, No };

enum class Algorithm { NoArcs, BruteForce, SingleSource, PathInstar };

inline std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::NoArcs: return "no-arcs";
        case Algorithm::BruteForce: return "brute-force";
        case Algorithm::SingleSource: return "single-source";
        case Algorithm::PathInstar: return "path-instar";
    }
    return "brute-force";
}

/// Outcome of a solver run. `witness` is present iff the answer is yes.
struct SolveResult {
    Answer answer = Answer::No;
    std::optional<Assignment> witness;
    Algorithm algorithm = Algorithm::BruteForce;
    std::uint64_t nodes_explored = 0;

    bool yes() const noexcept { return answer == Answer::Yes; }
};

struct SolveOptions {
    /// Worker threads for the brute-force search. Results do not depend on it.
    unsigned threads = 1;
};

namespace detail {

/// prev[j] is the nearest i < j such that swapping agents i and j maps the
/// utility matrix onto itself. Such agents are interchangeable in every
/// assignment, so the search only keeps placements with increasing vertex ids
/// inside each class. Swap-invariance is an equivalence relation (the
/// transpositions generate a group), so chaining to the nearest predecessor
/// covers the whole class.
inline std::vector<std::optional<AgentId>> interchangeable_predecessors(const Instance& inst) {
    const std::size_t m = inst.agent_count();
    auto swap_invariant = [&](AgentId a, AgentId b) {
        auto sigma = [a, b](AgentId x) { return x == a ? b : x == b ? a : x; };
        for (AgentId x = 0; x < m; ++x)
            for (AgentId y = 0; y < m; ++y)
                if (inst.utility(sigma(x), sigma(y)) != inst.utility(x, y)) return false;
        return true;
    };
    std::vector<std::optional<AgentId>> prev(m);
    for (AgentId j = 1; j < m; ++j)
        for (AgentId i = j; i-- > 0;)
            if (swap_invariant(i, j)) {
                prev[j] = i;
                break;
            }
    return prev;
}

/// Depth-first branch and bound over injective placements, agents in index
/// order and vertices in id order. Prunes as soon as a placed agent's partial
/// utility plus the best case of its unplaced friends (all at distance 1) is
/// negative; unplaced enemies can only lower it.
template <class Int>
class BranchAndBound {
   public:
    struct BranchResult {
        bool found = false;
        bool aborted = false;
        std::vector<VertexId> witness;
        std::uint64_t nodes = 0;
    };

    BranchAndBound(const WeightTable<Int>& table, std::vector<std::optional<AgentId>> prev)
        : t_(table), prev_(std::move(prev)) {}

    /// Explores every placement with agent 0 on `root`. Gives up early once
    /// `best` names a lower branch index that already succeeded.
    BranchResult explore(VertexId root, std::size_t branch, const std::atomic<std::size_t>& best) const {
        State s(t_);
        BranchResult result;
        s.place(0, root);
        ++result.nodes;
        bool ok = s.feasible(0);
        if (ok && t_.agents == 1) {
            result.found = true;
            result.witness = s.placement;
            return result;
        }
        if (ok) {
            Search search{t_, prev_, s, result, best, branch};
            result.found = search.dfs(1);
            if (result.found) result.witness = s.placement;
        }
        return result;
    }

   private:
    struct State {
        const WeightTable<Int>& t;
        std::vector<VertexId> placement;
        std::vector<bool> used;
        std::vector<Int> partial;
        std::vector<Int> remainder;

        explicit State(const WeightTable<Int>& table)
            : t(table), placement(table.agents), used(table.vertices, false), partial(table.agents, Int(0)),
              remainder(table.agents, Int(0)) {
            for (AgentId i = 0; i < t.agents; ++i)
                for (AgentId j = 0; j < t.agents; ++j) remainder[i] += t.opt(i, j);
        }

        void place(AgentId a, VertexId v) {
            placement[a] = v;
            used[v] = true;
            for (AgentId i = 0; i < t.agents; ++i)
                if (i != a) remainder[i] -= t.opt(i, a);
            for (AgentId i = 0; i < a; ++i) {
                const auto c = t.cls(placement[i], v);
                partial[i] += t.w(i, a, c);
                partial[a] += t.w(a, i, c);
            }
        }

        void unplace(AgentId a) {
            const VertexId v = placement[a];
            for (AgentId i = 0; i < a; ++i) {
                const auto c = t.cls(placement[i], v);
                partial[i] -= t.w(i, a, c);
            }
            partial[a] = 0;
            for (AgentId i = 0; i < t.agents; ++i)
                if (i != a) remainder[i] += t.opt(i, a);
            used[v] = false;
        }

        bool feasible(AgentId last) const {
            for (AgentId i = 0; i <= last; ++i)
                if (partial[i] + remainder[i] < 0) return false;
            return true;
        }
    };

    struct Search {
        const WeightTable<Int>& t;
        const std::vector<std::optional<AgentId>>& prev;
        State& s;
        BranchResult& result;
        const std::atomic<std::size_t>& best;
        std::size_t branch;

        bool dfs(AgentId a) {
            if (best.load(std::memory_order_relaxed) < branch) {
                result.aborted = true;
                return false;
            }
            const VertexId first = prev[a] ? s.placement[*prev[a]] + 1 : 0;
            for (VertexId v = first; v < t.vertices; ++v) {
                if (s.used[v]) continue;
                ++result.nodes;
                s.place(a, v);
                if (s.feasible(a) && (a + 1 == t.agents || dfs(a + 1))) return true;
                s.unplace(a);
                if (result.aborted) return false;
            }
            return false;
        }
    };

    const WeightTable<Int>& t_;
    std::vector<std::optional<AgentId>> prev_;
};

template <class Int>
SolveResult run_branch_and_bound(const WeightTable<Int>& table, std::vector<std::optional<AgentId>> prev,
                                 unsigned threads) {
    using Engine = BranchAndBound<Int>;
    const Engine engine(table, std::move(prev));
    const std::size_t branches = table.vertices;
    std::vector<typename Engine::BranchResult> results(branches);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= branches) return;
            if (best.load() < b) continue;
            results[b] = engine.explore(b, b, best);
            if (results[b].found) {
                std::size_t cur = best.load();
                while (b < cur && !best.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(branches)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }

    // Reduce in branch order so the node count and witness match a purely
    // sequential run: every branch before the winner ran to completion.
    SolveResult out;
    out.algorithm = Algorithm::BruteForce;
    for (std::size_t b = 0; b < branches; ++b) {
        out.nodes_explored += results[b].nodes;
        if (results[b].found) {
            out.answer = Answer::Yes;
            out.witness = Assignment{results[b].witness};
            break;
        }
    }
    return out;
}

inline Assignment identity_assignment(std::size_t agents) {
    Assignment a;
    a.placement.resize(agents);
    std::iota(a.placement.begin(), a.placement.end(), VertexId{0});
    return a;
}

}  // namespace detail

/// Exhaustive search over injective assignments with pruning and symmetry
/// breaking. The witness is the lexicographically first IR assignment.
inline SolveResult solve_brute_force(const Instance& inst, const SolveOptions& options = {}) {
    require_valid(inst);
    if (inst.agent_count() == 0) return {Answer::Yes, Assignment{}, Algorithm::BruteForce, 0};
    const auto dist = shortest_distances(inst.topology);
    auto prev = detail::interchangeable_predecessors(inst);
    return detail::with_weights(inst, dist, [&](const auto& table) {
        return detail::run_branch_and_bound(table, prev, options.threads);
    });
}

/// Polynomial algorithm when every enmity arc leaves agent p.
///
/// For each vertex v hosting p: other vertices are ranked by (distance from v,
/// unreachable last, id). Agents p values non-negatively take the nearest
/// vertices in order of decreasing value; enemies take the farthest vertices,
/// most disliked first. Only p can end up negative, so only p is checked.
inline SolveResult solve_single_source(const Instance& inst, AgentId p) {
    require_valid(inst);
    const std::size_t m = inst.agent_count();
    if (p >= m) throw StructureMismatchError("agent index " + std::to_string(p) + " out of range");
    if (!enmity_structure(inst).all_leave(p))
        throw StructureMismatchError("enmity arcs do not all leave agent " + inst.agent_names[p]);

    std::vector<AgentId> friends, enemies;
    for (AgentId i = 0; i < m; ++i) {
        if (i == p) continue;
        (inst.utility(p, i).is_negative() ? enemies : friends).push_back(i);
    }
    std::stable_sort(friends.begin(), friends.end(),
                     [&](AgentId a, AgentId b) { return inst.utility(p, a) > inst.utility(p, b); });
    std::stable_sort(enemies.begin(), enemies.end(),
                     [&](AgentId a, AgentId b) { return inst.utility(p, a) < inst.utility(p, b); });

    const auto dist = shortest_distances(inst.topology);
    const std::size_t n = inst.topology.vertex_count;
    SolveResult out;
    out.algorithm = Algorithm::SingleSource;
    for (VertexId v = 0; v < n; ++v) {
        ++out.nodes_explored;
        std::vector<VertexId> ranked;
        for (VertexId u = 0; u < n; ++u)
            if (u != v) ranked.push_back(u);
        std::stable_sort(ranked.begin(), ranked.end(),
                         [&](VertexId a, VertexId b) { return dist.at(v, a) < dist.at(v, b); });

        Assignment a;
        a.placement.assign(m, 0);
        a.placement[p] = v;
        for (std::size_t k = 0; k < friends.size(); ++k) a.placement[friends[k]] = ranked[k];
        for (std::size_t k = 0; k < enemies.size(); ++k) a.placement[enemies[k]] = ranked[ranked.size() - 1 - k];

        if (!agent_utility(inst, a, p, dist).is_negative()) {
            out.answer = Answer::Yes;
            out.witness = std::move(a);
            return out;
        }
    }
    return out;
}

/// FPT algorithm for path topologies whose enmity arcs all enter agent p:
/// p sits on the last vertex of the path (walked from its lower-id endpoint)
/// and every ordering of the other agents fills the path from the front.
inline SolveResult solve_path_instar(const Instance& inst, AgentId p) {
    require_valid(inst);
    const std::size_t m = inst.agent_count();
    if (p >= m) throw StructureMismatchError("agent index " + std::to_string(p) + " out of range");
    const auto order = path_order(inst.topology);
    if (!order) throw NotAPathError("topology is not a path");
    if (!enmity_structure(inst).all_enter(p))
        throw StructureMismatchError("enmity arcs do not all enter agent " + inst.agent_names[p]);

    std::vector<AgentId> others;
    for (AgentId i = 0; i < m; ++i)
        if (i != p) others.push_back(i);

    const auto dist = shortest_distances(inst.topology);
    return detail::with_weights(inst, dist, [&](const auto& table) {
        SolveResult out;
        out.algorithm = Algorithm::PathInstar;
        std::vector<VertexId> placement(m);
        placement[p] = order->back();
        do {
            ++out.nodes_explored;
            for (std::size_t k = 0; k < others.size(); ++k) placement[others[k]] = (*order)[k];
            if (table.all_nonnegative(placement)) {
                out.answer = Answer::Yes;
                out.witness = Assignment{placement};
                return out;
            }
        } while (std::next_permutation(others.begin(), others.end()));
        return out;
    });
}

/// Dispatches to the cheapest applicable algorithm.
inline SolveResult solve_auto(const Instance& inst, const SolveOptions& options = {}) {
    require_valid(inst);
    const auto es = enmity_structure(inst);
    switch (es.classification) {
        case EnmityClass::NoArcs:
            return {Answer::Yes, detail::identity_assignment(inst.agent_count()), Algorithm::NoArcs, 0};
        case EnmityClass::SingleSource:
            return solve_single_source(inst, *es.center);
        case EnmityClass::SingleSink:
            if (is_path(inst.topology)) return solve_path_instar(inst, *es.center);
            break;
        case EnmityClass::General:
            break;
    }
    return solve_brute_force(inst, options);
}

/// Outcome of checking a proposed assignment. Never throws.
struct WitnessReport {
    std::vector<Violation> problems;  // instance or assignment defects
    std::vector<Rational> utilities;  // empty when problems prevent evaluation
    bool individually_rational = false;

    bool accepted() const noexcept { return problems.empty() && individually_rational; }
};

inline WitnessReport verify_witness(const Instance& inst, const Assignment& assignment) {
    WitnessReport report;
    report.problems = validate_instance(inst);
    const auto bad = assignment_violations(inst, assignment);
    report.problems.insert(report.problems.end(), bad.begin(), bad.end());
    if (!report.problems.empty()) return report;
    try {
        auto ir = is_individually_rational(inst, assignment);
        report.utilities = std::move(ir.utilities);
        report.individually_rational = ir.individually_rational;
    } catch (const Error& e) {
        report.problems.push_back({"$", e.what()});
    }
    return report;
}

}  // namespace tdg
