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

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "tdg/instance.hpp"

namespace tdg::detail {

/// Pairwise utility contributions u[i][j] * f(d), precomputed per distance
/// class and scaled row by row to integers.
///
/// Row i is multiplied by the positive lcm of its denominators, which keeps
/// the sign of every partial sum of row i. Distance classes are the finite
/// hop counts 0..max plus one trailing class for "unreachable".
template <class Int>
struct WeightTable {
    std::size_t agents = 0;
    std::size_t vertices = 0;
    std::size_t classes = 0;
    std::vector<std::uint32_t> pair_class;  // vertices * vertices
    std::vector<Int> weight;                // agents * agents * classes
    std::vector<Int> optimistic;            // agents * agents: max(u, 0) * max f

    std::uint32_t cls(VertexId a, VertexId b) const { return pair_class[a * vertices + b]; }
    const Int& w(AgentId i, AgentId j, std::uint32_t c) const { return weight[(i * agents + j) * classes + c]; }
    const Int& opt(AgentId i, AgentId j) const { return optimistic[i * agents + j]; }

    Int utility(AgentId i, const std::vector<VertexId>& placement) const {
        Int total = 0;
        for (AgentId j = 0; j < agents; ++j)
            if (j != i) total += w(i, j, cls(placement[i], placement[j]));
        return total;
    }

    bool all_nonnegative(const std::vector<VertexId>& placement) const {
        for (AgentId i = 0; i < agents; ++i)
            if (utility(i, placement) < 0) return false;
        return true;
    }
};

struct ExactWeights {
    std::size_t agents = 0;
    std::size_t vertices = 0;
    std::size_t classes = 0;
    std::vector<std::uint32_t> pair_class;
    std::vector<mpz_class> weight;
    std::vector<mpz_class> optimistic;
    bool fits_int64 = true;
};

inline ExactWeights scale_weights(const Instance& inst, const DistanceMatrix& dist) {
    ExactWeights ew;
    const std::size_t m = inst.agent_count();
    const std::size_t n = inst.topology.vertex_count;
    const std::uint32_t max_hops = max_finite_distance(dist);
    ew.agents = m;
    ew.vertices = n;
    ew.classes = static_cast<std::size_t>(max_hops) + 2;
    const std::uint32_t unreachable_class = max_hops + 1;

    ew.pair_class.resize(n * n);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b) {
            const Distance d = dist.at(a, b);
            ew.pair_class[a * n + b] = d.reachable() ? d.hops() : unreachable_class;
        }

    // Only distances that occur between distinct vertices are evaluated, so a
    // table covering the diameter is always sufficient.
    std::vector<Rational> factor(ew.classes, Rational(0));
    for (std::uint32_t c = 1; c <= max_hops; ++c) factor[c] = inst.dff.at(c);
    const Rational f_max = inst.dff.maximum();

    ew.weight.assign(m * m * ew.classes, mpz_class(0));
    ew.optimistic.assign(m * m, mpz_class(0));
    std::vector<Rational> row_weight(m * ew.classes);
    std::vector<Rational> row_opt(m);
    const mpz_class limit = mpz_class(1) << 62;

    for (AgentId i = 0; i < m; ++i) {
        mpz_class scale = 1;
        for (AgentId j = 0; j < m; ++j) {
            const Rational& u = inst.utility(i, j);
            for (std::size_t c = 0; c < ew.classes; ++c) {
                row_weight[j * ew.classes + c] = j == i ? Rational(0) : u * factor[c];
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                        row_weight[j * ew.classes + c].denominator().get_mpz_t());
            }
            row_opt[j] = (j != i && u.is_positive()) ? u * f_max : Rational(0);
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), row_opt[j].denominator().get_mpz_t());
        }
        mpz_class magnitude = 0;
        for (AgentId j = 0; j < m; ++j) {
            mpz_class largest = 0;
            for (std::size_t c = 0; c < ew.classes; ++c) {
                const Rational& r = row_weight[j * ew.classes + c];
                mpz_class& slot = ew.weight[(i * m + j) * ew.classes + c];
                slot = r.numerator() * (scale / r.denominator());
                if (abs(slot) > largest) largest = abs(slot);
            }
            mpz_class& o = ew.optimistic[i * m + j];
            o = row_opt[j].numerator() * (scale / row_opt[j].denominator());
            if (o > largest) largest = o;
            magnitude += largest;
        }
        // Partial sums, optimistic remainders and their sum all stay below 2^63.
        if (magnitude >= limit) ew.fits_int64 = false;
    }
    return ew;
}

template <class Int>
WeightTable<Int> narrow(const ExactWeights& ew) {
    WeightTable<Int> t;
    t.agents = ew.agents;
    t.vertices = ew.vertices;
    t.classes = ew.classes;
    t.pair_class = ew.pair_class;
    t.weight.reserve(ew.weight.size());
    t.optimistic.reserve(ew.optimistic.size());
    for (const auto& x : ew.weight) {
        if constexpr (std::is_same_v<Int, std::int64_t>) t.weight.push_back(x.get_si());
        else t.weight.push_back(x);
    }
    for (const auto& x : ew.optimistic) {
        if constexpr (std::is_same_v<Int, std::int64_t>) t.optimistic.push_back(x.get_si());
        else t.optimistic.push_back(x);
    }
    return t;
}

/// Calls `fn` with a WeightTable<std::int64_t> when every row fits, otherwise
/// with a WeightTable<mpz_class>.
template <class Fn>
decltype(auto) with_weights(const Instance& inst, const DistanceMatrix& dist, Fn&& fn) {
    const ExactWeights ew = scale_weights(inst, dist);
    if (ew.fits_int64) return fn(narrow<std::int64_t>(ew));
    return fn(narrow<mpz_class>(ew));
}

}  // namespace tdg::detail
