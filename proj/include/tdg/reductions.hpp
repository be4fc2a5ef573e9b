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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdg/errors.hpp"
#include "tdg/instance.hpp"
#include "tdg/source_problems.hpp"

namespace tdg {

enum class Gadget {
    UnaryBinPacking,
    EquitableBipartite,
    EquitableInStar,
    EquitablePath,
    ThreePartition,
    IndependentSet,
    Clique
};

inline std::string_view to_string(Gadget g) {
    switch (g) {
        case Gadget::UnaryBinPacking: return "unary-bin-packing";
        case Gadget::EquitableBipartite: return "equitable-partition-bipartite";
        case Gadget::EquitableInStar: return "equitable-partition-instar";
        case Gadget::EquitablePath: return "equitable-partition-path";
        case Gadget::ThreePartition: return "three-partition";
        case Gadget::IndependentSet: return "independent-set";
        case Gadget::Clique: return "clique";
    }
    return "unknown";
}

enum class EquitableVariant { Bipartite, InStar, Path };

/// An IR instance produced from a source problem, plus what produced it.
struct GeneratedInstance {
    Instance instance;
    Gadget gadget = Gadget::UnaryBinPacking;
    SourceProblem source;
    std::map<std::string, std::string> metadata;
};

namespace detail {

[[noreturn]] inline void precondition_failed(std::string_view gadget, const std::string& why) {
    throw GeneratorPreconditionError(std::string(gadget) + ": " + why);
}

inline Rational factor_at(const DistanceFactorFunction& dff, std::size_t d, std::string_view gadget) {
    try {
        return dff.at(d);
    } catch (const OutOfRangeError&) {
        precondition_failed(gadget, "distance factor function must be defined up to distance " + std::to_string(d));
    }
}

inline void check_dff(const DistanceFactorFunction& dff, std::string_view gadget) {
    if (auto v = dff.violations(); !v.empty()) precondition_failed(gadget, to_string(v));
}

inline GeneratedInstance finish(GeneratedInstance gen) {
    if (auto v = validate_instance(gen.instance); !v.empty())
        precondition_failed(to_string(gen.gadget), "generated instance is invalid: " + to_string(v));
    return gen;
}

inline void set_symmetric(Instance& inst, AgentId a, AgentId b, const Rational& value) {
    inst.utilities[a][b] = value;
    inst.utilities[b][a] = value;
}

inline Instance blank(Topology topology, std::vector<std::string> names, DistanceFactorFunction dff) {
    Instance inst;
    inst.topology = std::move(topology);
    inst.utilities.assign(names.size(), std::vector<Rational>(names.size(), Rational(0)));
    inst.agent_names = std::move(names);
    inst.dff = std::move(dff);
    return inst;
}

inline std::vector<std::string> numbered(std::string_view prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

inline std::string join(const std::vector<Item>& items) {
    std::string out;
    for (auto s : items) out += (out.empty() ? "" : ",") + std::to_string(s);
    return out;
}

}  // namespace detail

/// Precondition failures for an Equitable Partition input; empty means ok.
/// `strict` adds min S >= n^2 and max S - min S <= min S / n^2.
inline std::vector<std::string> equitable_partition_defects(const EquitablePartition& src, bool strict) {
    std::vector<std::string> out;
    const std::size_t count = src.items.size();
    if (count == 0 || count % 2 != 0) out.push_back("item count must be a positive even number");
    if (std::any_of(src.items.begin(), src.items.end(), [](Item s) { return s == 0; }))
        out.push_back("items must be positive");
    if (item_sum(src.items) % 2 != 0) out.push_back("item sum must be even");
    if (strict && count > 0) {
        const std::uint64_t n = count / 2;
        const Item lo = *std::min_element(src.items.begin(), src.items.end());
        const Item hi = *std::max_element(src.items.begin(), src.items.end());
        if (lo < n * n) out.push_back("min S must be at least n^2");
        if ((hi - lo) * n * n > lo) out.push_back("items must differ pairwise by at most min S / n^2");
    }
    return out;
}

/// One clique of size c per bin, s_i agents per item. Agents of one item like
/// each other with (c - s_i)/(s_i - 1); agents of different items dislike each
/// other with -1. Any distance factor function works since all distances are 1
/// or unreachable.
inline GeneratedInstance gen_unary_bin_packing(const UnaryBinPacking& src, const DistanceFactorFunction& dff) {
    constexpr std::string_view name = "unary-bin-packing";
    detail::check_dff(dff, name);
    if (src.items.empty()) detail::precondition_failed(name, "at least one item required");
    if (src.bins == 0) detail::precondition_failed(name, "at least one bin required");
    if (src.capacity < 2) detail::precondition_failed(name, "capacity must be at least 2");
    if (std::any_of(src.items.begin(), src.items.end(), [](Item s) { return s <= 1; }))
        detail::precondition_failed(name, "every item must exceed 1");
    if (item_sum(src.items) != src.bins * src.capacity)
        detail::precondition_failed(name, "items must sum to bins * capacity");

    Topology topology;
    for (std::uint64_t b = 0; b < src.bins; ++b)
        topology = disjoint_union(topology, complete_graph(src.capacity));

    std::vector<std::string> names;
    std::vector<std::size_t> item_of;
    for (std::size_t i = 0; i < src.items.size(); ++i)
        for (Item j = 1; j <= src.items[i]; ++j) {
            names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j));
            item_of.push_back(i);
        }

    GeneratedInstance gen{detail::blank(std::move(topology), std::move(names), dff), Gadget::UnaryBinPacking, src, {}};
    const std::size_t m = item_of.size();
    for (AgentId a = 0; a < m; ++a)
        for (AgentId b = 0; b < m; ++b) {
            if (a == b) continue;
            const Item s = src.items[item_of[a]];
            gen.instance.utilities[a][b] =
                item_of[a] == item_of[b]
                    ? Rational(mpz_class(static_cast<unsigned long>(src.capacity)) - static_cast<unsigned long>(s),
                               mpz_class(static_cast<unsigned long>(s - 1)))
                    : Rational(-1);
        }
    gen.metadata = {{"items", detail::join(src.items)},
                    {"bins", std::to_string(src.bins)},
                    {"capacity", std::to_string(src.capacity)}};
    return detail::finish(std::move(gen));
}

namespace detail {

inline GeneratedInstance equitable_bipartite(const EquitablePartition& src, const DistanceFactorFunction& dff) {
    constexpr std::string_view name = "equitable-partition-bipartite";
    check_dff(dff, name);
    const std::size_t n = src.items.size() / 2;
    const Rational k(static_cast<unsigned long>(item_sum(src.items) / 2));
    const Rational f1 = factor_at(dff, 1, name), f2 = factor_at(dff, 2, name), f3 = factor_at(dff, 3, name);

    // L = 0..n-1, R = n..2n-1, v_l = 2n, v_r = 2n+1.
    Topology topology(2 * n + 2);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = n; r < 2 * n; ++r) topology.add_edge(l, r);
    for (std::size_t l = 0; l < n; ++l) topology.add_edge(2 * n, l);
    for (std::size_t r = n; r < 2 * n; ++r) topology.add_edge(2 * n + 1, r);

    auto names = numbered("a", 2 * n);
    names.push_back("g1");
    names.push_back("g2");
    GeneratedInstance gen{blank(std::move(topology), std::move(names), dff), Gadget::EquitableBipartite, src, {}};
    const AgentId g1 = 2 * n, g2 = 2 * n + 1;
    for (AgentId j = 0; j < 2 * n; ++j) {
        const Rational v = Rational(static_cast<unsigned long>(src.items[j])) / f1;
        set_symmetric(gen.instance, g1, j, v);
        set_symmetric(gen.instance, g2, j, v);
    }
    // The guards end up at distance 3, so the hostility is normalised by f(3).
    set_symmetric(gen.instance, g1, g2, -(k + f2 / f1 * k) / f3);
    gen.metadata = {{"n", std::to_string(n)}, {"k", k.to_string()}};
    return gen;
}

inline GeneratedInstance equitable_instar(const EquitablePartition& src, const DistanceFactorFunction& dff) {
    constexpr std::string_view name = "equitable-partition-instar";
    check_dff(dff, name);
    const std::size_t n = src.items.size() / 2;
    const Rational k(static_cast<unsigned long>(item_sum(src.items) / 2));
    const Rational f1 = factor_at(dff, 1, name), f2 = factor_at(dff, 2, name);

    // H1 = 0, H2 = 1, B = 2, left middle 3..n+2, right middle n+3..2n+2.
    Topology topology(2 * n + 3);
    topology.add_edge(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        topology.add_edge(0, 3 + i).add_edge(3 + i, 2);
        topology.add_edge(1, 3 + n + i).add_edge(3 + n + i, 2);
    }

    auto names = numbered("a", 2 * n);
    names.insert(names.end(), {"h1", "h2", "b"});
    GeneratedInstance gen{blank(std::move(topology), std::move(names), dff), Gadget::EquitableInStar, src, {}};
    const AgentId h1 = 2 * n, h2 = 2 * n + 1, b = 2 * n + 2;
    const Rational hostility = -((f1 + f2) / f2) * k;
    for (AgentId h : {h1, h2}) {
        for (AgentId j = 0; j < 2 * n; ++j) gen.instance.utilities[h][j] = Rational(static_cast<unsigned long>(src.items[j]));
        gen.instance.utilities[h][b] = hostility;
    }
    gen.metadata = {{"n", std::to_string(n)}, {"k", k.to_string()}};
    return gen;
}

inline GeneratedInstance equitable_path(const EquitablePartition& src) {
    const std::size_t n = src.items.size() / 2;
    const mpz_class k = static_cast<unsigned long>(item_sum(src.items) / 2);
    const mpz_class k3 = k * k * k;
    // Unique l with k^3 < 2^l <= 2k^3.
    const std::size_t ell = mpz_sizeinbase(k3.get_mpz_t(), 2);
    const mpz_class p1 = mpz_class(1) << ell;
    const mpz_class p2 = mpz_class(1) << (2 * ell);
    const mpz_class p3 = mpz_class(1) << (3 * ell);

    std::vector<Rational> table;
    for (std::size_t d = 1; d <= 2 * n + 3; ++d) {
        if (d <= n) table.emplace_back(mpz_class(p3 - static_cast<unsigned long>(d)));
        else if (d == n + 1) table.emplace_back(p2);
        else if (d <= 2 * n + 2) table.emplace_back(mpz_class(p1 - static_cast<unsigned long>(d)));
        else table.emplace_back(1);
    }
    auto dff = DistanceFactorFunction::table(table);

    Topology topology = path_graph(2 * n + 4);
    std::vector<std::string> names{"t", "g1", "g2", "g3"};
    const auto elements = numbered("a", 2 * n);
    names.insert(names.end(), elements.begin(), elements.end());
    GeneratedInstance gen{blank(std::move(topology), std::move(names), dff), Gadget::EquitablePath, src, {}};

    const AgentId t = 0, g1 = 1, g2 = 2, g3 = 3;
    for (AgentId g : {g1, g2, g3})
        for (std::size_t j = 0; j < 2 * n; ++j)
            gen.instance.utilities[g][4 + j] = Rational(static_cast<unsigned long>(src.items[j]));
    const mpz_class slack = 2 * mpz_class(static_cast<unsigned long>(n)) * k;
    gen.instance.utilities[g1][t] = -Rational(mpz_class(p3 * k - slack)) / table[0];
    gen.instance.utilities[g2][t] = -Rational(mpz_class(p3 * 2 * k - slack)) / table[n];
    gen.instance.utilities[g3][t] = -Rational(mpz_class(p3 * k - slack)) / table[2 * n + 2];
    gen.metadata = {{"n", std::to_string(n)}, {"k", k.get_str()}, {"ell", std::to_string(ell)}};
    return gen;
}

}  // namespace detail

/// Equitable Partition gadgets. The bipartite and path variants refuse inputs
/// outside the strict preconditions unless `waive_preconditions` is set. The
/// in-star variant always generates. Either way an input outside the
/// preconditions (for in-star: strict items and n >= 3) is tagged
/// "equivalence-not-guaranteed". The path variant emits its own table and
/// ignores `dff`.
inline GeneratedInstance gen_equitable_partition(const EquitablePartition& src, EquitableVariant variant,
                                                 const std::optional<DistanceFactorFunction>& dff = std::nullopt,
                                                 bool waive_preconditions = false) {
    const std::string_view name = variant == EquitableVariant::Bipartite ? "equitable-partition-bipartite"
                                  : variant == EquitableVariant::InStar  ? "equitable-partition-instar"
                                                                         : "equitable-partition-path";
    if (auto base = equitable_partition_defects(src, false); !base.empty())
        detail::precondition_failed(name, base.front());

    std::vector<std::string> strict = equitable_partition_defects(src, true);
    if (variant == EquitableVariant::InStar) {
        // Accepted regardless, but a middle vertex has degree 2, so with n <= 2
        // or uneven items both h agents can profit from sharing B's neighbour.
        if (src.items.size() / 2 < 3) strict.push_back("in-star gadget is only sound for n >= 3");
    }
    if (variant == EquitableVariant::Path) {
        const std::uint64_t n = src.items.size() / 2;
        const std::uint64_t k = item_sum(src.items) / 2;
        if (n < 10) strict.push_back("path gadget requires n >= 10");
        if (k < n * n * n) strict.push_back("path gadget requires k >= n^3");
    }
    if (!strict.empty() && !waive_preconditions && variant != EquitableVariant::InStar)
        detail::precondition_failed(name, strict.front());

    const auto caller_dff = dff.value_or(DistanceFactorFunction::reciprocal());
    GeneratedInstance gen = variant == EquitableVariant::Bipartite ? detail::equitable_bipartite(src, caller_dff)
                            : variant == EquitableVariant::InStar  ? detail::equitable_instar(src, caller_dff)
                                                                   : detail::equitable_path(src);
    if (!strict.empty()) gen.metadata["equivalence-not-guaranteed"] = "true";
    return detail::finish(std::move(gen));
}

/// n disjoint K5s; 2n guards that dislike each other with -k and like element
/// agents with s_j (symmetric); element agents are indifferent to each other.
inline GeneratedInstance gen_3partition(const ThreePartition& src, const DistanceFactorFunction& dff) {
    constexpr std::string_view name = "three-partition";
    detail::check_dff(dff, name);
    const std::size_t count = src.items.size();
    if (count == 0 || count % 3 != 0) detail::precondition_failed(name, "item count must be a positive multiple of 3");
    const std::size_t n = count / 3;
    if (item_sum(src.items) != n * src.target) detail::precondition_failed(name, "items must sum to n * k");
    for (Item s : src.items)
        if (!(4 * s > src.target && 2 * s < src.target))
            detail::precondition_failed(name, "every item must lie strictly between k/4 and k/2");

    Topology topology;
    for (std::size_t c = 0; c < n; ++c) topology = disjoint_union(topology, complete_graph(5));
    auto names = detail::numbered("g", 2 * n);
    const auto elements = detail::numbered("a", 3 * n);
    names.insert(names.end(), elements.begin(), elements.end());
    GeneratedInstance gen{detail::blank(std::move(topology), std::move(names), dff), Gadget::ThreePartition, src, {}};

    const Rational k(static_cast<unsigned long>(src.target));
    for (AgentId g = 0; g < 2 * n; ++g) {
        for (AgentId h = g + 1; h < 2 * n; ++h) detail::set_symmetric(gen.instance, g, h, -k);
        for (std::size_t j = 0; j < 3 * n; ++j)
            detail::set_symmetric(gen.instance, g, 2 * n + j, Rational(static_cast<unsigned long>(src.items[j])));
    }
    gen.metadata = {{"n", std::to_string(n)}, {"k", k.to_string()}};
    return detail::finish(std::move(gen));
}

/// H plus an apex vertex; k standard agents with mutual utility -beta and a
/// guard liked (symmetrically) with (k-1) f(2) beta / f(1).
inline GeneratedInstance gen_independent_set(const IndependentSet& src, const Rational& beta,
                                             const DistanceFactorFunction& dff) {
    constexpr std::string_view name = "independent-set";
    if (src.k < 2) throw DegenerateParameterError("independent-set: k must be at least 2");
    if (!beta.is_positive()) throw DegenerateParameterError("independent-set: beta must be positive");
    detail::check_dff(dff, name);
    if (auto v = src.graph.violations(); !v.empty()) detail::precondition_failed(name, to_string(v));
    if (src.k > src.graph.vertex_count) detail::precondition_failed(name, "k exceeds the number of vertices of H");
    const Rational f1 = detail::factor_at(dff, 1, name), f2 = detail::factor_at(dff, 2, name);

    const std::size_t apex = src.graph.vertex_count;
    Topology topology(apex + 1, src.graph.edges);
    for (VertexId v = 0; v < apex; ++v) topology.add_edge(v, apex);
    auto names = detail::numbered("a", src.k);
    names.push_back("g");
    GeneratedInstance gen{detail::blank(std::move(topology), std::move(names), dff), Gadget::IndependentSet, src, {}};

    const AgentId guard = src.k;
    const Rational attraction = Rational(static_cast<unsigned long>(src.k - 1)) * f2 * beta / f1;
    for (AgentId i = 0; i < src.k; ++i) {
        for (AgentId j = i + 1; j < src.k; ++j) detail::set_symmetric(gen.instance, i, j, -beta);
        detail::set_symmetric(gen.instance, i, guard, attraction);
    }
    gen.metadata = {{"k", std::to_string(src.k)}, {"beta", beta.to_string()}};
    return detail::finish(std::move(gen));
}

/// H plus an apex c with a pendant p; k selection agents that dislike the guard
/// with -beta and like each other with f(2) beta / (f(1) (k-1)); the guard is
/// indifferent.
inline GeneratedInstance gen_clique(const Clique& src, const Rational& beta, const DistanceFactorFunction& dff) {
    constexpr std::string_view name = "clique";
    if (src.k < 2) throw DegenerateParameterError("clique: k must be at least 2");
    if (!beta.is_positive()) throw DegenerateParameterError("clique: beta must be positive");
    detail::check_dff(dff, name);
    if (auto v = src.graph.violations(); !v.empty()) detail::precondition_failed(name, to_string(v));
    if (src.k > src.graph.vertex_count + 1)
        detail::precondition_failed(name, "k + 1 agents exceed the number of gadget vertices");
    const Rational f1 = detail::factor_at(dff, 1, name), f2 = detail::factor_at(dff, 2, name);

    const std::size_t apex = src.graph.vertex_count, pendant = apex + 1;
    Topology topology(apex + 2, src.graph.edges);
    for (VertexId v = 0; v < apex; ++v) topology.add_edge(v, apex);
    topology.add_edge(apex, pendant);
    auto names = detail::numbered("a", src.k);
    names.push_back("g");
    GeneratedInstance gen{detail::blank(std::move(topology), std::move(names), dff), Gadget::Clique, src, {}};

    const AgentId guard = src.k;
    const Rational attraction = f2 * beta / (f1 * Rational(static_cast<unsigned long>(src.k - 1)));
    for (AgentId i = 0; i < src.k; ++i) {
        for (AgentId j = 0; j < src.k; ++j)
            if (i != j) gen.instance.utilities[i][j] = attraction;
        gen.instance.utilities[i][guard] = -beta;
    }
    gen.metadata = {{"k", std::to_string(src.k)}, {"beta", beta.to_string()}};
    return detail::finish(std::move(gen));
}

struct GeneratorOptions {
    DistanceFactorFunction dff = DistanceFactorFunction::reciprocal();
    Rational beta{1};
    EquitableVariant variant = EquitableVariant::Bipartite;
    bool waive_preconditions = false;
};

inline GeneratedInstance generate(const SourceProblem& src, const GeneratorOptions& options = {}) {
    return std::visit(
        [&](const auto& p) -> GeneratedInstance {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, UnaryBinPacking>) return gen_unary_bin_packing(p, options.dff);
            else if constexpr (std::is_same_v<P, EquitablePartition>)
                return gen_equitable_partition(p, options.variant, options.dff, options.waive_preconditions);
            else if constexpr (std::is_same_v<P, ThreePartition>) return gen_3partition(p, options.dff);
            else if constexpr (std::is_same_v<P, IndependentSet>) return gen_independent_set(p, options.beta, options.dff);
            else return gen_clique(p, options.beta, options.dff);
        },
        src);
}

/// The individually rational assignment each reduction builds from a source
/// certificate. Throws CertificateInvalidError if the certificate is wrong.
inline Assignment certificate_to_assignment(const GeneratedInstance& gen, const SourceCertificate& cert) {
    if (auto defect = certificate_defect(gen.source, cert))
        throw CertificateInvalidError(std::string(to_string(gen.gadget)) + ": " + *defect);

    Assignment out;
    out.placement.assign(gen.instance.agent_count(), 0);
    auto& at = out.placement;

    switch (gen.gadget) {
        case Gadget::UnaryBinPacking: {
            const auto& src = std::get<UnaryBinPacking>(gen.source);
            const auto& alloc = std::get<BinAllocation>(cert);
            std::vector<VertexId> next_free(src.bins);
            for (std::size_t b = 0; b < src.bins; ++b) next_free[b] = b * src.capacity;
            AgentId a = 0;
            for (std::size_t i = 0; i < src.items.size(); ++i)
                for (Item j = 0; j < src.items[i]; ++j) at[a++] = next_free[alloc.bin_of_item[i]]++;
            break;
        }
        case Gadget::EquitableBipartite:
        case Gadget::EquitableInStar:
        case Gadget::EquitablePath: {
            const auto& src = std::get<EquitablePartition>(gen.source);
            const auto& half = std::get<IndexSubset>(cert).indices;
            const std::size_t n = src.items.size() / 2;
            std::vector<bool> in_half(2 * n, false);
            for (auto i : half) in_half[i] = true;
            // Vertex blocks that receive the chosen half and the rest, and the
            // offset of the element agents in the agent list.
            VertexId first_block = 0, second_block = 0;
            AgentId element_offset = 0;
            if (gen.gadget == Gadget::EquitableBipartite) {
                first_block = 0;
                second_block = n;
                at[2 * n] = 2 * n;          // g1 -> v_l
                at[2 * n + 1] = 2 * n + 1;  // g2 -> v_r
            } else if (gen.gadget == Gadget::EquitableInStar) {
                first_block = 3;
                second_block = 3 + n;
                at[2 * n] = 0;      // h1 -> H1
                at[2 * n + 1] = 1;  // h2 -> H2
                at[2 * n + 2] = 2;  // b -> B
            } else {
                // t, g1, g2, g3 on v_1, v_2, v_{n+3}, v_{2n+4}; halves on v_3..v_{n+2} and v_{n+4}..v_{2n+3}.
                at[0] = 0;
                at[1] = 1;
                at[2] = n + 2;
                at[3] = 2 * n + 3;
                first_block = 2;
                second_block = n + 3;
                element_offset = 4;
            }
            for (std::size_t j = 0; j < 2 * n; ++j) at[element_offset + j] = in_half[j] ? first_block++ : second_block++;
            break;
        }
        case Gadget::ThreePartition: {
            const auto& src = std::get<ThreePartition>(gen.source);
            const auto& grouping = std::get<TripleGrouping>(cert).group_of_item;
            const std::size_t n = src.items.size() / 3;
            std::vector<VertexId> next_free(n);
            for (std::size_t c = 0; c < n; ++c) {
                at[2 * c] = 5 * c;
                at[2 * c + 1] = 5 * c + 1;
                next_free[c] = 5 * c + 2;
            }
            for (std::size_t j = 0; j < 3 * n; ++j) at[2 * n + j] = next_free[grouping[j]]++;
            break;
        }
        case Gadget::IndependentSet:
        case Gadget::Clique: {
            const auto& vertices = std::get<VertexSubset>(cert).vertices;
            const std::size_t h = gen.gadget == Gadget::IndependentSet
                                      ? std::get<IndependentSet>(gen.source).graph.vertex_count
                                      : std::get<Clique>(gen.source).graph.vertex_count;
            for (std::size_t i = 0; i < vertices.size(); ++i) at[i] = vertices[i];
            // Guard on the apex (independent set) or on the pendant (clique).
            at[vertices.size()] = gen.gadget == Gadget::IndependentSet ? h : h + 1;
            break;
        }
    }
    return out;
}

/// Agents whose utility the reduction's certificate drives to exactly zero.
inline std::vector<AgentId> critical_agents(const GeneratedInstance& gen) {
    std::vector<AgentId> out;
    const std::size_t m = gen.instance.agent_count();
    switch (gen.gadget) {
        case Gadget::UnaryBinPacking:
            for (AgentId a = 0; a < m; ++a) out.push_back(a);
            break;
        case Gadget::EquitableBipartite:
        case Gadget::EquitableInStar: {
            const std::size_t n = std::get<EquitablePartition>(gen.source).items.size() / 2;
            out = {2 * n, 2 * n + 1};
            break;
        }
        case Gadget::EquitablePath:
            break;
        case Gadget::ThreePartition:
            for (AgentId g = 0; g < 2 * (std::get<ThreePartition>(gen.source).items.size() / 3); ++g) out.push_back(g);
            break;
        case Gadget::IndependentSet:
        case Gadget::Clique:
            for (AgentId a = 0; a + 1 < m; ++a) out.push_back(a);
            break;
    }
    return out;
}

}  // namespace tdg
