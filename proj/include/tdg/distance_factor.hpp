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

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "tdg/errors.hpp"
#include "tdg/rational.hpp"
#include "tdg/topology.hpp"

namespace tdg {

/// Explicit values f(1), f(2), ..., f(values.size()).
struct TableFactor {
    std::vector<Rational> values;
    bool operator==(const TableFactor&) const = default;
};

/// f(d) = 1/d.
struct ReciprocalFactor {
    bool operator==(const ReciprocalFactor&) const = default;
};

/// f(d) = base^d with 0 < base < 1.
struct ExponentialFactor {
    Rational base;
    bool operator==(const ExponentialFactor&) const = default;
};

/// f(d) = values[d-1] for d <= cutoff and 0 beyond.
struct BoundedFactor {
    std::vector<Rational> values;
    std::size_t cutoff = 0;
    bool operator==(const BoundedFactor&) const = default;
};

/// Strictly decreasing positive weighting of graph distance, with f(unreachable) = 0.
class DistanceFactorFunction {
   public:
    using Variant = std::variant<TableFactor, ReciprocalFactor, ExponentialFactor, BoundedFactor>;

    DistanceFactorFunction() : variant_(ReciprocalFactor{}) {}
    explicit DistanceFactorFunction(Variant v) : variant_(std::move(v)) {}

    static DistanceFactorFunction table(std::vector<Rational> values) {
        return DistanceFactorFunction(TableFactor{std::move(values)});
    }
    static DistanceFactorFunction reciprocal() { return DistanceFactorFunction(ReciprocalFactor{}); }
    static DistanceFactorFunction exponential(Rational base) {
        return DistanceFactorFunction(ExponentialFactor{std::move(base)});
    }
    static DistanceFactorFunction bounded(std::vector<Rational> values, std::size_t cutoff) {
        return DistanceFactorFunction(BoundedFactor{std::move(values), cutoff});
    }

    const Variant& variant() const noexcept { return variant_; }

    std::string_view kind() const {
        return std::visit(
            [](const auto& f) -> std::string_view {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, TableFactor>) return "table";
                else if constexpr (std::is_same_v<T, ReciprocalFactor>) return "reciprocal";
                else if constexpr (std::is_same_v<T, ExponentialFactor>) return "exponential";
                else return "bounded";
            },
            variant_);
    }

    /// Largest distance the function is defined for; nullopt when unbounded.
    std::optional<std::size_t> defined_up_to() const {
        if (const auto* t = std::get_if<TableFactor>(&variant_)) return t->values.size();
        return std::nullopt;
    }

    /// f at a positive hop count. Throws OutOfRangeError past the end of a table.
    Rational at(std::size_t d) const {
        if (d == 0) throw OutOfRangeError("distance factor evaluated at distance 0");
        return std::visit(
            [d](const auto& f) -> Rational {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, TableFactor>) {
                    if (d > f.values.size())
                        throw OutOfRangeError("distance " + std::to_string(d) +
                                              " exceeds distance factor table of length " +
                                              std::to_string(f.values.size()));
                    return f.values[d - 1];
                } else if constexpr (std::is_same_v<T, ReciprocalFactor>) {
                    return Rational(1L, static_cast<long>(d));
                } else if constexpr (std::is_same_v<T, ExponentialFactor>) {
                    return Rational::pow(f.base, d);
                } else {
                    if (d > f.cutoff) return Rational(0);
                    if (d > f.values.size()) throw OutOfRangeError("bounded table shorter than its cutoff");
                    return f.values[d - 1];
                }
            },
            variant_);
    }

    Rational operator()(Distance d) const {
        if (!d.reachable()) return Rational(0);
        return at(d.hops());
    }

    /// Upper bound of f over all positive distances: f(1), or 0 for an empty table.
    Rational maximum() const {
        if (const auto* t = std::get_if<TableFactor>(&variant_); t && t->values.empty()) return Rational(0);
        return at(1);
    }

    std::vector<Violation> violations() const {
        std::vector<Violation> out;
        auto check_values = [&out](const std::vector<Rational>& values) {
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (!values[i].is_positive())
                    out.push_back({"$.dff.values[" + std::to_string(i) + "]", "not strictly positive"});
                if (i > 0 && !(values[i] < values[i - 1]))
                    out.push_back({"$.dff.values[" + std::to_string(i) + "]", "not strictly decreasing"});
            }
        };
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, TableFactor>) {
                    check_values(f.values);
                } else if constexpr (std::is_same_v<T, ExponentialFactor>) {
                    if (!(f.base.is_positive() && f.base < Rational(1)))
                        out.push_back({"$.dff.base", "exponential base must lie strictly between 0 and 1"});
                } else if constexpr (std::is_same_v<T, BoundedFactor>) {
                    check_values(f.values);
                    if (f.cutoff == 0) out.push_back({"$.dff.cutoff", "cutoff must be positive"});
                    if (f.values.size() != f.cutoff)
                        out.push_back({"$.dff.values", "bounded table length must equal cutoff"});
                }
            },
            variant_);
        return out;
    }

    bool operator==(const DistanceFactorFunction&) const = default;

   private:
    Variant variant_;
};

inline Rational eval_dff(const DistanceFactorFunction& dff, Distance d) { return dff(d); }

}  // namespace tdg
