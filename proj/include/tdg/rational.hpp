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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tdg/errors.hpp"

namespace tdg {

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den >= 1).
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalises so
/// equality is structural.
class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long long value) : value_(mpz_class(std::to_string(value))) {}  // NOLINT
    Rational(unsigned long value) : value_(value) {}  // NOLINT
    Rational(unsigned value) : value_(value) {}       // NOLINT
    explicit Rational(const mpz_class& value) : value_(value) {}
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    Rational(long numerator, long denominator)
        : Rational(mpz_class(numerator), mpz_class(denominator)) {}

    /// Parses `-?[0-9]+(/[0-9]+)?`. Non-reduced fractions are accepted and
    /// canonicalised; a zero denominator or any other shape is a ParseError.
    static Rational parse(std::string_view text) {
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && body.front() == '-') {
            negative = true;
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        const std::string_view num = body.substr(0, slash);
        const std::string_view den =
            slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
        auto all_digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10);
        mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
        if (negative) n = -n;
        return Rational(n, d);
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_negative() const { return sign() < 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    /// base^exponent for a non-negative integer exponent.
    static Rational pow(const Rational& base, unsigned long exponent) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), exponent);
        mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), exponent);
        return Rational(num, den);
    }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    mpq_class value_{0};
};

}  // namespace tdg
