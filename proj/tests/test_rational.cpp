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

#include <gtest/gtest.h>

#include "tdg/rational.hpp"

namespace tdg {
namespace {

TEST(Rational, CanonicalisesOnConstruction) {
    const Rational r(mpz_class(4), mpz_class(-6));
    EXPECT_EQ(r.numerator(), -2);
    EXPECT_EQ(r.denominator(), 3);
    EXPECT_EQ(r.to_string(), "-2/3");
    EXPECT_EQ(Rational(6, 3).to_string(), "2");
}

TEST(Rational, ParseAcceptsNonReducedAndRejectsZeroDenominator) {
    EXPECT_EQ(Rational::parse("4/2"), Rational(2));
    EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("0"), Rational(0));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    for (const char* bad : {"", "-", "1/", "/2", "1.5", "+1", "1/-2", " 1", "abc", "1e3"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, ArithmeticIsExact) {
    const Rational third(1, 3);
    EXPECT_EQ(third + third + third, Rational(1));
    EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(Rational::pow(Rational(1, 2), 10), Rational(1, 1024));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, HugeValuesRoundTrip) {
    const std::string big = "-1267650600228229401496703205376/98765432109876543210987654321";
    EXPECT_EQ(Rational::parse(big).to_string(), big);
    EXPECT_EQ(Rational::parse(Rational::pow(Rational(2), 93).to_string()), Rational::pow(Rational(2), 93));
}

TEST(Rational, OrderingAndPredicates) {
    EXPECT_LT(Rational(-1, 2), Rational(0));
    EXPECT_GT(Rational(2, 3), Rational(3, 5));
    EXPECT_TRUE(Rational(-5, 7).is_negative());
    EXPECT_TRUE(Rational(0).is_zero());
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
    EXPECT_EQ(Rational(-3, 4).sign(), -1);
}

}  // namespace
}  // namespace tdg
