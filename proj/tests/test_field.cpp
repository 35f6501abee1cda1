/*
   Copyright 2026 The masscode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include <gtest/gtest.h>

#include <masscode/field.hpp>

#include "oracles.hpp"

using masscode::ArithmeticError;
using masscode::FieldElement;
using masscode::PrimeField;
using masscode::find_field;

TEST(FindField, SmallLengths) {
    struct Case {
        std::size_t n;
        std::uint32_t q;
        std::uint32_t alpha;
    };
    for (const auto& c : {Case{2, 7, 3}, Case{4, 11, 2}, Case{5, 13, 2}}) {
        const auto f = find_field(c.n);
        EXPECT_EQ(f.modulus(), c.q) << "n=" << c.n;
        EXPECT_EQ(f.primitive().value, c.alpha) << "n=" << c.n;
        // independent check: alpha has full order, and q is the first prime past 2n + 1
        EXPECT_EQ(oracle::order(c.alpha, c.q), c.q - 1);
        for (std::uint64_t p = 3; p < c.q; ++p) EXPECT_FALSE(oracle::is_prime(p) && p - 1 > 2 * c.n);
    }
}

TEST(FindField, MatchesBruteForceUpTo500) {
    for (std::size_t n = 2; n <= 500; ++n) {
        const auto f = find_field(n);
        std::uint64_t q = 2 * n + 2;
        while (!oracle::is_prime(q)) ++q;
        ASSERT_EQ(f.modulus(), q);
        ASSERT_EQ(f.primitive().value, oracle::smallest_generator(q));
    }
}

TEST(FindField, IsPure) {
    for (std::size_t n : {3U, 64U, 1000U, 4590U}) EXPECT_TRUE(find_field(n) == find_field(n));
}

TEST(PrimeField, RejectsBadParameters) {
    EXPECT_THROW(PrimeField(15, 2), std::invalid_argument);
    EXPECT_THROW(PrimeField(2, 1), std::invalid_argument);
    EXPECT_THROW(PrimeField(13, 3), std::invalid_argument);  // 3 has order 3 mod 13
    EXPECT_THROW(PrimeField(13, 1), std::invalid_argument);
    EXPECT_THROW(PrimeField(13, 13), std::invalid_argument);
    EXPECT_NO_THROW(PrimeField(13, 2));
}

TEST(PrimeField, Arithmetic) {
    const PrimeField f(13, 2);
    EXPECT_EQ(f.inv({2}).value, 7U);
    EXPECT_EQ(f.pow({2}, -3).value, 5U);
    for (std::uint32_t a = 0; a < 13; ++a) EXPECT_EQ(f.pow({a}, 0), f.one());
    EXPECT_EQ(f.add({12}, {5}).value, 4U);
    EXPECT_EQ(f.sub({3}, {5}).value, 11U);
    EXPECT_EQ(f.neg({0}).value, 0U);
    EXPECT_EQ(f.neg({1}).value, 12U);
    EXPECT_EQ(f.element(-1).value, 12U);
    EXPECT_EQ(f.signed_value({12}), -1);
    EXPECT_EQ(f.signed_value({6}), 6);
    EXPECT_EQ(f.signed_value({7}), -6);
    EXPECT_EQ(f.div({1}, {2}).value, 7U);
    EXPECT_THROW((void)f.inv({0}), ArithmeticError);
    EXPECT_THROW((void)f.pow({0}, -1), ArithmeticError);
}

TEST(PrimeField, InverseRandomPairs) {
    const auto f = find_field(1000);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        const FieldElement a{static_cast<std::uint32_t>(1 + rng() % (f.modulus() - 1))};
        ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
        const FieldElement b{static_cast<std::uint32_t>(rng() % f.modulus())};
        ASSERT_EQ(f.mul(a, b).value, static_cast<std::uint64_t>(a.value) * b.value % f.modulus());
    }
}

TEST(PrimeField, DiscreteLog) {
    const PrimeField f13(13, 2);
    EXPECT_EQ(f13.dlog({8}), 3U);
    EXPECT_EQ(f13.dlog({1}), 0U);
    EXPECT_THROW((void)f13.dlog({0}), ArithmeticError);
    const PrimeField f11(11, 2);
    EXPECT_EQ(f11.dlog({7}), 7U);
}

TEST(PrimeField, DiscreteLogExhaustiveBelow10k) {
    for (std::uint32_t q = 3; q <= 10000; q += 2) {
        if (!oracle::is_prime(q)) continue;
        const PrimeField f(q, static_cast<std::uint32_t>(oracle::smallest_generator(q)));
        std::uint64_t v = 1;
        for (std::uint32_t e = 0; e + 1 < q; ++e) {
            ASSERT_EQ(f.alpha_pow(e).value, v);
            ASSERT_EQ(f.dlog({static_cast<std::uint32_t>(v)}), e) << "q=" << q;
            v = v * f.primitive().value % q;
        }
        ASSERT_EQ(f.alpha_pow(-1), f.inv(f.primitive()));
    }
}

TEST(PrimeField, BabyStepGiantStepAboveTableLimit) {
    const auto f = find_field(600000);
    ASSERT_GT(f.modulus(), PrimeField::kDlogTableLimit);
    EXPECT_TRUE(f.power_table().empty());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto e = static_cast<std::uint32_t>(rng() % f.order());
        ASSERT_EQ(f.dlog(f.alpha_pow(e)), e);
    }
    EXPECT_EQ(f.dlog(f.one()), 0U);
}

TEST(ElementBits, CeilLog2) {
    EXPECT_EQ(masscode::element_bits(PrimeField(13, 2)), 4U);
    EXPECT_EQ(masscode::element_bits(PrimeField(7, 3)), 3U);
    EXPECT_EQ(masscode::element_bits(PrimeField(17, 3)), 5U);
}
