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
#include <set>

#include <gtest/gtest.h>

#include <masscode/channel.hpp>
#include <masscode/dominance.hpp>

#include "oracles.hpp"

using namespace masscode;

namespace {

std::vector<oracle::Bits> brute_force(std::size_t m) {
    std::vector<oracle::Bits> out;
    for (std::uint32_t v = 0; v < (1U << m); ++v) {
        oracle::Bits b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = static_cast<int>((v >> (m - 1 - i)) & 1U);
        if (oracle::pair_walk_ok(b)) out.push_back(b);
    }
    return out;
}

BitString to_bs(const oracle::Bits& b) { return BitString(std::vector<std::uint8_t>(b.begin(), b.end())); }

}  // namespace

TEST(Dominance, SmallExamples) {
    const DominanceCode two(2);
    EXPECT_EQ(two.count(), 1);
    EXPECT_EQ(two.unrank(0), BitString::from_string("01"));

    const DominanceCode four(4);
    std::set<std::string> words;
    for (int r = 0; r < 4; ++r) words.insert(four.unrank(r).to_string());
    EXPECT_EQ(words, (std::set<std::string>{"0001", "0011", "0101", "0111"}));
    EXPECT_EQ(four.info_bits(), 2U);

    const DominanceCode three(3);
    EXPECT_EQ(three.count(), 2);
    EXPECT_TRUE(three.is_codeword(BitString::from_string("011")));
    EXPECT_FALSE(three.is_codeword(BitString::from_string("110")));
}

TEST(Dominance, CountsMatchBruteForce) {
    for (std::size_t m = 2; m <= 16; ++m) {
        const auto words = brute_force(m);
        const DominanceCode code(m);
        ASSERT_EQ(code.count(), BigInt(words.size())) << "m=" << m;
        std::set<BigInt> ranks;
        for (const auto& b : words) {
            const auto s = to_bs(b);
            ASSERT_TRUE(code.is_codeword(s));
            ASSERT_EQ(dominance_holds(s), true);
            const auto r = code.rank(s);
            ASSERT_EQ(code.unrank(r), s);
            ranks.insert(r);
        }
        // rank is a bijection onto [0, count)
        ASSERT_EQ(ranks.size(), words.size());
        ASSERT_EQ(*ranks.rbegin(), BigInt(words.size() - 1));
    }
}

TEST(Dominance, PredicateMatchesOracle) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto b = oracle::random_bits(rng, 2 + rng() % 100);
        ASSERT_EQ(dominance_holds(to_bs(b)), oracle::pair_walk_ok(b));
    }
}

TEST(Dominance, EncodeDecodeLarge) {
    Rng rng(62);
    for (std::size_t m : {17U, 64U, 255U, 1000U, 4000U}) {
        const DominanceCode code(m);
        ASSERT_GT(code.info_bits(), 0U);
        for (int trial = 0; trial < 20; ++trial) {
            const auto info = rng.bits(code.info_bits());
            const auto u = code.encode(info);
            ASSERT_EQ(u.size(), m);
            ASSERT_TRUE(code.is_codeword(u));
            ASSERT_EQ(code.decode(u), info);
        }
        EXPECT_THROW((void)code.unrank(code.count()), std::invalid_argument);
        EXPECT_THROW((void)code.encode(rng.bits(code.info_bits() + 1)), std::invalid_argument);
    }
}

TEST(Dominance, RedundancyGrowsLikeHalfLog) {
    // the walk constraint costs about 0.5 log2 m bits plus a constant
    for (std::size_t m : {64U, 256U, 1024U, 4096U}) {
        const DominanceCode code(m);
        const double r = code.redundancy();
        EXPECT_GT(r, 0.0);
        EXPECT_LT(r, 0.5 * std::log2(static_cast<double>(m)) + 3.0) << "m=" << m;
    }
}

TEST(Dominance, RejectsNonCodewords) {
    const DominanceCode code(8);
    EXPECT_THROW((void)code.rank(BitString::from_string("10000000")), std::invalid_argument);
    EXPECT_THROW((void)code.rank(BitString::from_string("0111")), std::invalid_argument);
    EXPECT_THROW(DominanceCode(1), std::invalid_argument);
}

TEST(BigIntBits, RoundTrip) {
    Rng rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        const auto b = rng.bits(1 + rng.below(200));
        EXPECT_EQ(big_to_bits(bits_to_big(b), b.size()), b);
    }
    EXPECT_THROW((void)big_to_bits(BigInt(8), 3), std::invalid_argument);
    EXPECT_NEAR(log2_big(BigInt(1) << 300), 300.0, 1e-9);
    EXPECT_NEAR(log2_big(BigInt(3)), std::log2(3.0), 1e-12);
}
