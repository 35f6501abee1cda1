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

#include <masscode/catalan.hpp>
#include <masscode/channel.hpp>
#include <masscode/oracle.hpp>

#include "oracles.hpp"

using namespace masscode;

namespace {

bool is_dyck(const oracle::Bits& b) {
    int h = 0;
    for (int v : b) {
        h += v ? -1 : 1;
        if (h < 0) return false;
    }
    return h == 0;
}

}  // namespace

TEST(Catalan, Counts) {
    EXPECT_EQ(catalan_rank_count(0), 1);
    EXPECT_EQ(catalan_rank_count(4), 2);
    EXPECT_EQ(catalan_rank_count(6), 5);
    EXPECT_EQ(catalan_rank_count(8), 14);
    EXPECT_EQ(catalan_rank_count(7), 0);
    EXPECT_EQ(CatalanCode(14, 1).count(), 2);
    EXPECT_EQ(CatalanCode(16, 1).count(), 5);
    EXPECT_EQ(CatalanCode(18, 1).count(), 14);
    for (std::size_t m = 0; m <= 20; m += 2) {
        std::uint64_t brute = 0;
        for (std::uint32_t v = 0; v < (1U << m); ++v) {
            oracle::Bits b(m);
            for (std::size_t i = 0; i < m; ++i) b[i] = static_cast<int>((v >> i) & 1U);
            brute += is_dyck(b);
        }
        ASSERT_EQ(catalan_rank_count(m), BigInt(brute)) << "m=" << m;
    }
}

TEST(Catalan, Shape) {
    const CatalanCode code(16, 1);
    EXPECT_EQ(code.border(), 5U);
    EXPECT_EQ(code.middle_length(), 6U);
    std::set<std::string> words;
    for (const auto& s : code.codebook()) {
        words.insert(s.to_string());
        EXPECT_TRUE(code.is_codeword(s));
        EXPECT_EQ(s.slice(0, 5), BitString::zeros(5));
        EXPECT_EQ(s.weight(), 8U);
    }
    std::set<std::string> expect;
    for (const char* d : {"000111", "001011", "001101", "010011", "010101"})
        expect.insert(std::string("00000") + d + "11111");
    EXPECT_EQ(words, expect);
    EXPECT_EQ(code.unrank(0).to_string(), "0000000011111111");
    EXPECT_EQ(code.unrank(4).to_string(), "0000001010111111");
}

TEST(Catalan, RankUnrankLexicographic) {
    const CatalanCode code(2 * 9 + 20, 2);  // middle length 20
    BitString prev;
    const auto total = code.count().convert_to<std::uint64_t>();
    for (std::uint64_t r = 0; r < total; r += 97) {
        const auto s = code.unrank(r);
        ASSERT_TRUE(code.is_codeword(s));
        ASSERT_EQ(code.rank(s), r);
        if (!prev.empty()) {
            ASSERT_LT(prev, s);
        }
        prev = s;
    }
    EXPECT_THROW((void)code.unrank(code.count()), std::invalid_argument);
}

TEST(Catalan, EncodeInfoOf) {
    Rng rng(81);
    const CatalanCode code(2 * 5 + 200, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto info = rng.bits(code.info_bits());
        EXPECT_EQ(code.info_of(code.encode(info)), info);
    }
    // redundancy is about 1.5 log2 of the middle length plus the borders
    EXPECT_GT(code.redundancy(), 10.0);
    EXPECT_LT(code.redundancy(), 10.0 + 1.5 * std::log2(200.0) + 2.0);
}

TEST(Catalan, BadParameters) {
    EXPECT_THROW(CatalanCode(15, 1), std::invalid_argument);  // odd middle
    EXPECT_THROW(CatalanCode(9, 1), std::invalid_argument);   // too short
    EXPECT_THROW(CatalanCode(20, 0), std::invalid_argument);
}

TEST(Catalan, CertifiedDistance) {
    for (std::size_t n = 12; n <= 24; n += 2) {
        const CatalanCode code(n, 1);
        const auto report = certify_code(code.codebook(), 1);
        EXPECT_TRUE(report.pass) << "n=" << n << "\n" << format_report(report);
    }
    for (std::size_t n = 20; n <= 28; n += 2) {
        const CatalanCode code(n, 2);
        EXPECT_TRUE(certify_code(code.codebook(), 2).pass) << "n=" << n;
    }
}

TEST(Catalan, ExhaustiveSingleSubstitutions) {
    const CatalanCode code(16, 1);
    const ReferenceDecoder reference(code.codebook(), 1);
    for (const auto& s : code.codebook()) {
        const auto c = composition_multiset(s);
        EXPECT_EQ(code.decode(c), s);
        for (std::size_t l = 1; l <= c.n(); ++l)
            c.cls(l).for_each([&](std::uint32_t ones, std::uint32_t) {
                for (std::uint32_t to = 0; to <= l; ++to) {
                    if (to == ones) continue;
                    const Substitution sub{l, {static_cast<std::uint32_t>(l - ones), ones},
                                           {static_cast<std::uint32_t>(l - to), to}};
                    const auto readout = apply_errors(c, {{sub}});
                    ASSERT_EQ(code.decode(readout), s);
                    ASSERT_EQ(reference.decode(readout), s);
                }
            });
    }
}

TEST(Catalan, RandomErrorsLarger) {
    Rng rng(82);
    const CatalanCode code(2 * 9 + 16, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = code.unrank(rng.below(code.count().convert_to<std::uint64_t>()));
        const auto c = composition_multiset(s);
        ASSERT_EQ(code.decode(apply_errors(c, random_pattern(c, rng.below(3), rng))), s);
    }
}

TEST(Catalan, DecodeRejections) {
    const CatalanCode code(16, 1);
    EXPECT_THROW((void)code.decode(composition_multiset(BitString::zeros(15))), std::invalid_argument);
    try {
        (void)code.decode(composition_multiset(BitString::zeros(16)));
        FAIL() << "expected CatalanDecodeError";
    } catch (const CatalanDecodeError& e) {
        EXPECT_EQ(e.kind(), CatalanDecodeError::Kind::NoCodeword);
    }
    const CatalanCode big(2 * 5 + 60, 1);
    try {
        (void)big.decode(composition_multiset(big.unrank(0)));
        FAIL() << "expected CatalanDecodeError";
    } catch (const CatalanDecodeError& e) {
        EXPECT_EQ(e.kind(), CatalanDecodeError::Kind::TooLarge);
    }
}
