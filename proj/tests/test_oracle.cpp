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

#include <gtest/gtest.h>

#include <masscode/catalan.hpp>
#include <masscode/channel.hpp>
#include <masscode/oracle.hpp>

#include "oracles.hpp"

using namespace masscode;

namespace {

BitString bs(const char* s) { return BitString::from_string(s); }

std::vector<BitString> all_strings(std::size_t n) {
    std::vector<BitString> out;
    for (std::uint32_t v = 0; v < (1U << n); ++v) {
        BitString s = BitString::zeros(n);
        for (std::size_t i = 0; i < n; ++i) s.set(i, static_cast<std::uint8_t>((v >> i) & 1U));
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(Certify, ConstantStrings) {
    const auto r = certify_code({bs("000"), bs("111")}, 1);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.min_distance, 6U);
    EXPECT_EQ(r.violations, 0U);
    EXPECT_EQ(format_report(r), "PASS\ncodebook_size 2\nt 1\nmin_distance 6\nrequired 3\nviolating_pairs 0\nwitness 000 111\n");
}

TEST(Certify, Singleton) {
    const auto r = certify_code({bs("0110")}, 3);
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.min_distance.has_value());
    EXPECT_EQ(format_report(r), "PASS\ncodebook_size 1\nt 3\nmin_distance -\nrequired 7\nviolating_pairs 0\n");
}

TEST(Certify, FullSpaceFails) {
    const auto r = certify_code(all_strings(4), 1);
    EXPECT_FALSE(r.pass);
    // reversals share a multiset
    EXPECT_EQ(r.min_distance, 0U);
    EXPECT_GT(r.violations, 0U);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(composition_multiset(r.witness->first), composition_multiset(r.witness->second));
}

TEST(Certify, MatchesNaiveDistance) {
    const auto words = all_strings(6);
    std::vector<BitString> pick;
    for (std::size_t i = 0; i < words.size(); i += 5) pick.push_back(words[i]);
    long long best = -1;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = i + 1; j < pick.size(); ++j) {
            const auto a = oracle::multiset(oracle::Bits(pick[i].bits().begin(), pick[i].bits().end()));
            const auto b = oracle::multiset(oracle::Bits(pick[j].bits().begin(), pick[j].bits().end()));
            const auto d = oracle::distance(a, b);
            if (best < 0 || d < best) best = d;
            violations += d < 5;
        }
    const auto r = certify_code(pick, 2);
    EXPECT_EQ(r.min_distance, static_cast<std::uint64_t>(best));
    EXPECT_EQ(r.violations, violations);
}

TEST(Certify, Duplicates) { EXPECT_THROW((void)certify_code({bs("01"), bs("01")}, 1), std::invalid_argument); }

TEST(ReferenceDecode, NearestAndTies) {
    const std::vector<BitString> book{bs("000"), bs("111")};
    EXPECT_EQ(reference_decode(composition_multiset(bs("000")), book, 1), bs("000"));
    auto c = composition_multiset(bs("000"));
    c.remove({1, 0});
    c.add({0, 1});
    EXPECT_EQ(reference_decode(c, book, 1), bs("000"));
    // a string and its reversal are indistinguishable
    const std::vector<BitString> tied{bs("001"), bs("100")};
    try {
        (void)reference_decode(composition_multiset(bs("001")), tied, 1);
        FAIL() << "expected ReferenceDecodeError";
    } catch (const ReferenceDecodeError& e) {
        EXPECT_EQ(e.minimizers().size(), 2U);
    }
    try {
        (void)reference_decode(composition_multiset(bs("010")), book, 1);
        FAIL() << "expected ReferenceDecodeError";
    } catch (const ReferenceDecodeError& e) {
        EXPECT_TRUE(e.minimizers().empty());
    }
}

TEST(ReferenceDecode, AgreesWithCatalanDecoder) {
    Rng rng(91);
    const CatalanCode code(2 * 9 + 12, 2);
    const ReferenceDecoder reference(code.codebook(), 2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = code.unrank(rng.below(code.count().convert_to<std::uint64_t>()));
        const auto c = composition_multiset(s);
        const auto readout = apply_errors(c, random_pattern(c, rng.below(5), rng));
        std::string mine;
        std::string ref;
        try {
            mine = code.decode(readout).to_string();
        } catch (const CatalanDecodeError&) {
            mine = "fail";
        }
        try {
            ref = reference.decode(readout).to_string();
        } catch (const ReferenceDecodeError&) {
            ref = "fail";
        }
        ASSERT_EQ(mine, ref) << "trial " << trial;
    }
}
