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

#include <masscode/sparse.hpp>

#include "oracles.hpp"

using namespace masscode;

namespace {

/// Window samples computed with the naive oracle, not the library evaluator.
EvaluationWindow naive_window(const PrimeField& f, const std::map<std::uint32_t, std::uint32_t>& terms,
                              std::int64_t h) {
    const std::uint64_t q = f.modulus();
    const std::uint64_t a = f.primitive().value;
    EvaluationWindow w{h, {}};
    for (std::int64_t l = -h; l <= h; ++l) {
        std::uint64_t acc = 0;
        for (auto [e, c] : terms) acc = (acc + c * oracle::powmod(a, static_cast<std::int64_t>(e) * l, q)) % q;
        w.samples.push_back({static_cast<std::uint32_t>(acc)});
    }
    return w;
}

SparseUnivariate as_sparse(const std::map<std::uint32_t, std::uint32_t>& terms) {
    SparseUnivariate p;
    for (auto [e, c] : terms) p.terms.emplace(e, FieldElement{c});
    return p;
}

std::map<std::uint32_t, std::uint32_t> random_terms(std::mt19937_64& rng, std::size_t count, std::uint32_t bound,
                                                    std::uint32_t q) {
    std::map<std::uint32_t, std::uint32_t> out;
    while (out.size() < count) out.emplace(static_cast<std::uint32_t>(rng() % (bound + 1)), 1 + rng() % (q - 1));
    return out;
}

}  // namespace

TEST(RecoverSparse, WorkedExample) {
    const PrimeField f(13, 2);
    EvaluationWindow w{1, {{5}, {1}, {8}}};
    const auto p = recover_sparse(f, w, 1, 11);
    ASSERT_EQ(p.terms.size(), 1U);
    EXPECT_EQ(p.terms.begin()->first, 3U);
    EXPECT_EQ(p.terms.begin()->second.value, 1U);
}

TEST(RecoverSparse, ZeroPolynomial) {
    const PrimeField f(13, 2);
    EvaluationWindow w{2, std::vector<FieldElement>(5)};
    EXPECT_TRUE(recover_sparse(f, w, 2, 11).terms.empty());
}

TEST(RecoverSparse, RandomOverField64) {
    const auto f = find_field(64);
    const std::uint32_t bound = f.modulus() - 2;
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t sparsity = 1 + rng() % 12;
        const std::size_t count = rng() % (sparsity + 1);
        const auto terms = random_terms(rng, count, bound, f.modulus());
        const auto w = naive_window(f, terms, static_cast<std::int64_t>(sparsity));
        ASSERT_EQ(w.samples, evaluate_window(f, as_sparse(terms), static_cast<std::int64_t>(sparsity)).samples);
        ASSERT_EQ(recover_sparse(f, w, sparsity, bound), as_sparse(terms)) << "trial " << trial;
    }
}

TEST(RecoverSparse, ExhaustiveOneAndTwoTerms) {
    for (std::uint32_t q : {7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U}) {
        const PrimeField f(q, static_cast<std::uint32_t>(oracle::smallest_generator(q)));
        const std::uint32_t bound = q - 2;
        for (std::uint32_t e1 = 0; e1 <= bound; ++e1)
            for (std::uint32_t c1 = 1; c1 < q; ++c1) {
                const std::map<std::uint32_t, std::uint32_t> one{{e1, c1}};
                ASSERT_EQ(recover_sparse(f, naive_window(f, one, 1), 1, bound), as_sparse(one));
                for (std::uint32_t e2 = e1 + 1; e2 <= bound; ++e2) {
                    const std::uint32_t c2 = 1 + (c1 * 7 + e2) % (q - 1);
                    const std::map<std::uint32_t, std::uint32_t> two{{e1, c1}, {e2, c2}};
                    ASSERT_EQ(recover_sparse(f, naive_window(f, two, 2), 2, bound), as_sparse(two))
                        << "q=" << q << " e=" << e1 << "," << e2;
                }
            }
    }
}

TEST(RecoverSparse, SparsityExceeded) {
    const auto f = find_field(64);
    const std::map<std::uint32_t, std::uint32_t> terms{{1, 1}, {5, 2}, {9, 3}, {40, 4}};
    try {
        (void)recover_sparse(f, naive_window(f, terms, 3), 3, f.modulus() - 2);
        FAIL() << "expected SparseRecoveryError";
    } catch (const SparseRecoveryError& e) {
        EXPECT_EQ(e.kind(), SparseRecoveryError::Kind::Sparsity);
        EXPECT_EQ(e.stage(), 0);
    }
}

TEST(RecoverSparse, ExponentBoundExceeded) {
    const auto f = find_field(64);
    const std::map<std::uint32_t, std::uint32_t> terms{{3, 1}, {100, 2}};
    try {
        (void)recover_sparse(f, naive_window(f, terms, 2), 2, 50);
        FAIL() << "expected SparseRecoveryError";
    } catch (const SparseRecoveryError& e) {
        EXPECT_EQ(e.kind(), SparseRecoveryError::Kind::ExponentBound);
    }
}

TEST(RecoverSparse, BadArguments) {
    const PrimeField f(13, 2);
    EvaluationWindow w{1, {{5}, {1}, {8}}};
    EXPECT_THROW((void)recover_sparse(f, w, 1, 12), std::invalid_argument);
    EXPECT_THROW((void)recover_sparse(f, w, 2, 11), std::invalid_argument);
    EvaluationWindow short_w{1, {{5}, {1}}};
    EXPECT_THROW((void)recover_sparse(f, short_w, 1, 11), std::invalid_argument);
}

TEST(RecoverBivariate, WorkedExample) {
    const auto f = find_field(8);
    FieldPoly p{FieldRing(f)};
    p.add_term(2, 3, f.one());
    p.add_term(5, 0, f.neg(f.one()));
    const auto grid = evaluate_grid(f, p, 2);
    EXPECT_EQ(grid.side(), 5U);
    const auto r = recover_bivariate(f, grid, 2, 16, 16);
    EXPECT_EQ(r, p);
    EXPECT_EQ(r.to_string(), "1*x^2*y^3 + -1*x^5*y^0");
}

TEST(RecoverBivariate, GridMatchesNaive) {
    const auto f = find_field(40);
    std::mt19937_64 rng(42);
    FieldPoly p{FieldRing(f)};
    oracle::Laurent naive;
    for (int k = 0; k < 4; ++k) {
        const int i = static_cast<int>(rng() % 40);
        const int j = static_cast<int>(rng() % 40);
        const long long c = 1 + static_cast<long long>(rng() % (f.modulus() - 1));
        if (naive.count({i, j})) continue;
        p.add_term(i, j, f.element(c));
        oracle::add(naive, i, j, c);
    }
    const auto grid = evaluate_grid(f, p, 4);
    const std::uint64_t a = f.primitive().value;
    for (std::int64_t l2 = -4; l2 <= 4; ++l2)
        for (std::int64_t l1 = -4; l1 <= 4; ++l1) {
            const auto x = oracle::powmod(a, l1, f.modulus());
            const auto y = oracle::powmod(a, l2, f.modulus());
            ASSERT_EQ(grid.at(l1, l2).value, oracle::eval(naive, x, y, f.modulus()));
        }
}

TEST(RecoverBivariate, RandomErrorShapes) {
    std::mt19937_64 rng(43);
    for (std::size_t t = 1; t <= 3; ++t) {
        const std::size_t n = 200 * t;
        const auto f = find_field(n);
        const std::uint64_t bound = 2 * n;
        for (int trial = 0; trial < 40; ++trial) {
            FieldPoly p{FieldRing(f)};
            const std::size_t terms = 1 + rng() % (4 * t);
            // shared x- or y-exponents exercise the column stage
            const auto shared = static_cast<std::int64_t>(rng() % (bound + 1));
            while (p.size() < terms) {
                const auto i = rng() % 2 ? shared : static_cast<std::int64_t>(rng() % (bound + 1));
                const auto j = static_cast<std::int64_t>(rng() % (bound + 1));
                if (p.coeff(i, j).value != 0) continue;
                p.add_term(i, j, f.element(static_cast<std::int64_t>(1 + rng() % (f.modulus() - 1))));
            }
            const auto grid = evaluate_grid(f, p, static_cast<std::int64_t>(4 * t));
            ASSERT_EQ(recover_error_poly(f, grid, t, bound, bound), p) << "t=" << t << " trial " << trial;
        }
        EXPECT_THROW((void)recover_error_poly(f, EvaluationGrid(static_cast<std::int64_t>(4 * t - 1)), t, bound, bound),
                     std::invalid_argument);
    }
}

TEST(RecoverBivariate, TooManyTerms) {
    const auto f = find_field(64);
    FieldPoly p{FieldRing(f)};
    for (int k = 0; k < 6; ++k) p.add_term(k * 7 + 1, k * 3 + 2, f.one());
    const auto grid = evaluate_grid(f, p, 4);
    EXPECT_THROW((void)recover_error_poly(f, grid, 1, 128, 128), SparseRecoveryError);
}
