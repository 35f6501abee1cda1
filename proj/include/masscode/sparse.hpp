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

// Sparse polynomial recovery from evaluations at consecutive powers of alpha.
//
// A sample window holds E(alpha^l) for l = -T..T. Berlekamp-Massey finds the
// shortest linear recurrence, a full scan over alpha^e locates its roots, and a
// Vandermonde solve gives the coefficients. The bivariate version recovers each
// row E(x, alpha^l2) first and then each x-exponent's coefficient polynomial in y.

#ifndef MASSCODE_SPARSE_HPP
#define MASSCODE_SPARSE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "polybiv.hpp"

namespace masscode {

class SparseRecoveryError : public std::runtime_error {
   public:
    enum class Kind { Sparsity, ExponentBound };
    /// Stage 0 is a standalone univariate recovery, 1 a grid row, 2 a grid column.
    SparseRecoveryError(Kind kind, int stage, std::int64_t index, const std::string& what)
        : std::runtime_error(what), kind_(kind), stage_(stage), index_(index) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int stage() const noexcept { return stage_; }
    [[nodiscard]] std::int64_t index() const noexcept { return index_; }

   private:
    Kind kind_;
    int stage_;
    std::int64_t index_;
};

/// Samples E(alpha^l) for l in [-half_width, half_width], stored by increasing l.
struct EvaluationWindow {
    std::int64_t half_width = 0;
    std::vector<FieldElement> samples;

    [[nodiscard]] FieldElement at(std::int64_t l) const { return samples.at(static_cast<std::size_t>(l + half_width)); }
};

struct SparseUnivariate {
    std::map<std::uint32_t, FieldElement> terms;  // exponent -> nonzero coefficient

    friend bool operator==(const SparseUnivariate&, const SparseUnivariate&) = default;
};

inline FieldElement evaluate_at_power(const PrimeField& f, const SparseUnivariate& p, std::int64_t l) {
    FieldElement acc = f.zero();
    for (const auto& [e, c] : p.terms) acc = f.add(acc, f.mul(c, f.alpha_pow(static_cast<std::int64_t>(e) * l)));
    return acc;
}

inline EvaluationWindow evaluate_window(const PrimeField& f, const SparseUnivariate& p, std::int64_t half_width) {
    EvaluationWindow w{half_width, {}};
    w.samples.reserve(static_cast<std::size_t>(2 * half_width + 1));
    for (std::int64_t l = -half_width; l <= half_width; ++l) w.samples.push_back(evaluate_at_power(f, p, l));
    return w;
}

namespace detail {

/// Connection polynomial 1 + c_1 z + ... + c_L z^L of the shortest LFSR generating `a`.
inline std::vector<FieldElement> berlekamp_massey(const PrimeField& f, const std::vector<FieldElement>& a) {
    std::vector<FieldElement> c{f.one()};
    std::vector<FieldElement> b{f.one()};
    std::size_t len = 0;
    std::size_t shift = 1;
    FieldElement last = f.one();
    for (std::size_t k = 0; k < a.size(); ++k) {
        FieldElement d = a[k];
        for (std::size_t i = 1; i <= len && i < c.size(); ++i) d = f.add(d, f.mul(c[i], a[k - i]));
        if (d.value == 0) {
            ++shift;
            continue;
        }
        const FieldElement coef = f.div(d, last);
        auto prev = c;
        if (c.size() < b.size() + shift) c.resize(b.size() + shift, f.zero());
        for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] = f.sub(c[i + shift], f.mul(coef, b[i]));
        if (2 * len <= k) {
            len = k + 1 - len;
            b = std::move(prev);
            last = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(len + 1, f.zero());
    return c;
}

/// Solves the square system m * x = rhs over F_q; throws if singular.
inline std::vector<FieldElement> solve_linear(const PrimeField& f, std::vector<std::vector<FieldElement>> m,
                                              std::vector<FieldElement> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].value == 0) ++piv;
        if (piv == n) throw ArithmeticError("singular system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const auto inv = f.inv(m[col][col]);
        for (std::size_t j = col; j < n; ++j) m[col][j] = f.mul(m[col][j], inv);
        rhs[col] = f.mul(rhs[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].value == 0) continue;
            const auto factor = m[r][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
            rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
        }
    }
    return rhs;
}

}  // namespace detail

/**
 * Recovers the unique polynomial with at most `sparsity` terms and exponents in
 * [0, exponent_bound] whose evaluations match the window.
 *
 * Requires exponent_bound < q - 1 and half_width >= sparsity. The result re-evaluates
 * to every sample exactly; anything else raises SparseRecoveryError.
 */
inline SparseUnivariate recover_sparse(const PrimeField& f, const EvaluationWindow& w, std::size_t sparsity,
                                       std::uint64_t exponent_bound, int stage = 0, std::int64_t index = 0) {
    using Kind = SparseRecoveryError::Kind;
    if (exponent_bound >= f.order())
        throw std::invalid_argument("recover_sparse: exponent bound must be below q-1");
    if (w.half_width < static_cast<std::int64_t>(sparsity) ||
        w.samples.size() != static_cast<std::size_t>(2 * w.half_width + 1))
        throw std::invalid_argument("recover_sparse: window too small for the sparsity bound");

    auto fail = [&](Kind k, const std::string& msg) { return SparseRecoveryError(k, stage, index, msg); };

    // a_k = E(alpha^{k - half_width}) is a sum of geometric sequences in beta_m = alpha^{e_m}
    const auto conn = detail::berlekamp_massey(f, w.samples);
    const std::size_t order = conn.size() - 1;
    SparseUnivariate out;
    if (order == 0) return out;
    if (order > sparsity)
        throw fail(Kind::Sparsity, "recurrence order " + std::to_string(order) + " exceeds sparsity bound " +
                                       std::to_string(sparsity));

    // beta is a root of the characteristic polynomial iff conn(beta^{-1}) = 0
    std::vector<std::uint32_t> exps;
    for (std::uint32_t e = 0; e < f.order(); ++e) {
        const auto z = f.alpha_pow(-static_cast<std::int64_t>(e));
        FieldElement acc = f.zero();
        for (std::size_t i = order + 1; i-- > 0;) acc = f.add(f.mul(acc, z), conn[i]);
        if (acc.value == 0) exps.push_back(e);
    }
    if (exps.size() != order)
        throw fail(Kind::Sparsity, "characteristic polynomial has " + std::to_string(exps.size()) +
                                       " distinct roots in F_q, expected " + std::to_string(order));
    for (auto e : exps)
        if (e > exponent_bound)
            throw fail(Kind::ExponentBound,
                       "root exponent " + std::to_string(e) + " exceeds bound " + std::to_string(exponent_bound));

    // d_m = c_m beta_m^{-half_width}; sum_m d_m beta_m^k = a_k for k < order
    std::vector<std::vector<FieldElement>> m(order, std::vector<FieldElement>(order));
    std::vector<FieldElement> rhs(order);
    for (std::size_t k = 0; k < order; ++k) {
        for (std::size_t j = 0; j < order; ++j)
            m[k][j] = f.alpha_pow(static_cast<std::int64_t>(exps[j]) * static_cast<std::int64_t>(k));
        rhs[k] = w.samples[k];
    }
    const auto d = detail::solve_linear(f, std::move(m), std::move(rhs));
    for (std::size_t j = 0; j < order; ++j) {
        const auto c = f.mul(d[j], f.alpha_pow(static_cast<std::int64_t>(exps[j]) * w.half_width));
        if (c.value == 0) throw fail(Kind::Sparsity, "zero coefficient at a recurrence root");
        out.terms.emplace(exps[j], c);
    }
    for (std::int64_t l = -w.half_width; l <= w.half_width; ++l)
        if (evaluate_at_power(f, out, l) != w.at(l))
            throw fail(Kind::Sparsity, "recovered polynomial does not reproduce sample at l=" + std::to_string(l));
    return out;
}

/// Values at (alpha^l1, alpha^l2) for l1, l2 in [-half_width, half_width]; row-major in l2.
class EvaluationGrid {
   public:
    explicit EvaluationGrid(std::int64_t half_width)
        : h_(half_width), v_(static_cast<std::size_t>((2 * half_width + 1) * (2 * half_width + 1))) {}

    [[nodiscard]] std::int64_t half_width() const noexcept { return h_; }
    [[nodiscard]] std::size_t side() const noexcept { return static_cast<std::size_t>(2 * h_ + 1); }

    [[nodiscard]] FieldElement& at(std::int64_t l1, std::int64_t l2) { return v_.at(index(l1, l2)); }
    [[nodiscard]] FieldElement at(std::int64_t l1, std::int64_t l2) const { return v_.at(index(l1, l2)); }
    [[nodiscard]] const std::vector<FieldElement>& values() const noexcept { return v_; }

    friend bool operator==(const EvaluationGrid&, const EvaluationGrid&) = default;

   private:
    [[nodiscard]] std::size_t index(std::int64_t l1, std::int64_t l2) const {
        if (l1 < -h_ || l1 > h_ || l2 < -h_ || l2 > h_) throw std::out_of_range("EvaluationGrid index");
        return static_cast<std::size_t>((l2 + h_) * (2 * h_ + 1) + (l1 + h_));
    }

    std::int64_t h_;
    std::vector<FieldElement> v_;
};

/// Evaluates a field polynomial with nonnegative exponents on the whole grid.
inline EvaluationGrid evaluate_grid(const PrimeField& f, const FieldPoly& p, std::int64_t half_width) {
    EvaluationGrid g(half_width);
    for (std::int64_t l2 = -half_width; l2 <= half_width; ++l2)
        for (std::int64_t l1 = -half_width; l1 <= half_width; ++l1) {
            FieldElement acc = f.zero();
            p.for_each([&](std::int64_t i, std::int64_t j, FieldElement c) {
                acc = f.add(acc, f.mul(c, f.alpha_pow(i * l1 + j * l2)));
            });
            g.at(l1, l2) = acc;
        }
    return g;
}

/**
 * Two-stage recovery of a bivariate polynomial with at most `sparsity` terms,
 * x-exponents <= bound_x and y-exponents <= bound_y, from its values on the grid.
 * The grid half-width must be at least `sparsity`.
 */
inline FieldPoly recover_bivariate(const PrimeField& f, const EvaluationGrid& grid, std::size_t sparsity,
                                   std::uint64_t bound_x, std::uint64_t bound_y) {
    const auto h = grid.half_width();
    // stage 1: rows E(x, alpha^l2)
    std::vector<SparseUnivariate> rows;
    rows.reserve(grid.side());
    std::set<std::uint32_t> xs;
    for (std::int64_t l2 = -h; l2 <= h; ++l2) {
        EvaluationWindow w{h, {}};
        w.samples.reserve(grid.side());
        for (std::int64_t l1 = -h; l1 <= h; ++l1) w.samples.push_back(grid.at(l1, l2));
        rows.push_back(recover_sparse(f, w, sparsity, bound_x, 1, l2));
        for (const auto& [e, c] : rows.back().terms) xs.insert(e);
    }
    if (xs.size() > sparsity)
        throw SparseRecoveryError(SparseRecoveryError::Kind::Sparsity, 1, 0,
                                  "rows use " + std::to_string(xs.size()) + " distinct x-exponents");

    // stage 2: for each x-exponent, its coefficient across rows samples M_i(alpha^l2)
    FieldPoly out{FieldRing(f)};
    for (auto xe : xs) {
        EvaluationWindow w{h, {}};
        w.samples.reserve(grid.side());
        for (const auto& row : rows) {
            auto it = row.terms.find(xe);
            w.samples.push_back(it == row.terms.end() ? f.zero() : it->second);
        }
        const auto col = recover_sparse(f, w, sparsity, bound_y, 2, xe);
        for (const auto& [ye, c] : col.terms) out.add_term(xe, ye, c);
    }
    if (out.size() > sparsity)
        throw SparseRecoveryError(SparseRecoveryError::Kind::Sparsity, 2, 0,
                                  "recovered " + std::to_string(out.size()) + " terms");
    return out;
}

/// Error-polynomial recovery: at most 4t terms from the (8t+1) x (8t+1) grid.
inline FieldPoly recover_error_poly(const PrimeField& f, const EvaluationGrid& grid, std::size_t t,
                                    std::uint64_t bound_x, std::uint64_t bound_y) {
    if (grid.half_width() != static_cast<std::int64_t>(4 * t))
        throw std::invalid_argument("recover_error_poly: grid half-width must be 4t");
    return recover_bivariate(f, grid, 4 * t, bound_x, bound_y);
}

}  // namespace masscode

#endif  // MASSCODE_SPARSE_HPP
