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

#ifndef MASSCODE_FIELD_HPP
#define MASSCODE_FIELD_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace masscode {

/// Raised for undefined field operations (inverse of zero, logarithm of zero).
class ArithmeticError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

constexpr bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d != 0) continue;
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    if (v > 1) out.push_back(v);
    return out;
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = result * base % m;
        base = base * base % m;
        exp >>= 1U;
    }
    return result;
}

inline bool is_primitive(std::uint64_t g, std::uint64_t q, const std::vector<std::uint64_t>& factors) {
    if (g % q == 0) return false;
    for (auto p : factors)
        if (pow_mod(g, (q - 1) / p, q) == 1) return false;
    return true;
}

}  // namespace detail

/**
 * The prime field F_q together with a fixed primitive element alpha.
 *
 * Powers of alpha and discrete logarithms are table-driven below kDlogTableLimit;
 * above it logarithms use baby-step/giant-step. Instances are immutable and share
 * their tables on copy, so passing a PrimeField by value is cheap.
 */
class PrimeField {
   public:
    static constexpr std::uint32_t kDlogTableLimit = 1U << 20;
    static constexpr std::uint32_t kMaxModulus = (1U << 31) - 1;

    PrimeField(std::uint32_t q, std::uint32_t alpha) : q_(q), alpha_(alpha) {
        if (q < 3 || q > kMaxModulus || !detail::is_prime(q))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) + " is not an odd prime");
        const auto factors = detail::distinct_prime_factors(q - 1);
        if (alpha < 2) throw std::invalid_argument("PrimeField: alpha must lie in [2, q-1]");
        if (alpha >= q || !detail::is_primitive(alpha, q, factors))
            throw std::invalid_argument("PrimeField: " + std::to_string(alpha) + " is not primitive mod " +
                                        std::to_string(q));
        tables_ = std::make_shared<Tables>(build_tables(q, alpha));
    }

    [[nodiscard]] std::uint32_t modulus() const noexcept { return q_; }
    [[nodiscard]] std::uint32_t order() const noexcept { return q_ - 1; }
    [[nodiscard]] FieldElement primitive() const noexcept { return {alpha_}; }

    [[nodiscard]] FieldElement zero() const noexcept { return {0}; }
    [[nodiscard]] FieldElement one() const noexcept { return {1}; }

    [[nodiscard]] FieldElement element(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return {static_cast<std::uint32_t>(r)};
    }

    /// Maps a canonical representative back to (-q/2, q/2].
    [[nodiscard]] std::int64_t signed_value(FieldElement a) const noexcept {
        return a.value > q_ / 2 ? static_cast<std::int64_t>(a.value) - q_ : a.value;
    }

    [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const noexcept {
        std::uint32_t s = a.value + b.value;
        return {s >= q_ ? s - q_ : s};
    }
    [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const noexcept {
        return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
    }
    [[nodiscard]] FieldElement neg(FieldElement a) const noexcept { return {a.value == 0 ? 0 : q_ - a.value}; }
    [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % q_)};
    }

    [[nodiscard]] FieldElement inv(FieldElement a) const {
        if (a.value == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(q_));
        return {static_cast<std::uint32_t>(detail::pow_mod(a.value, q_ - 2, q_))};
    }

    [[nodiscard]] FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    /// Negative exponents go through the inverse; pow(0, 0) is 1.
    [[nodiscard]] FieldElement pow(FieldElement a, std::int64_t e) const {
        if (e == 0) return one();
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        return {static_cast<std::uint32_t>(detail::pow_mod(a.value, static_cast<std::uint64_t>(e), q_))};
    }

    /// alpha^e for any integer e.
    [[nodiscard]] FieldElement alpha_pow(std::int64_t e) const noexcept {
        const std::int64_t ord = q_ - 1;
        auto r = e % ord;
        if (r < 0) r += ord;
        if (!tables_->powers.empty()) return {tables_->powers[static_cast<std::size_t>(r)]};
        return {static_cast<std::uint32_t>(detail::pow_mod(alpha_, static_cast<std::uint64_t>(r), q_))};
    }

    /// The unique e in [0, q-2] with alpha^e = x.
    [[nodiscard]] std::uint32_t dlog(FieldElement x) const {
        if (x.value == 0 || x.value >= q_) throw ArithmeticError("discrete logarithm of zero");
        if (!tables_->logs.empty()) return tables_->logs[x.value];
        return baby_step_giant_step(x.value);
    }

    /// Read-only view of alpha^0 .. alpha^{q-2}; empty above the table limit.
    [[nodiscard]] const std::vector<std::uint32_t>& power_table() const noexcept { return tables_->powers; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
        return a.q_ == b.q_ && a.alpha_ == b.alpha_;
    }

   private:
    struct Tables {
        std::vector<std::uint32_t> powers;
        std::vector<std::uint32_t> logs;
        // giant-step data for large moduli
        std::uint32_t step = 0;
        std::unordered_map<std::uint32_t, std::uint32_t> baby;
    };

    static Tables build_tables(std::uint32_t q, std::uint32_t alpha) {
        Tables t;
        if (q <= kDlogTableLimit) {
            t.powers.resize(q - 1);
            t.logs.assign(q, 0);
            std::uint64_t cur = 1;
            for (std::uint32_t e = 0; e + 1 < q; ++e) {
                t.powers[e] = static_cast<std::uint32_t>(cur);
                t.logs[cur] = e;
                cur = cur * alpha % q;
            }
        } else {
            t.step = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(q - 1))));
            t.baby.reserve(t.step);
            std::uint64_t cur = 1;
            for (std::uint32_t j = 0; j < t.step; ++j) {
                t.baby.emplace(static_cast<std::uint32_t>(cur), j);
                cur = cur * alpha % q;
            }
        }
        return t;
    }

    [[nodiscard]] std::uint32_t baby_step_giant_step(std::uint32_t x) const {
        const auto& t = *tables_;
        // alpha^{-step}
        const std::uint64_t giant = detail::pow_mod(detail::pow_mod(alpha_, q_ - 2, q_), t.step, q_);
        std::uint64_t gamma = x;
        for (std::uint32_t i = 0; i <= t.step; ++i) {
            if (auto it = t.baby.find(static_cast<std::uint32_t>(gamma)); it != t.baby.end()) {
                return static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * t.step + it->second) % (q_ - 1));
            }
            gamma = gamma * giant % q_;
        }
        throw ArithmeticError("discrete logarithm not found");  // unreachable for a primitive alpha
    }

    std::uint32_t q_;
    std::uint32_t alpha_;
    std::shared_ptr<const Tables> tables_;
};

/**
 * Field used by a codec instance of length n: the smallest odd prime q with
 * q - 1 > 2n, and its smallest primitive element.
 *
 * Exponents of the shifted error polynomial range over [0, 2n]; q - 1 > 2n keeps
 * alpha^e injective on that range.
 */
inline PrimeField find_field(std::size_t n) {
    if (n < 1) throw std::invalid_argument("find_field: n must be positive");
    std::uint64_t q = 2 * static_cast<std::uint64_t>(n) + 2;
    if (q < 3) q = 3;
    while (!detail::is_prime(q)) ++q;
    if (q > PrimeField::kMaxModulus) throw std::invalid_argument("find_field: n too large");
    const auto factors = detail::distinct_prime_factors(q - 1);
    std::uint64_t g = 2;
    while (!detail::is_primitive(g, q, factors)) ++g;
    return PrimeField(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(g));
}

/// Number of bits needed to write any element of F_q.
inline std::size_t element_bits(const PrimeField& f) noexcept {
    std::size_t b = 0;
    while ((std::uint64_t{1} << b) < f.modulus()) ++b;
    return b;
}

}  // namespace masscode

#endif  // MASSCODE_FIELD_HPP
