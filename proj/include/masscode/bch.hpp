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

// Binary codes with minimum Hamming distance 2t+1 for the pinned payload: a
// shortened systematic BCH code, and a (2t+1)-fold repetition code.
//
// Bit i of a BCH codeword is the coefficient of x^{N-1-i}, so the payload
// occupies the leading positions verbatim and the parity bits follow.

#ifndef MASSCODE_BCH_HPP
#define MASSCODE_BCH_HPP

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "composition.hpp"

namespace masscode {

class InnerDecodeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// GF(2^m) in the polynomial basis, with log/antilog tables.
class GF2m {
   public:
    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 20;

    /// Primitive polynomial for each degree; bit k is the coefficient of x^k.
    static std::uint32_t primitive_poly(unsigned m) {
        static constexpr std::array<std::uint32_t, 21> table = {
            0,       0,       0x7,     0xB,     0x13,    0x25,    0x43,    0x89,     0x11D,    0x211,    0x409,
            0x805,   0x1053,  0x201B,  0x4443,  0x8003,  0x1100B, 0x20009, 0x40081,  0x80027,  0x100009};
        if (m < kMinDegree || m > kMaxDegree) throw std::invalid_argument("GF2m: degree out of range");
        return table[m];
    }

    explicit GF2m(unsigned m) : m_(m), size_(1U << m) {
        const auto poly = primitive_poly(m);
        exp_.assign(2 * (size_ - 1), 0);
        log_.assign(size_, 0);
        std::uint32_t v = 1;
        for (std::uint32_t e = 0; e + 1 < size_; ++e) {
            if (v == 1 && e != 0) throw std::logic_error("GF2m: polynomial table entry is not primitive");
            exp_[e] = v;
            log_[v] = e;
            v <<= 1U;
            if (v & size_) v ^= poly;
        }
        if (v != 1) throw std::logic_error("GF2m: polynomial table entry is not primitive");
        for (std::uint32_t e = size_ - 1; e < exp_.size(); ++e) exp_[e] = exp_[e - (size_ - 1)];
    }

    [[nodiscard]] unsigned degree() const noexcept { return m_; }
    [[nodiscard]] std::uint32_t order() const noexcept { return size_ - 1; }

    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("GF2m: inverse of zero");
        return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    }
    [[nodiscard]] std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    /// alpha^e for any integer e.
    [[nodiscard]] std::uint32_t alpha_pow(std::int64_t e) const noexcept {
        const std::int64_t ord = size_ - 1;
        auto r = e % ord;
        if (r < 0) r += ord;
        return exp_[static_cast<std::size_t>(r)];
    }

   private:
    unsigned m_;
    std::uint32_t size_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Shortened narrow-sense binary BCH code with designed distance 2t+1.
class BchCode {
   public:
    BchCode(std::size_t payload_bits, std::size_t t) : k_(payload_bits), t_(t), gf_(pick_degree(payload_bits, t)) {
        if (payload_bits == 0) throw std::invalid_argument("BchCode: empty payload");
        if (t == 0) throw std::invalid_argument("BchCode: t must be positive");
        generator_ = build_generator();
        if (k_ + parity_bits() > gf_.order()) throw std::invalid_argument("BchCode: payload too long for GF(2^20)");
    }

    [[nodiscard]] std::size_t payload_bits() const noexcept { return k_; }
    [[nodiscard]] std::size_t parity_bits() const noexcept { return generator_.size() - 1; }
    [[nodiscard]] std::size_t encoded_bits() const noexcept { return k_ + parity_bits(); }
    [[nodiscard]] std::size_t t() const noexcept { return t_; }
    [[nodiscard]] unsigned field_degree() const noexcept { return gf_.degree(); }
    /// Generator polynomial, coefficient of x^k at index k.
    [[nodiscard]] const std::vector<std::uint8_t>& generator() const noexcept { return generator_; }

    [[nodiscard]] BitString encode(const BitString& payload) const {
        if (payload.size() != k_) throw std::invalid_argument("BchCode: payload length mismatch");
        const std::size_t p = parity_bits();
        // remainder of payload(x) * x^p modulo g, by long division from the top
        std::vector<std::uint8_t> reg(p, 0);  // reg[j] = coefficient of x^{p-1-j}
        for (std::size_t i = 0; i < k_; ++i) {
            const std::uint8_t feedback = static_cast<std::uint8_t>(payload[i] ^ (p ? reg[0] : 0));
            for (std::size_t j = 0; j + 1 < p; ++j) reg[j] = static_cast<std::uint8_t>(reg[j + 1] ^ (feedback & generator_[p - 1 - j]));
            if (p) reg[p - 1] = static_cast<std::uint8_t>(feedback & generator_[0]);
        }
        BitString out = payload;
        for (auto b : reg) out.push_back(b);
        return out;
    }

    struct Decoded {
        BitString payload;
        std::size_t corrected = 0;
    };

    /// Corrects up to t bit errors; more are detected when the locator does not split.
    [[nodiscard]] Decoded decode(const BitString& received) const {
        const std::size_t n = encoded_bits();
        if (received.size() != n) throw std::invalid_argument("BchCode: received length mismatch");
        auto synd = syndromes(received);
        bool clean = true;
        for (auto s : synd) clean = clean && s == 0;
        if (clean) return {received.slice(0, k_), 0};

        const auto locator = berlekamp_massey(synd);
        const std::size_t nu = locator.size() - 1;
        if (nu > t_) throw InnerDecodeError("BCH: error locator degree " + std::to_string(nu) + " exceeds t");
        BitString fixed = received;
        std::size_t found = 0;
        for (std::size_t d = 0; d < n; ++d) {
            // error at degree d iff locator(alpha^{-d}) = 0
            const auto z = gf_.alpha_pow(-static_cast<std::int64_t>(d));
            std::uint32_t acc = 0;
            for (std::size_t i = locator.size(); i-- > 0;) acc = gf_.mul(acc, z) ^ locator[i];
            if (acc == 0) {
                const std::size_t pos = n - 1 - d;
                fixed.set(pos, static_cast<std::uint8_t>(fixed[pos] ^ 1U));
                ++found;
            }
        }
        if (found != nu) throw InnerDecodeError("BCH: error locator has roots outside the shortened code");
        for (auto s : syndromes(fixed))
            if (s != 0) throw InnerDecodeError("BCH: residual syndrome after correction");
        return {fixed.slice(0, k_), found};
    }

   private:
    static unsigned pick_degree(std::size_t k, std::size_t t) {
        for (unsigned m = GF2m::kMinDegree; m <= GF2m::kMaxDegree; ++m)
            if (k + m * t < (std::size_t{1} << m)) return m;
        throw std::invalid_argument("BchCode: payload too long");
    }

    static std::vector<std::uint8_t> poly_mul(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
        std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i])
                for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
        return out;
    }

    [[nodiscard]] std::vector<std::uint8_t> build_generator() const {
        std::vector<std::uint8_t> g{1};
        std::set<std::uint32_t> used;
        const std::uint32_t ord = gf_.order();
        for (std::uint32_t i = 1; i <= 2 * t_; ++i) {
            const std::uint32_t r = i % ord;
            if (used.count(r)) continue;
            // minimal polynomial over the cyclotomic coset of r
            std::vector<std::uint32_t> coset;
            std::uint32_t c = r;
            do {
                coset.push_back(c);
                used.insert(c);
                c = static_cast<std::uint32_t>((std::uint64_t{c} * 2) % ord);
            } while (c != r);
            std::vector<std::uint32_t> mp{1};
            for (auto e : coset) {
                const auto root = gf_.alpha_pow(e);
                std::vector<std::uint32_t> next(mp.size() + 1, 0);
                for (std::size_t j = 0; j < mp.size(); ++j) {
                    next[j + 1] ^= mp[j];
                    next[j] ^= gf_.mul(mp[j], root);
                }
                mp = std::move(next);
            }
            std::vector<std::uint8_t> bin(mp.size());
            for (std::size_t j = 0; j < mp.size(); ++j) {
                if (mp[j] > 1) throw std::logic_error("BchCode: minimal polynomial not binary");
                bin[j] = static_cast<std::uint8_t>(mp[j]);
            }
            g = poly_mul(g, bin);
        }
        return g;
    }

    [[nodiscard]] std::vector<std::uint32_t> syndromes(const BitString& r) const {
        const std::size_t n = r.size();
        std::vector<std::uint32_t> s(2 * t_, 0);
        for (std::size_t j = 1; j <= 2 * t_; ++j) {
            std::uint32_t acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (r[i]) acc ^= gf_.alpha_pow(static_cast<std::int64_t>(j * (n - 1 - i)));
            s[j - 1] = acc;
        }
        return s;
    }

    [[nodiscard]] std::vector<std::uint32_t> berlekamp_massey(const std::vector<std::uint32_t>& s) const {
        std::vector<std::uint32_t> c{1};
        std::vector<std::uint32_t> b{1};
        std::size_t len = 0;
        std::size_t shift = 1;
        std::uint32_t last = 1;
        for (std::size_t k = 0; k < s.size(); ++k) {
            std::uint32_t d = s[k];
            for (std::size_t i = 1; i <= len && i < c.size(); ++i) d ^= gf_.mul(c[i], s[k - i]);
            if (d == 0) {
                ++shift;
                continue;
            }
            const auto coef = gf_.div(d, last);
            auto prev = c;
            if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] ^= gf_.mul(coef, b[i]);
            if (2 * len <= k) {
                len = k + 1 - len;
                b = std::move(prev);
                last = d;
                shift = 1;
            } else {
                ++shift;
            }
        }
        c.resize(len + 1, 0);
        return c;
    }

    std::size_t k_;
    std::size_t t_;
    GF2m gf_;
    std::vector<std::uint8_t> generator_;
};

/// Payload followed by 2t further copies; majority vote per bit.
class RepetitionCode {
   public:
    RepetitionCode(std::size_t payload_bits, std::size_t t) : k_(payload_bits), t_(t) {
        if (payload_bits == 0) throw std::invalid_argument("RepetitionCode: empty payload");
    }

    [[nodiscard]] std::size_t payload_bits() const noexcept { return k_; }
    [[nodiscard]] std::size_t encoded_bits() const noexcept { return k_ * (2 * t_ + 1); }
    [[nodiscard]] std::size_t t() const noexcept { return t_; }

    [[nodiscard]] BitString encode(const BitString& payload) const {
        if (payload.size() != k_) throw std::invalid_argument("RepetitionCode: payload length mismatch");
        BitString out;
        for (std::size_t c = 0; c < 2 * t_ + 1; ++c) out.append(payload);
        return out;
    }

    [[nodiscard]] BchCode::Decoded decode(const BitString& received) const {
        if (received.size() != encoded_bits()) throw std::invalid_argument("RepetitionCode: received length mismatch");
        BchCode::Decoded out;
        for (std::size_t i = 0; i < k_; ++i) {
            std::size_t ones = 0;
            for (std::size_t c = 0; c < 2 * t_ + 1; ++c) ones += received[c * k_ + i];
            const std::uint8_t bit = ones > t_ ? 1 : 0;
            out.payload.push_back(bit);
            out.corrected += bit ? (2 * t_ + 1 - ones) : ones;
        }
        return out;
    }

   private:
    std::size_t k_;
    std::size_t t_;
};

enum class InnerCodeKind { Bch, Repetition };

/// Either inner code behind one interface.
class InnerCode {
   public:
    InnerCode(InnerCodeKind kind, std::size_t payload_bits, std::size_t t)
        : code_(kind == InnerCodeKind::Bch ? Variant(std::in_place_type<BchCode>, payload_bits, t)
                                           : Variant(std::in_place_type<RepetitionCode>, payload_bits, t)) {}

    [[nodiscard]] InnerCodeKind kind() const noexcept {
        return std::holds_alternative<BchCode>(code_) ? InnerCodeKind::Bch : InnerCodeKind::Repetition;
    }
    [[nodiscard]] std::size_t payload_bits() const noexcept {
        return std::visit([](const auto& c) { return c.payload_bits(); }, code_);
    }
    [[nodiscard]] std::size_t encoded_bits() const noexcept {
        return std::visit([](const auto& c) { return c.encoded_bits(); }, code_);
    }
    [[nodiscard]] BitString encode(const BitString& payload) const {
        return std::visit([&](const auto& c) { return c.encode(payload); }, code_);
    }
    [[nodiscard]] BchCode::Decoded decode(const BitString& received) const {
        return std::visit([&](const auto& c) { return c.decode(received); }, code_);
    }

   private:
    using Variant = std::variant<BchCode, RepetitionCode>;
    Variant code_;
};

}  // namespace masscode

#endif  // MASSCODE_BCH_HPP
