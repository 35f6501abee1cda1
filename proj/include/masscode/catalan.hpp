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

// Codewords 0^{4t+1} d 1^{4t+1} where d is a Dyck string: as many 0s as 1s, and no
// prefix with more 1s than 0s. Information is carried by the rank of d among the
// Dyck strings of its length, ordered lexicographically with 0 < 1.

#ifndef MASSCODE_CATALAN_HPP
#define MASSCODE_CATALAN_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "composition.hpp"
#include "dominance.hpp"

namespace masscode {

class CatalanDecodeError : public std::runtime_error {
   public:
    enum class Kind { NoCodeword, Ambiguous, TooLarge };
    CatalanDecodeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const noexcept { return kind_; }

   private:
    Kind kind_;
};

/// Number of Dyck strings of length m (0 for odd m).
inline BigInt catalan_rank_count(std::size_t m) {
    if (m % 2 == 1) return 0;
    const std::size_t k = m / 2;
    BigInt c = 1;
    // C_{i+1} = C_i * 2(2i+1) / (i+2)
    for (std::size_t i = 0; i < k; ++i) c = c * (2 * (2 * i + 1)) / (i + 2);
    return c;
}

class CatalanCode {
   public:
    static constexpr std::uint64_t kMaxDecodeCodebook = 1U << 20;

    CatalanCode(std::size_t n, std::size_t t) : n_(n), t_(t) {
        if (t < 1) throw std::invalid_argument("CatalanCode: t must be at least 1");
        if (n < 2 * (4 * t + 1)) throw std::invalid_argument("CatalanCode: n shorter than the fixed prefix and suffix");
        m_ = n - 2 * (4 * t + 1);
        if (m_ % 2 == 1) throw std::invalid_argument("CatalanCode: middle length n - 2(4t+1) must be even");
        // paths_[p][h]: ways to finish from position p at height h
        paths_.assign(m_ + 1, std::vector<BigInt>(m_ / 2 + 2, 0));
        paths_[m_][0] = 1;
        for (std::size_t p = m_; p-- > 0;)
            for (std::size_t h = 0; h <= m_ / 2; ++h) {
                BigInt c = paths_[p + 1][h + 1];
                if (h > 0) c += paths_[p + 1][h - 1];
                paths_[p][h] = c;
            }
        count_ = paths_[0][0];
        info_bits_ = boost::multiprecision::msb(count_);
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t t() const noexcept { return t_; }
    [[nodiscard]] std::size_t middle_length() const noexcept { return m_; }
    [[nodiscard]] std::size_t border() const noexcept { return 4 * t_ + 1; }
    [[nodiscard]] const BigInt& count() const noexcept { return count_; }
    [[nodiscard]] std::size_t info_bits() const noexcept { return info_bits_; }
    [[nodiscard]] double redundancy() const { return static_cast<double>(n_) - log2_big(count_); }

    [[nodiscard]] bool is_codeword(const BitString& s) const {
        if (s.size() != n_) return false;
        const std::size_t b = border();
        for (std::size_t i = 0; i < b; ++i)
            if (s[i] != 0 || s[n_ - 1 - i] != 1) return false;
        std::int64_t h = 0;
        for (std::size_t i = b; i < b + m_; ++i) {
            h += s[i] ? -1 : 1;
            if (h < 0) return false;
        }
        return h == 0;
    }

    [[nodiscard]] BitString unrank(BigInt r) const {
        if (r < 0 || r >= count_) throw std::invalid_argument("CatalanCode::unrank: rank out of range");
        BitString s = BitString::zeros(n_);
        const std::size_t b = border();
        for (std::size_t i = 0; i < b; ++i) s.set(n_ - 1 - i, 1);
        std::size_t h = 0;
        for (std::size_t p = 0; p < m_; ++p) {
            const BigInt& zero_first = paths_[p + 1][h + 1];
            if (h + 1 <= m_ / 2 && r < zero_first) {
                ++h;
            } else {
                if (h + 1 <= m_ / 2) r -= zero_first;
                s.set(b + p, 1);
                --h;
            }
        }
        return s;
    }

    [[nodiscard]] BigInt rank(const BitString& s) const {
        if (!is_codeword(s)) throw std::invalid_argument("CatalanCode::rank: not a codeword");
        BigInt r = 0;
        std::size_t h = 0;
        const std::size_t b = border();
        for (std::size_t p = 0; p < m_; ++p) {
            if (s[b + p] == 0) {
                ++h;
            } else {
                if (h + 1 <= m_ / 2) r += paths_[p + 1][h + 1];
                --h;
            }
        }
        return r;
    }

    [[nodiscard]] BitString encode(const BitString& info) const {
        if (info.size() != info_bits_)
            throw std::invalid_argument("CatalanCode::encode: expected " + std::to_string(info_bits_) +
                                        " information bits, got " + std::to_string(info.size()));
        return unrank(bits_to_big(info));
    }

    /// Information bits of a codeword; codewords ranked beyond 2^info_bits carry none.
    [[nodiscard]] BitString info_of(const BitString& s) const {
        const BigInt r = rank(s);
        if ((r >> info_bits_) != 0) throw std::invalid_argument("CatalanCode: codeword outside the information range");
        return big_to_bits(r, info_bits_);
    }

    [[nodiscard]] std::vector<BitString> codebook() const {
        if (count_ > kMaxDecodeCodebook) throw std::invalid_argument("CatalanCode: codebook too large to list");
        std::vector<BitString> out;
        const auto total = count_.convert_to<std::uint64_t>();
        out.reserve(total);
        for (std::uint64_t r = 0; r < total; ++r) out.push_back(unrank(r));
        return out;
    }

    /**
     * The unique codeword within t substitutions of the readout, by exhaustive search.
     * Candidates whose weight is more than t away from the ones in C_1 are skipped,
     * and distance accumulation stops once it passes t.
     */
    [[nodiscard]] BitString decode(const CompositionMultiset& readout) const {
        if (readout.n() != n_) throw std::invalid_argument("CatalanCode::decode: length mismatch");
        if (!readout.has_string_counts()) throw std::invalid_argument("CatalanCode::decode: class sizes do not match n");
        if (count_ > kMaxDecodeCodebook)
            throw CatalanDecodeError(CatalanDecodeError::Kind::TooLarge, "codebook too large for exhaustive decoding");
        const auto observed = static_cast<std::int64_t>(readout.cls(1).count(1));
        const auto weight = static_cast<std::int64_t>(n_ / 2);  // every codeword has n/2 ones
        if (std::abs(observed - weight) > static_cast<std::int64_t>(t_))
            throw CatalanDecodeError(CatalanDecodeError::Kind::NoCodeword, "no codeword within t substitutions");
        std::vector<BitString> hits;
        for (auto& s : codebook())
            if (within(readout, s)) hits.push_back(std::move(s));
        if (hits.empty())
            throw CatalanDecodeError(CatalanDecodeError::Kind::NoCodeword, "no codeword within t substitutions");
        if (hits.size() > 1)
            throw CatalanDecodeError(CatalanDecodeError::Kind::Ambiguous,
                                     std::to_string(hits.size()) + " codewords within t substitutions");
        return hits.front();
    }

   private:
    [[nodiscard]] bool within(const CompositionMultiset& readout, const BitString& s) const {
        const auto prefix = detail::prefix_weights(s);
        std::vector<std::uint32_t> scratch;
        std::uint64_t sym = 0;
        for (std::size_t l = 1; l <= n_; ++l) {
            const auto cls = detail::window_class(prefix, l, scratch);
            const auto& other = readout.cls(l);
            const std::uint32_t lo = std::min(cls.min_ones(), other.min_ones());
            const std::uint32_t hi = std::max(cls.max_ones(), other.max_ones());
            for (std::uint32_t w = lo; w <= hi; ++w) {
                const auto a = cls.count(w);
                const auto b = other.count(w);
                sym += a > b ? a - b : b - a;
            }
            if (sym > 2 * t_) return false;
        }
        return true;
    }

    std::size_t n_;
    std::size_t t_;
    std::size_t m_ = 0;
    std::vector<std::vector<BigInt>> paths_;
    BigInt count_;
    std::size_t info_bits_ = 0;
};

}  // namespace masscode

#endif  // MASSCODE_CATALAN_HPP
