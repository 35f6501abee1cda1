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

// Enumerative code for strings whose prefixes out-zero their mirrored suffixes.
//
// Pair j (1-based) of a length-m string is (u_j, u_{m+1-j}) and steps the walk by
// d_j = u_{m+1-j} - u_j. The first J = max(1, floor(m/2) - 1) pairs must keep every
// partial sum d_1 + ... + d_j >= 1; any remaining pair and the middle bit of an odd
// length are unconstrained. Ranks are ordered walk-first, with pairs listed as
// (0,0) < (0,1) < (1,0) < (1,1), then the free part read as base-4 digits and a
// final middle bit.

#ifndef MASSCODE_DOMINANCE_HPP
#define MASSCODE_DOMINANCE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "composition.hpp"

namespace masscode {

using BigInt = boost::multiprecision::cpp_int;

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log2_big: nonpositive argument");
    const std::size_t msb = boost::multiprecision::msb(v);
    if (msb < 53) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (msb - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(msb - 52);
}

/// MSB-first bits to integer.
inline BigInt bits_to_big(const BitString& b) {
    BigInt r = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        r <<= 1;
        if (b[i]) r |= 1;
    }
    return r;
}

/// Integer to exactly `width` MSB-first bits; throws if it does not fit.
inline BitString big_to_bits(const BigInt& v, std::size_t width) {
    if (v < 0 || (v != 0 && boost::multiprecision::msb(v) >= width))
        throw std::invalid_argument("big_to_bits: value does not fit");
    BitString out = BitString::zeros(width);
    for (std::size_t i = 0; i < width; ++i)
        if (boost::multiprecision::bit_test(v, width - 1 - i)) out.set(i, 1);
    return out;
}

/// Whether u satisfies the pair-walk condition described at the top of this file.
inline bool dominance_holds(const BitString& u) {
    const std::size_t m = u.size();
    if (m < 2) return false;
    const std::size_t constrained = std::max<std::size_t>(1, m / 2 - 1);
    std::int64_t h = 0;
    for (std::size_t j = 0; j < constrained; ++j) {
        h += static_cast<std::int64_t>(u[m - 1 - j]) - u[j];
        if (h < 1) return false;
    }
    return true;
}

class DominanceCode {
   public:
    explicit DominanceCode(std::size_t m)
        : m_(m), pairs_(m / 2), walk_(std::max<std::size_t>(1, m / 2 - 1)) {
        if (m < 2) throw std::invalid_argument("DominanceCode: length must be at least 2");
        pow4_.resize(walk_ + 1);
        pow4_[0] = 1;
        for (std::size_t i = 1; i <= walk_; ++i) pow4_[i] = pow4_[i - 1] * 4;
        free_ = BigInt(1) << (2 * (pairs_ - walk_) + (m % 2));
        table_.resize(walk_);
        for (std::size_t j = walk_; j-- > 0;) {
            table_[j].resize(std::min(j, walk_ - j) + 1);
            for (std::size_t h = 0; h < table_[j].size(); ++h) {
                BigInt c = completions(j + 1, h + 1);
                if (h >= 1) c += 2 * completions(j + 1, h);
                if (h >= 2) c += completions(j + 1, h - 1);
                table_[j][h] = std::move(c);
            }
        }
        count_ = completions(0, 0) * free_;
        info_bits_ = boost::multiprecision::msb(count_);
    }

    [[nodiscard]] std::size_t length() const noexcept { return m_; }
    [[nodiscard]] std::size_t constrained_pairs() const noexcept { return walk_; }
    [[nodiscard]] const BigInt& count() const noexcept { return count_; }
    /// floor(log2 count): the number of information bits carried.
    [[nodiscard]] std::size_t info_bits() const noexcept { return info_bits_; }
    /// m - log2(count), the cost of the constraint in bits.
    [[nodiscard]] double redundancy() const { return static_cast<double>(m_) - log2_big(count_); }

    [[nodiscard]] bool is_codeword(const BitString& u) const { return u.size() == m_ && dominance_holds(u); }

    [[nodiscard]] BigInt rank(const BitString& u) const {
        if (!is_codeword(u)) throw std::invalid_argument("DominanceCode::rank: not a codeword");
        BigInt r = 0;
        std::size_t h = 0;
        for (std::size_t j = 0; j < walk_; ++j) {
            const int opt = 2 * u[j] + u[m_ - 1 - j];
            for (int o = 0; o < opt; ++o)
                if (auto nh = step(h, o); nh >= 1) r += completions(j + 1, static_cast<std::size_t>(nh));
            h = static_cast<std::size_t>(step(h, opt));
        }
        BigInt fr = 0;
        for (std::size_t j = walk_; j < pairs_; ++j) fr = fr * 4 + (2 * u[j] + u[m_ - 1 - j]);
        if (m_ % 2 == 1) fr = fr * 2 + u[m_ / 2];
        return r * free_ + fr;
    }

    [[nodiscard]] BitString unrank(BigInt r) const {
        if (r < 0 || r >= count_) throw std::invalid_argument("DominanceCode::unrank: rank out of range");
        BigInt fr = r % free_;
        r /= free_;
        BitString u = BitString::zeros(m_);
        std::size_t h = 0;
        for (std::size_t j = 0; j < walk_; ++j) {
            for (int o = 0; o < 4; ++o) {
                const auto nh = step(h, o);
                if (nh < 1) continue;
                const BigInt c = completions(j + 1, static_cast<std::size_t>(nh));
                if (r < c) {
                    set_pair(u, j, o);
                    h = static_cast<std::size_t>(nh);
                    break;
                }
                r -= c;
            }
        }
        if (m_ % 2 == 1) {
            u.set(m_ / 2, static_cast<std::uint8_t>(fr % 2 == 1));
            fr /= 2;
        }
        for (std::size_t j = pairs_; j-- > walk_;) {
            set_pair(u, j, static_cast<int>(fr % 4));
            fr /= 4;
        }
        return u;
    }

    [[nodiscard]] BitString encode(const BitString& info) const {
        if (info.size() != info_bits_)
            throw std::invalid_argument("DominanceCode::encode: expected " + std::to_string(info_bits_) +
                                        " information bits, got " + std::to_string(info.size()));
        return unrank(bits_to_big(info));
    }

    [[nodiscard]] BitString decode(const BitString& u) const {
        const BigInt r = rank(u);
        if ((r >> info_bits_) != 0)
            throw std::invalid_argument("DominanceCode::decode: rank outside the information range");
        return big_to_bits(r, info_bits_);
    }

   private:
    static std::int64_t step(std::size_t h, int opt) {
        static constexpr std::array<int, 4> delta{0, 1, -1, 0};
        return static_cast<std::int64_t>(h) + delta[static_cast<std::size_t>(opt)];
    }

    void set_pair(BitString& u, std::size_t j, int opt) const {
        u.set(j, static_cast<std::uint8_t>(opt >> 1));
        u.set(m_ - 1 - j, static_cast<std::uint8_t>(opt & 1));
    }

    /// Valid walk completions after j pairs at height h (h >= 1 unless j = 0).
    [[nodiscard]] BigInt completions(std::size_t j, std::size_t h) const {
        if (h >= walk_ - j + 1) return pow4_[walk_ - j];
        if (j == walk_) return h >= 1 ? 1 : 0;
        return table_[j][h];
    }

    std::size_t m_;
    std::size_t pairs_;
    std::size_t walk_;
    std::vector<BigInt> pow4_;
    std::vector<std::vector<BigInt>> table_;
    BigInt free_;
    BigInt count_;
    std::size_t info_bits_ = 0;
};

}  // namespace masscode

#endif  // MASSCODE_DOMINANCE_HPP
