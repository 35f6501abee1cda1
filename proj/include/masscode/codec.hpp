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

// Systematic t-composition-error-correcting code.
//
// Codeword layout, with R = r_hat / 2 and m = n - r_hat:
//
//   s = 0^R  u  reverse(z)
//
// u is a dominance codeword carrying the information bits. z has length R; its
// odd positions hold the running parity of sbar, the inner-code encoding of the
// pinned payload (wt(u) mod 2t+1 and P_u on the grid l1, l2 in [-4t, 4t]), and its
// even positions are 0. Storing z reversed puts z_j opposite the j-th pad zero, so
// sigma_j(s) = z_j and w_{2j}(s) = sbar_j (mod 2) can be read off any readout.

#ifndef MASSCODE_CODEC_HPP
#define MASSCODE_CODEC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "bch.hpp"
#include "composition.hpp"
#include "dominance.hpp"
#include "field.hpp"
#include "sparse.hpp"

namespace masscode {

/// (n, t) cannot host the layout, or other parameter inconsistencies.
class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class DecodeFailure {
    InnerDecode,
    WeightWindow,
    SparseRecovery,
    MirrorMismatch,
    InvalidCorrection,
    Reconstruction,
    Validation,
};

inline const char* to_string(DecodeFailure f) noexcept {
    switch (f) {
        case DecodeFailure::InnerDecode: return "inner-decode";
        case DecodeFailure::WeightWindow: return "weight-window";
        case DecodeFailure::SparseRecovery: return "sparse-recovery";
        case DecodeFailure::MirrorMismatch: return "mirror-mismatch";
        case DecodeFailure::InvalidCorrection: return "invalid-correction";
        case DecodeFailure::Reconstruction: return "reconstruction";
        case DecodeFailure::Validation: return "validation";
    }
    return "unknown";
}

/// The readout is farther than t substitutions from every codeword, as far as the decoder can tell.
class DecodeError : public std::runtime_error {
   public:
    DecodeError(DecodeFailure kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    [[nodiscard]] DecodeFailure kind() const noexcept { return kind_; }

   private:
    DecodeFailure kind_;
};

/// Payload bit count for length n: ceil(log2(2t+1)) + (8t+1)^2 ceil(log2 q).
inline std::size_t payload_bits_for(std::size_t n, std::size_t t) {
    std::size_t abits = 0;
    while ((std::size_t{1} << abits) < 2 * t + 1) ++abits;
    std::uint64_t q = 2 * static_cast<std::uint64_t>(n) + 2;
    while (!detail::is_prime(q)) ++q;
    std::size_t qbits = 0;
    while ((std::uint64_t{1} << qbits) < q) ++qbits;
    const std::size_t side = 8 * t + 1;
    return abits + side * side * qbits;
}

/// r_hat for length n: four times the inner-code output length.
inline std::size_t r_hat_for(std::size_t n, std::size_t t, InnerCodeKind inner = InnerCodeKind::Bch) {
    return 4 * InnerCode(inner, payload_bits_for(n, t), t).encoded_bits();
}

class CodecParams {
   public:
    static CodecParams make(std::size_t n, std::size_t t, InnerCodeKind inner = InnerCodeKind::Bch) {
        if (t < 1) throw ParameterError("t must be at least 1");
        if (n < 2) throw ParameterError("n must be at least 2");
        const std::size_t r_hat = r_hat_for(n, t, inner);
        if (n < r_hat + 2)
            throw ParameterError("n=" + std::to_string(n) + " is too short for t=" + std::to_string(t) +
                                 ": redundancy r_hat=" + std::to_string(r_hat) +
                                 " leaves no room for u; minimum length is " +
                                 std::to_string(minimum_length(t, inner)));
        return CodecParams(n, t, inner, r_hat);
    }

    /// Smallest n with n - r_hat(n) >= 2.
    static std::size_t minimum_length(std::size_t t, InnerCodeKind inner = InnerCodeKind::Bch) {
        if (t < 1) throw ParameterError("t must be at least 1");
        // r_hat is nondecreasing in n, so n <- r_hat(n) + 2 climbs to the smallest fixed point
        std::size_t n = 2;
        for (;;) {
            const std::size_t next = r_hat_for(n, t, inner) + 2;
            if (next <= n) return n;
            n = next;
        }
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t t() const noexcept { return t_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::int64_t grid_half_width() const noexcept { return static_cast<std::int64_t>(4 * t_); }
    [[nodiscard]] std::size_t weight_residue_bits() const noexcept { return abits_; }
    [[nodiscard]] std::size_t element_bits() const noexcept { return qbits_; }
    [[nodiscard]] std::size_t payload_bits() const noexcept { return inner_->payload_bits(); }
    [[nodiscard]] const InnerCode& inner() const noexcept { return *inner_; }
    [[nodiscard]] std::size_t inner_bits() const noexcept { return inner_->encoded_bits(); }
    [[nodiscard]] std::size_t r_hat() const noexcept { return r_hat_; }
    /// Length of the zero pad, which equals the length of z.
    [[nodiscard]] std::size_t pad() const noexcept { return r_hat_ / 2; }
    [[nodiscard]] std::size_t u_length() const noexcept { return n_ - r_hat_; }
    [[nodiscard]] const DominanceCode& sr() const noexcept { return *sr_; }
    [[nodiscard]] std::size_t info_bits() const noexcept { return sr_->info_bits(); }

   private:
    CodecParams(std::size_t n, std::size_t t, InnerCodeKind inner, std::size_t r_hat)
        : n_(n),
          t_(t),
          field_(find_field(n)),
          inner_(std::make_shared<InnerCode>(inner, payload_bits_for(n, t), t)),
          r_hat_(r_hat),
          sr_(std::make_shared<DominanceCode>(n - r_hat)) {
        while ((std::size_t{1} << abits_) < 2 * t + 1) ++abits_;
        qbits_ = masscode::element_bits(field_);
    }

    std::size_t n_;
    std::size_t t_;
    PrimeField field_;
    std::shared_ptr<const InnerCode> inner_;
    std::size_t r_hat_;
    std::shared_ptr<const DominanceCode> sr_;
    std::size_t abits_ = 0;
    std::size_t qbits_ = 0;
};

struct PinnedPayload {
    std::uint32_t a = 0;
    EvaluationGrid evals{0};

    friend bool operator==(const PinnedPayload&, const PinnedPayload&) = default;
};

/// a, then the grid in row-major order (l2 outer), each value MSB-first.
inline BitString serialize_payload(const PinnedPayload& p, const CodecParams& params) {
    BitString out;
    for (std::size_t b = params.weight_residue_bits(); b-- > 0;) out.push_back(static_cast<std::uint8_t>((p.a >> b) & 1U));
    for (auto v : p.evals.values())
        for (std::size_t b = params.element_bits(); b-- > 0;) out.push_back(static_cast<std::uint8_t>((v.value >> b) & 1U));
    return out;
}

/// Inverse of serialize_payload; out-of-range fields raise DecodeError(InnerDecode).
inline PinnedPayload deserialize_payload(const BitString& bits, const CodecParams& params) {
    if (bits.size() != params.payload_bits()) throw std::invalid_argument("payload length mismatch");
    std::size_t pos = 0;
    auto read = [&](std::size_t width) {
        std::uint64_t v = 0;
        for (std::size_t b = 0; b < width; ++b) v = (v << 1U) | bits[pos++];
        return v;
    };
    PinnedPayload p;
    const auto a = read(params.weight_residue_bits());
    if (a > 2 * params.t()) throw DecodeError(DecodeFailure::InnerDecode, "weight residue out of range");
    p.a = static_cast<std::uint32_t>(a);
    p.evals = EvaluationGrid(params.grid_half_width());
    const auto h = params.grid_half_width();
    for (std::int64_t l2 = -h; l2 <= h; ++l2)
        for (std::int64_t l1 = -h; l1 <= h; ++l1) {
            const auto v = read(params.element_bits());
            if (v >= params.field().modulus())
                throw DecodeError(DecodeFailure::InnerDecode, "pinned evaluation out of field range");
            p.evals.at(l1, l2) = FieldElement{static_cast<std::uint32_t>(v)};
        }
    return p;
}

/// P_s(alpha^l1, alpha^l2) on the whole grid, one pass over the prefixes.
inline EvaluationGrid prefix_poly_grid(const PrimeField& f, const BitString& s, std::int64_t half_width) {
    EvaluationGrid g(half_width);
    const auto side = static_cast<std::int64_t>(g.side());
    const std::int64_t ord = f.order();
    std::vector<std::uint64_t> acc(g.values().size(), 0);
    std::int64_t ones = 0;
    std::int64_t zeros = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i > 0) (s[i - 1] ? ones : zeros) += 1;
        for (std::int64_t l2 = -half_width; l2 <= half_width; ++l2)
            for (std::int64_t l1 = -half_width; l1 <= half_width; ++l1) {
                auto e = (l1 * ones + l2 * zeros) % ord;
                if (e < 0) e += ord;
                acc[static_cast<std::size_t>((l2 + half_width) * side + (l1 + half_width))] += f.alpha_pow(e).value;
            }
    }
    for (std::int64_t l2 = -half_width; l2 <= half_width; ++l2)
        for (std::int64_t l1 = -half_width; l1 <= half_width; ++l1)
            g.at(l1, l2) = f.element(static_cast<std::int64_t>(
                acc[static_cast<std::size_t>((l2 + half_width) * side + (l1 + half_width))] % f.modulus()));
    return g;
}

/// S(alpha^l1, alpha^l2) for a multiset, separably: first over ones per zero-count, then over zeros.
inline EvaluationGrid multiset_poly_grid(const PrimeField& f, const CompositionMultiset& c, std::int64_t half_width) {
    const std::size_t n = c.n();
    const auto side = static_cast<std::size_t>(2 * half_width + 1);
    const std::uint64_t q = f.modulus();
    // pw[w * side + k] = alpha^{(k - h) w}
    std::vector<std::uint32_t> pw((n + 1) * side);
    for (std::size_t w = 0; w <= n; ++w)
        for (std::size_t k = 0; k < side; ++k)
            pw[w * side + k] =
                f.alpha_pow(static_cast<std::int64_t>(w) * (static_cast<std::int64_t>(k) - half_width)).value;
    // rows[z * side + k] accumulates count * alpha^{l1 w} over entries with z zeros
    std::vector<std::uint64_t> rows((n + 1) * side, 0);
    constexpr std::uint64_t kFlush = std::uint64_t{1} << 62;
    for (std::size_t l = 1; l <= n; ++l)
        c.cls(l).for_each([&](std::uint32_t ones, std::uint32_t count) {
            const std::size_t z = l - ones;
            const std::uint64_t cnt = count % q;
            auto* row = &rows[z * side];
            const auto* p = &pw[std::size_t{ones} * side];
            for (std::size_t k = 0; k < side; ++k) {
                row[k] += cnt * p[k];
                if (row[k] >= kFlush) row[k] %= q;
            }
        });
    EvaluationGrid g(half_width);
    for (std::size_t k2 = 0; k2 < side; ++k2) {
        const auto l2 = static_cast<std::int64_t>(k2) - half_width;
        for (std::size_t k1 = 0; k1 < side; ++k1) {
            std::uint64_t acc = 0;
            for (std::size_t z = 0; z <= n; ++z) {
                const auto r = rows[z * side + k1] % q;
                if (r == 0) continue;
                acc = (acc + r * f.alpha_pow(l2 * static_cast<std::int64_t>(z)).value) % q;
            }
            g.at(static_cast<std::int64_t>(k1) - half_width, l2) = FieldElement{static_cast<std::uint32_t>(acc)};
        }
    }
    return g;
}

struct Codeword {
    BitString s;
    BitString u;
    BitString z;     // in encoder order; s ends with reverse(z)
    BitString sbar;  // inner-code output
    PinnedPayload payload;
};

/// Odd positions carry the running parity of sbar, even positions are 0.
inline BitString build_z(const BitString& sbar) {
    BitString z = BitString::zeros(2 * sbar.size());
    std::uint8_t parity = 0;
    for (std::size_t k = 0; k < sbar.size(); ++k) {
        // 1-based position 2k+1; its running parity must equal sbar_{k+1}
        const auto bit = static_cast<std::uint8_t>(parity ^ sbar[k]);
        z.set(2 * k, bit);
        parity ^= bit;
    }
    return z;
}

inline PinnedPayload pin_payload(const BitString& u, const CodecParams& params) {
    PinnedPayload p;
    p.a = static_cast<std::uint32_t>(u.weight() % (2 * params.t() + 1));
    p.evals = prefix_poly_grid(params.field(), u, params.grid_half_width());
    return p;
}

/// Encodes a dominance codeword u of length n - r_hat.
inline Codeword encode_u(const BitString& u, const CodecParams& params) {
    if (u.size() != params.u_length())
        throw std::invalid_argument("encode: u must have length " + std::to_string(params.u_length()));
    if (!params.sr().is_codeword(u)) throw std::invalid_argument("encode: u violates the dominance constraint");
    Codeword cw;
    cw.u = u;
    cw.payload = pin_payload(u, params);
    cw.sbar = params.inner().encode(serialize_payload(cw.payload, params));
    cw.z = build_z(cw.sbar);
    cw.s = BitString::zeros(params.pad());
    cw.s.append(u);
    cw.s.append(reverse(cw.z));
    return cw;
}

inline Codeword encode(const BitString& info, const CodecParams& params) {
    if (info.size() != params.info_bits())
        throw std::invalid_argument("encode: expected " + std::to_string(params.info_bits()) +
                                    " information bits, got " + std::to_string(info.size()));
    return encode_u(params.sr().encode(info), params);
}

/// Where the reconstruction may assume a zero pad and a dominance segment.
struct Layout {
    std::size_t pad = 0;  // s_1..s_pad are 0 and the middle segment starts after them
    bool dominance = false;
};

class ReconstructionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/**
 * Rebuilds a string from its exact composition multiset by peeling symmetric pairs
 * (s_i, s_{n+1-i}) from the outside in.
 *
 * sigma_i fixes a pair unless it is 1. The class of length n - i then has i + 1
 * windows, i - 1 of whose weights are already known; the remaining two must be
 * W - pre_{i-1} - s_i and W - suf_{i-1} - s_{n+1-i}, which separates the two
 * orientations whenever pre_{i-1} != suf_{i-1}. Any unresolved choice is explored by
 * backtracking within `node_budget`. The result is checked against c in full.
 */
inline BitString reconstruct_string(const CompositionMultiset& c, const Layout& layout = {},
                                     std::size_t node_budget = 1U << 20) {
    const std::size_t n = c.n();
    if (!c.has_string_counts()) throw ReconstructionError("class sizes do not match a string of length n");
    if (2 * layout.pad + (layout.dominance ? 2 : 0) > n) throw std::invalid_argument("layout does not fit n");
    const auto w = cumulative_weights(c);
    SigmaSequence sig;
    try {
        sig = sigma_from_weights(w, n);
    } catch (const MultisetError& e) {
        throw ReconstructionError(e.what());
    }
    const std::int64_t total = w[0];
    const std::size_t pairs = n / 2;
    const std::size_t m = n - 2 * layout.pad;
    const std::size_t walk = layout.dominance ? std::max<std::size_t>(1, m / 2 - 1) : 0;

    std::vector<std::uint8_t> bits(n, 0);
    std::vector<std::int64_t> pre(pairs + 1, 0);
    std::vector<std::int64_t> suf(pairs + 1, 0);
    std::vector<std::int64_t> height(pairs + 1, 0);
    std::vector<std::uint32_t> residual;

    // options for pair i (1-based) given pairs 1..i-1; encoded as 2*s_i + s_{n+1-i}
    auto candidates = [&](std::size_t i) {
        std::vector<int> out;
        const int sigma = sig.values[i - 1];
        for (int opt = 0; opt < 4; ++opt) {
            const int a = opt >> 1;
            const int b = opt & 1;
            if (a + b != sigma) continue;
            if (i <= layout.pad && a != 0) continue;
            if (layout.dominance && i > layout.pad && i - layout.pad <= walk && height[i - 1] + b - a < 1) continue;
            out.push_back(opt);
        }
        if (i == 1 || out.empty()) return out;
        // class n - i: drop the i - 1 known windows, compare the two left over
        const auto& cls = c.cls(n - i);
        residual.assign(cls.histogram().begin(), cls.histogram().end());
        const std::int64_t lo = cls.min_ones();
        for (std::size_t j = 2; j <= i; ++j) {
            const std::int64_t v = total - pre[j - 1] - suf[i + 1 - j] - lo;
            if (v < 0 || v >= static_cast<std::int64_t>(residual.size()) || residual[static_cast<std::size_t>(v)] == 0)
                return std::vector<int>{};
            --residual[static_cast<std::size_t>(v)];
        }
        std::vector<int> kept;
        for (int opt : out) {
            const std::int64_t x = total - pre[i - 1] - (opt >> 1) - lo;
            const std::int64_t y = total - suf[i - 1] - (opt & 1) - lo;
            auto ok = [&](std::int64_t v) {
                return v >= 0 && v < static_cast<std::int64_t>(residual.size()) &&
                       residual[static_cast<std::size_t>(v)] > 0;
            };
            if (!ok(x)) continue;
            --residual[static_cast<std::size_t>(x)];
            const bool good = ok(y);
            ++residual[static_cast<std::size_t>(x)];
            if (good) kept.push_back(opt);
        }
        return kept;
    };

    auto finish = [&]() {
        if (n % 2 == 1) bits[pairs] = sig.values[pairs];
        return is_multiset_of(c, BitString(bits));
    };

    struct Level {
        std::vector<int> options;
        std::size_t next = 0;
    };
    if (pairs == 0) {
        if (finish()) return BitString(bits);
        throw ReconstructionError("no string has this composition multiset");
    }
    std::vector<Level> stack;
    stack.reserve(pairs + 1);
    std::size_t nodes = 0;
    std::size_t i = 1;
    stack.push_back({candidates(1), 0});
    for (;;) {
        if (++nodes > node_budget) throw ReconstructionError("search budget exhausted");
        auto& level = stack.back();
        if (level.next >= level.options.size()) {
            stack.pop_back();
            if (stack.empty()) throw ReconstructionError("no string has this composition multiset");
            --i;
            continue;
        }
        const int opt = level.options[level.next++];
        bits[i - 1] = static_cast<std::uint8_t>(opt >> 1);
        bits[n - i] = static_cast<std::uint8_t>(opt & 1);
        pre[i] = pre[i - 1] + (opt >> 1);
        suf[i] = suf[i - 1] + (opt & 1);
        height[i] = i > layout.pad ? height[i - 1] + (opt & 1) - (opt >> 1) : 0;
        if (i == pairs) {
            if (finish()) return BitString(bits);
            continue;
        }
        ++i;
        stack.push_back({candidates(i), 0});
    }
}

struct DecodeResult {
    BitString info;
    Codeword codeword;
    CompositionMultiset corrected{1};
    std::size_t corrections = 0;        // substitutions undone
    std::size_t inner_corrections = 0;  // bit errors fixed by the inner code
};

namespace detail {

/// Terms x^w y^z with coefficient e: the corrected multiset is c - E.
struct ErrorTerm {
    std::int64_t ones;
    std::int64_t zeros;
    std::int64_t coeff;
};

}  // namespace detail

/**
 * Decodes a readout with at most t substitutions.
 *
 * The parities of w_2, w_4, ... give sbar up to t flips; the inner code yields the
 * payload and hence z, a, and the pinned evaluations of P_u. The count of ones in
 * C_1 fixes wt(s) up to +-t, and a + wt(z) picks it modulo 2t+1. P_s is then known
 * on the grid, so E(x,y) + E(1/x,1/y) = (n+1) + S~(x,y) + S~(1/x,1/y) - P_s(x,y)P_s(1/x,1/y)
 * is known there too; E is the difference between the readout and C(s) and has at
 * most 2t terms. Multiplying by x^n y^n makes every exponent fall in [0, 2n].
 */
inline DecodeResult decode(const CompositionMultiset& readout, const CodecParams& params) {
    const std::size_t n = params.n();
    const std::size_t t = params.t();
    const auto& f = params.field();
    const auto h = params.grid_half_width();
    if (readout.n() != n)
        throw std::invalid_argument("decode: readout has n=" + std::to_string(readout.n()) + ", codec expects " +
                                    std::to_string(n));
    if (!readout.has_string_counts()) throw std::invalid_argument("decode: class sizes do not match length n");

    DecodeResult res;
    // sbar from parities of w_{2j}
    BitString noisy;
    for (std::size_t j = 1; j <= params.inner_bits(); ++j)
        noisy.push_back(static_cast<std::uint8_t>(readout.cls(2 * j).ones_total() & 1U));
    BchCode::Decoded inner;
    try {
        inner = params.inner().decode(noisy);
    } catch (const InnerDecodeError& e) {
        throw DecodeError(DecodeFailure::InnerDecode, e.what());
    }
    res.inner_corrections = inner.corrected;
    Codeword& cw = res.codeword;
    cw.payload = deserialize_payload(inner.payload, params);
    cw.sbar = params.inner().encode(inner.payload);
    cw.z = build_z(cw.sbar);
    const BitString tail = reverse(cw.z);
    const auto wz = static_cast<std::int64_t>(cw.z.weight());

    // wt(s)
    const auto observed = static_cast<std::int64_t>(readout.cls(1).count(1));
    const auto mod = static_cast<std::int64_t>(2 * t + 1);
    std::int64_t ws = -1;
    for (std::int64_t v = std::max<std::int64_t>(0, observed - static_cast<std::int64_t>(t));
         v <= std::min<std::int64_t>(static_cast<std::int64_t>(n), observed + static_cast<std::int64_t>(t)); ++v)
        if (((v - wz - static_cast<std::int64_t>(cw.payload.a)) % mod + mod) % mod == 0) ws = v;
    const auto m = static_cast<std::int64_t>(params.u_length());
    const std::int64_t wu = ws - wz;
    if (ws < 0 || wu < 0 || wu > m) throw DecodeError(DecodeFailure::WeightWindow, "no admissible weight for s");

    // P_s on the grid from its three segments
    const auto R = static_cast<std::int64_t>(params.pad());
    const auto tail_grid = prefix_poly_grid(f, tail, h);
    const auto s_grid = multiset_poly_grid(f, readout, h);
    EvaluationGrid ps(h);
    for (std::int64_t l2 = -h; l2 <= h; ++l2)
        for (std::int64_t l1 = -h; l1 <= h; ++l1) {
            // P_0 = 1 + y + ... + y^R
            FieldElement p0 = f.zero();
            const auto y = f.alpha_pow(l2);
            if (y == f.one()) {
                p0 = f.element(R + 1);
            } else {
                p0 = f.div(f.sub(f.alpha_pow(l2 * (R + 1)), f.one()), f.sub(y, f.one()));
            }
            const auto pu = f.sub(cw.payload.evals.at(l1, l2), f.one());
            const auto pt = f.sub(tail_grid.at(l1, l2), f.one());
            FieldElement v = f.add(p0, f.mul(f.alpha_pow(l2 * R), pu));
            v = f.add(v, f.mul(f.alpha_pow(l1 * wu + l2 * (R + m - wu)), pt));
            ps.at(l1, l2) = v;
        }

    // samples of x^n y^n (E(x,y) + E(1/x,1/y))
    EvaluationGrid g(h);
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t l2 = -h; l2 <= h; ++l2)
        for (std::int64_t l1 = -h; l1 <= h; ++l1) {
            FieldElement v = f.add(f.element(nn + 1), f.add(s_grid.at(l1, l2), s_grid.at(-l1, -l2)));
            v = f.sub(v, f.mul(ps.at(l1, l2), ps.at(-l1, -l2)));
            g.at(l1, l2) = f.mul(v, f.alpha_pow(nn * (l1 + l2)));
        }
    FieldPoly shifted{FieldRing(f)};
    try {
        shifted = recover_error_poly(f, g, t, 2 * n, 2 * n);
    } catch (const SparseRecoveryError& e) {
        throw DecodeError(DecodeFailure::SparseRecovery,
                          std::string(e.what()) + " (stage " + std::to_string(e.stage()) + ", index " +
                              std::to_string(e.index()) + ")");
    }

    // split into E (upper quadrant) and its mirror (lower quadrant)
    std::vector<detail::ErrorTerm> upper;
    std::vector<detail::ErrorTerm> lower;
    bool stray = false;
    shifted.for_each([&](std::int64_t i, std::int64_t j, FieldElement c) {
        const std::int64_t a = i - nn;
        const std::int64_t b = j - nn;
        const std::int64_t v = f.signed_value(c);
        if (a >= 0 && b >= 0 && a + b > 0)
            upper.push_back({a, b, v});
        else if (a <= 0 && b <= 0 && a + b < 0)
            lower.push_back({-a, -b, v});
        else
            stray = true;
    });
    auto key = [](const detail::ErrorTerm& e) { return std::make_tuple(e.ones, e.zeros, e.coeff); };
    auto by_key = [&](const detail::ErrorTerm& x, const detail::ErrorTerm& y) { return key(x) < key(y); };
    std::sort(upper.begin(), upper.end(), by_key);
    std::sort(lower.begin(), lower.end(), by_key);
    bool same = upper.size() == lower.size();
    for (std::size_t k = 0; same && k < upper.size(); ++k) same = key(upper[k]) == key(lower[k]);
    if (stray || !same) throw DecodeError(DecodeFailure::MirrorMismatch, "error polynomial is not mirror-symmetric");

    CompositionMultiset corrected = readout;
    try {
        for (const auto& e : upper) {
            if (e.ones + e.zeros > nn) throw MultisetError("error term longer than n");
            const Composition comp{static_cast<std::uint32_t>(e.zeros), static_cast<std::uint32_t>(e.ones)};
            if (e.coeff > 0)
                corrected.remove(comp, static_cast<std::uint32_t>(e.coeff));
            else
                corrected.add(comp, static_cast<std::uint32_t>(-e.coeff));
        }
    } catch (const MultisetError& e) {
        throw DecodeError(DecodeFailure::InvalidCorrection, e.what());
    }
    if (!corrected.has_string_counts())
        throw DecodeError(DecodeFailure::InvalidCorrection, "corrected classes have the wrong sizes");
    const auto dist = multiset_distance(readout, corrected);
    if (dist > t) throw DecodeError(DecodeFailure::InvalidCorrection, "correction exceeds t substitutions");
    res.corrections = static_cast<std::size_t>(dist);

    BitString s;
    try {
        s = reconstruct_string(corrected, Layout{params.pad(), true});
    } catch (const ReconstructionError& e) {
        throw DecodeError(DecodeFailure::Reconstruction, e.what());
    }

    const auto pad = params.pad();
    if (s.slice(n - pad, pad) != tail) throw DecodeError(DecodeFailure::Validation, "tail does not match z");
    cw.u = s.slice(pad, params.u_length());
    if (!params.sr().is_codeword(cw.u)) throw DecodeError(DecodeFailure::Validation, "u violates dominance");
    if (static_cast<std::int64_t>(cw.u.weight()) != wu) throw DecodeError(DecodeFailure::Validation, "weight of u");
    if (!(prefix_poly_grid(f, cw.u, h) == cw.payload.evals))
        throw DecodeError(DecodeFailure::Validation, "u does not match the pinned evaluations");
    try {
        res.info = params.sr().decode(cw.u);
    } catch (const std::invalid_argument& e) {
        throw DecodeError(DecodeFailure::Validation, e.what());
    }
    cw.s = std::move(s);
    res.corrected = std::move(corrected);
    return res;
}

struct RedundancyReport {
    std::size_t n = 0;
    std::size_t t = 0;
    std::uint32_t q = 0;
    std::size_t payload_bits = 0;
    std::size_t inner_bits = 0;  // |sbar| = r_hat / 4
    std::size_t r_hat = 0;
    bool feasible = false;       // n - r_hat >= 2
    double sr_redundancy = 0;    // measured when feasible, else the nominal 0.5 log2 n
    double total = 0;            // r_hat + sr_redundancy
    double ratio = 0;            // total / (t^2 log2 n)
    double grid_estimate = 0;    // closed form for a (4t+1)^2 grid
    double asymptotic_bound = 0; // 156 t^2 log2(8n)
};

/// Closed-form redundancy estimate for the (4t+1)^2 grid.
inline double grid_redundancy_estimate(std::size_t n, std::size_t t) {
    const double nd = static_cast<double>(n);
    const double td = static_cast<double>(t);
    const double grid = (4 * td + 1) * (4 * td + 1) * (std::log2(2 * nd + 1) + 1);
    const double res = std::log2(2 * td + 1);
    return 4 * (grid + res + td * std::log2(grid + res)) + 0.5 * std::log2(nd);
}

inline RedundancyReport redundancy_report(std::size_t n, std::size_t t, InnerCodeKind inner = InnerCodeKind::Bch) {
    RedundancyReport r;
    r.n = n;
    r.t = t;
    r.q = find_field(n).modulus();
    r.payload_bits = payload_bits_for(n, t);
    r.inner_bits = InnerCode(inner, r.payload_bits, t).encoded_bits();
    r.r_hat = 4 * r.inner_bits;
    r.feasible = n >= r.r_hat + 2;
    r.sr_redundancy = r.feasible ? DominanceCode(n - r.r_hat).redundancy() : 0.5 * std::log2(static_cast<double>(n));
    r.total = static_cast<double>(r.r_hat) + r.sr_redundancy;
    r.ratio = r.total / (static_cast<double>(t * t) * std::log2(static_cast<double>(n)));
    r.grid_estimate = grid_redundancy_estimate(n, t);
    r.asymptotic_bound = 156.0 * static_cast<double>(t * t) * std::log2(8.0 * static_cast<double>(n));
    return r;
}

}  // namespace masscode

#endif  // MASSCODE_CODEC_HPP
