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

#ifndef MASSCODE_POLYBIV_HPP
#define MASSCODE_POLYBIV_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "composition.hpp"
#include "field.hpp"

namespace masscode {

/// Exact integer coefficients; used where modular collisions must be ruled out.
struct IntegerRing {
    using value_type = std::int64_t;

    [[nodiscard]] static constexpr value_type zero() noexcept { return 0; }
    [[nodiscard]] static constexpr value_type one() noexcept { return 1; }
    [[nodiscard]] static constexpr value_type add(value_type a, value_type b) noexcept { return a + b; }
    [[nodiscard]] static constexpr value_type mul(value_type a, value_type b) noexcept { return a * b; }
    [[nodiscard]] static constexpr value_type neg(value_type a) noexcept { return -a; }
    [[nodiscard]] static constexpr bool is_zero(value_type a) noexcept { return a == 0; }
    [[nodiscard]] static FieldElement to_field(const PrimeField& f, value_type a) noexcept { return f.element(a); }
    [[nodiscard]] static std::string to_string(value_type a) { return std::to_string(a); }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// Coefficients in a fixed prime field.
class FieldRing {
   public:
    using value_type = FieldElement;

    explicit FieldRing(PrimeField f) : f_(std::move(f)) {}

    [[nodiscard]] const PrimeField& field() const noexcept { return f_; }
    [[nodiscard]] value_type zero() const noexcept { return f_.zero(); }
    [[nodiscard]] value_type one() const noexcept { return f_.one(); }
    [[nodiscard]] value_type add(value_type a, value_type b) const noexcept { return f_.add(a, b); }
    [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept { return f_.mul(a, b); }
    [[nodiscard]] value_type neg(value_type a) const noexcept { return f_.neg(a); }
    [[nodiscard]] static bool is_zero(value_type a) noexcept { return a.value == 0; }
    [[nodiscard]] FieldElement to_field(const PrimeField& f, value_type a) const {
        if (!(f == f_)) throw std::invalid_argument("coefficient field does not match evaluation field");
        return a;
    }
    /// Field coefficients print in the balanced range, so -1 shows as -1 rather than q-1.
    [[nodiscard]] std::string to_string(value_type a) const { return std::to_string(f_.signed_value(a)); }

    friend bool operator==(const FieldRing& a, const FieldRing& b) noexcept { return a.f_ == b.f_; }

   private:
    PrimeField f_;
};

/**
 * Sparse Laurent polynomial in x, y.
 *
 * Keys are nonnegative exponent pairs; the true exponents are the keys minus
 * (shift_x, shift_y). Terms are ordered by total degree, then x-exponent.
 */
template <class Ring>
class SparseBivariatePoly {
   public:
    using coeff_type = typename Ring::value_type;

    explicit SparseBivariatePoly(Ring ring = Ring{}) : ring_(std::move(ring)) {}

    [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::int64_t shift_x() const noexcept { return sx_; }
    [[nodiscard]] std::int64_t shift_y() const noexcept { return sy_; }

    /// Adds c * x^i * y^j; exponents may be negative.
    void add_term(std::int64_t i, std::int64_t j, coeff_type c) {
        if (ring_.is_zero(c)) return;
        if (i + sx_ < 0 || j + sy_ < 0) rebase(std::max(sx_, -i), std::max(sy_, -j));
        const Key k{static_cast<std::uint32_t>(i + sx_), static_cast<std::uint32_t>(j + sy_)};
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    [[nodiscard]] coeff_type coeff(std::int64_t i, std::int64_t j) const {
        if (i + sx_ < 0 || j + sy_ < 0) return ring_.zero();
        auto it = terms_.find(Key{static_cast<std::uint32_t>(i + sx_), static_cast<std::uint32_t>(j + sy_)});
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    /// f(i, j, c) over all terms with their signed exponents.
    template <class F>
    void for_each(F&& f) const {
        for (const auto& [k, c] : terms_) f(std::int64_t{k.x} - sx_, std::int64_t{k.y} - sy_, c);
    }

    /// Largest x-exponent (0 for the zero polynomial).
    [[nodiscard]] std::int64_t deg_x() const {
        std::int64_t d = 0;
        bool first = true;
        for_each([&](std::int64_t i, std::int64_t, const coeff_type&) {
            d = first ? i : std::max(d, i);
            first = false;
        });
        return d;
    }
    [[nodiscard]] std::int64_t deg_y() const {
        std::int64_t d = 0;
        bool first = true;
        for_each([&](std::int64_t, std::int64_t j, const coeff_type&) {
            d = first ? j : std::max(d, j);
            first = false;
        });
        return d;
    }

    /// f(1/x, 1/y).
    [[nodiscard]] SparseBivariatePoly reflected() const {
        SparseBivariatePoly out(ring_);
        for_each([&](std::int64_t i, std::int64_t j, const coeff_type& c) { out.add_term(-i, -j, c); });
        return out;
    }

    /// x^{deg_x} y^{deg_y} f(1/x, 1/y), taking degrees from the polynomial itself.
    [[nodiscard]] SparseBivariatePoly reciprocal() const { return reciprocal(deg_x(), deg_y()); }
    [[nodiscard]] SparseBivariatePoly reciprocal(std::int64_t dx, std::int64_t dy) const {
        SparseBivariatePoly out(ring_);
        for_each([&](std::int64_t i, std::int64_t j, const coeff_type& c) { out.add_term(dx - i, dy - j, c); });
        return out;
    }

    SparseBivariatePoly& operator+=(const SparseBivariatePoly& o) {
        o.for_each([&](std::int64_t i, std::int64_t j, const coeff_type& c) { add_term(i, j, c); });
        return *this;
    }
    SparseBivariatePoly& operator-=(const SparseBivariatePoly& o) {
        o.for_each([&](std::int64_t i, std::int64_t j, const coeff_type& c) { add_term(i, j, ring_.neg(c)); });
        return *this;
    }
    friend SparseBivariatePoly operator+(SparseBivariatePoly a, const SparseBivariatePoly& b) { return a += b; }
    friend SparseBivariatePoly operator-(SparseBivariatePoly a, const SparseBivariatePoly& b) { return a -= b; }

    friend SparseBivariatePoly operator*(const SparseBivariatePoly& a, const SparseBivariatePoly& b) {
        SparseBivariatePoly out(a.ring_);
        out.rebase(a.sx_ + b.sx_, a.sy_ + b.sy_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                const auto c = a.ring_.mul(ca, cb);
                if (a.ring_.is_zero(c)) continue;
                const Key k{ka.x + kb.x, ka.y + kb.y};
                auto [it, inserted] = out.terms_.try_emplace(k, c);
                if (!inserted) {
                    it->second = a.ring_.add(it->second, c);
                    if (a.ring_.is_zero(it->second)) out.terms_.erase(it);
                }
            }
        return out;
    }

    friend bool operator==(const SparseBivariatePoly& a, const SparseBivariatePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (std::int64_t{ia->first.x} - a.sx_ != std::int64_t{ib->first.x} - b.sx_) return false;
            if (std::int64_t{ia->first.y} - a.sy_ != std::int64_t{ib->first.y} - b.sy_) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }

    /// Debug rendering "c*x^i*y^j + ..." ordered by (total degree, x-exponent); "0" when empty.
    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for_each([&](std::int64_t i, std::int64_t j, const coeff_type& c) {
            if (!first) os << " + ";
            first = false;
            os << ring_.to_string(c) << "*x^" << i << "*y^" << j;
        });
        return os.str();
    }

   private:
    struct Key {
        std::uint32_t x;
        std::uint32_t y;
    };
    struct DegreeOrder {
        bool operator()(const Key& a, const Key& b) const noexcept {
            return std::make_tuple(std::uint64_t{a.x} + a.y, a.x) < std::make_tuple(std::uint64_t{b.x} + b.y, b.x);
        }
    };

    void rebase(std::int64_t new_sx, std::int64_t new_sy) {
        if (new_sx == sx_ && new_sy == sy_) return;
        std::map<Key, coeff_type, DegreeOrder> moved;
        for (auto& [k, c] : terms_)
            moved.emplace(Key{static_cast<std::uint32_t>(k.x + (new_sx - sx_)),
                              static_cast<std::uint32_t>(k.y + (new_sy - sy_))},
                          c);
        terms_ = std::move(moved);
        sx_ = new_sx;
        sy_ = new_sy;
    }

    Ring ring_;
    std::map<Key, coeff_type, DegreeOrder> terms_;
    std::int64_t sx_ = 0;
    std::int64_t sy_ = 0;
};

using IntPoly = SparseBivariatePoly<IntegerRing>;
using FieldPoly = SparseBivariatePoly<FieldRing>;

/// P_s: one monomial x^{ones} y^{zeros} per prefix of s, including the empty prefix.
inline IntPoly prefix_poly(const BitString& s) {
    IntPoly p;
    std::int64_t ones = 0;
    std::int64_t zeros = 0;
    p.add_term(0, 0, 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        (s[i] ? ones : zeros) += 1;
        p.add_term(ones, zeros, 1);
    }
    return p;
}

/// S: the generating polynomial of a composition multiset, x marking ones and y zeros.
inline IntPoly multiset_poly(const CompositionMultiset& c) {
    IntPoly p;
    for (std::size_t l = 1; l <= c.n(); ++l)
        c.cls(l).for_each([&](std::uint32_t ones, std::uint32_t count) {
            p.add_term(ones, static_cast<std::int64_t>(l - ones), count);
        });
    return p;
}

template <class Ring>
FieldElement evaluate(const SparseBivariatePoly<Ring>& p, const PrimeField& f, FieldElement x0, FieldElement y0) {
    FieldElement acc = f.zero();
    p.for_each([&](std::int64_t i, std::int64_t j, const auto& c) {
        if ((i < 0 && x0.value == 0) || (j < 0 && y0.value == 0))
            throw ArithmeticError("evaluate: negative exponent at a zero coordinate");
        const auto term = f.mul(p.ring().to_field(f, c), f.mul(f.pow(x0, i), f.pow(y0, j)));
        acc = f.add(acc, term);
    });
    return acc;
}

/// x0^dx * y0^dy * p(1/x0, 1/y0).
template <class Ring>
FieldElement reciprocal_eval(const SparseBivariatePoly<Ring>& p, const PrimeField& f, FieldElement x0,
                             FieldElement y0, std::int64_t dx, std::int64_t dy) {
    if (x0.value == 0 || y0.value == 0) throw ArithmeticError("reciprocal_eval: zero coordinate");
    return f.mul(f.mul(f.pow(x0, dx), f.pow(y0, dy)), evaluate(p, f, f.inv(x0), f.inv(y0)));
}

/**
 * Checks P_s(x,y) P_s(1/x,1/y) = (n+1) + S_s(x,y) + S_s(1/x,1/y) as an identity of
 * integer Laurent polynomials. S_s is built from the composition multiset, not from P_s.
 */
inline bool verify_identity(const BitString& s) {
    const auto p = prefix_poly(s);
    const auto lhs = p * p.reflected();
    const auto sp = multiset_poly(composition_multiset(s));
    IntPoly rhs;
    rhs.add_term(0, 0, static_cast<std::int64_t>(s.size()) + 1);
    rhs += sp;
    rhs += sp.reflected();
    return lhs == rhs;
}

}  // namespace masscode

#endif  // MASSCODE_POLYBIV_HPP
