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

#ifndef MASSCODE_COMPOSITION_HPP
#define MASSCODE_COMPOSITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace masscode {

/// A multiset or weight sequence that no binary string can produce, or an illegal substitution.
class MultisetError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class BitString {
   public:
    BitString() = default;

    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("BitString: symbols must be 0 or 1");
    }

    static BitString from_string(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitString: unexpected character in bit string");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitString(std::move(bits));
    }

    static BitString zeros(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 0)); }

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    void set(std::size_t i, std::uint8_t b) {
        if (b > 1) throw std::invalid_argument("BitString: symbols must be 0 or 1");
        bits_.at(i) = b;
    }
    void push_back(std::uint8_t b) {
        if (b > 1) throw std::invalid_argument("BitString: symbols must be 0 or 1");
        bits_.push_back(b);
    }
    void append(const BitString& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }

    [[nodiscard]] BitString slice(std::size_t pos, std::size_t len) const {
        if (pos + len > bits_.size()) throw std::out_of_range("BitString::slice");
        return BitString(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                   bits_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
    }

    [[nodiscard]] std::size_t weight() const noexcept {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    [[nodiscard]] std::string to_string() const {
        std::string out(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
        return out;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

   private:
    std::vector<std::uint8_t> bits_;
};

inline BitString reverse(const BitString& s) {
    std::vector<std::uint8_t> bits(s.bits().rbegin(), s.bits().rend());
    return BitString(std::move(bits));
}

inline BitString concat(const BitString& a, const BitString& b) {
    BitString out = a;
    out.append(b);
    return out;
}

/// The composition 0^zeros 1^ones of a substring.
struct Composition {
    std::uint32_t zeros = 0;
    std::uint32_t ones = 0;

    [[nodiscard]] constexpr std::size_t length() const noexcept { return std::size_t{zeros} + ones; }

    friend constexpr bool operator==(Composition, Composition) = default;
    friend constexpr auto operator<=>(Composition, Composition) = default;
};

/**
 * All compositions of one substring length l, kept as a dense histogram over the
 * number of ones. Entry k of the histogram counts 0^{l-lo-k} 1^{lo+k}; the histogram
 * is trimmed so both ends are nonzero, which makes equal classes compare equal.
 */
class CompositionClass {
   public:
    CompositionClass() = default;
    explicit CompositionClass(std::size_t length) : length_(length) {}

    static CompositionClass from_histogram(std::size_t length, std::uint32_t lo, std::vector<std::uint32_t> counts) {
        CompositionClass c(length);
        c.lo_ = lo;
        c.counts_ = std::move(counts);
        for (auto v : c.counts_) c.total_ += v;
        if (!c.counts_.empty() && lo + c.counts_.size() - 1 > length)
            throw MultisetError("composition has more ones than its length");
        c.trim();
        return c;
    }

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return total_; }
    [[nodiscard]] bool empty() const noexcept { return total_ == 0; }
    [[nodiscard]] std::uint32_t min_ones() const noexcept { return lo_; }
    [[nodiscard]] std::uint32_t max_ones() const noexcept {
        return counts_.empty() ? lo_ : lo_ + static_cast<std::uint32_t>(counts_.size()) - 1;
    }
    /// Histogram starting at min_ones().
    [[nodiscard]] std::span<const std::uint32_t> histogram() const noexcept { return counts_; }

    [[nodiscard]] std::uint32_t count(std::uint32_t ones) const noexcept {
        if (counts_.empty() || ones < lo_ || ones > max_ones()) return 0;
        return counts_[ones - lo_];
    }

    void add(std::uint32_t ones, std::uint32_t k = 1) {
        if (ones > length_) throw MultisetError("composition does not fit its length class");
        if (k == 0) return;
        if (counts_.empty()) {
            lo_ = ones;
            counts_.assign(1, 0);
        } else if (ones < lo_) {
            counts_.insert(counts_.begin(), lo_ - ones, 0);
            lo_ = ones;
        } else if (ones > max_ones()) {
            counts_.resize(ones - lo_ + 1, 0);
        }
        counts_[ones - lo_] += k;
        total_ += k;
    }

    void remove(std::uint32_t ones, std::uint32_t k = 1) {
        if (count(ones) < k)
            throw MultisetError("composition 0^" + std::to_string(length_ - ones) + " 1^" + std::to_string(ones) +
                                " is not present in class " + std::to_string(length_));
        counts_[ones - lo_] -= k;
        total_ -= k;
        trim();
    }

    /// Calls f(ones, count) for every present composition, ones ascending.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] != 0) f(static_cast<std::uint32_t>(lo_ + i), counts_[i]);
    }

    /// Sum of the ones-counts over the class.
    [[nodiscard]] std::uint64_t ones_total() const noexcept {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i) s += std::uint64_t{counts_[i]} * (lo_ + i);
        return s;
    }

    friend bool operator==(const CompositionClass& a, const CompositionClass& b) noexcept {
        return a.length_ == b.length_ && a.total_ == b.total_ && a.lo_ == b.lo_ && a.counts_ == b.counts_;
    }

   private:
    void trim() {
        std::size_t first = 0;
        while (first < counts_.size() && counts_[first] == 0) ++first;
        if (first == counts_.size()) {
            counts_.clear();
            lo_ = 0;
            return;
        }
        std::size_t last = counts_.size();
        while (counts_[last - 1] == 0) --last;
        if (first != 0 || last != counts_.size()) {
            counts_ = std::vector<std::uint32_t>(counts_.begin() + static_cast<std::ptrdiff_t>(first),
                                                 counts_.begin() + static_cast<std::ptrdiff_t>(last));
            lo_ += static_cast<std::uint32_t>(first);
        }
    }

    std::size_t length_ = 0;
    std::uint32_t lo_ = 0;
    std::vector<std::uint32_t> counts_;
    std::uint64_t total_ = 0;
};

/// The composition multiset C = C_1 ∪ ... ∪ C_n of a length-n string, split by substring length.
class CompositionMultiset {
   public:
    CompositionMultiset() = default;
    explicit CompositionMultiset(std::size_t n) : n_(n) {
        classes_.reserve(n);
        for (std::size_t l = 1; l <= n; ++l) classes_.emplace_back(l);
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }

    /// Class of length l, 1-based.
    [[nodiscard]] const CompositionClass& cls(std::size_t l) const { return classes_.at(l - 1); }
    [[nodiscard]] CompositionClass& cls(std::size_t l) { return classes_.at(l - 1); }

    [[nodiscard]] std::uint32_t count(Composition c) const {
        if (c.length() < 1 || c.length() > n_) return 0;
        return cls(c.length()).count(c.ones);
    }
    void add(Composition c, std::uint32_t k = 1) { class_for(c).add(c.ones, k); }
    void remove(Composition c, std::uint32_t k = 1) { class_for(c).remove(c.ones, k); }

    [[nodiscard]] std::uint64_t total_size() const noexcept {
        std::uint64_t s = 0;
        for (const auto& c : classes_) s += c.size();
        return s;
    }

    /// True iff every class C_l holds exactly n - l + 1 compositions.
    [[nodiscard]] bool has_string_counts() const noexcept {
        for (std::size_t l = 1; l <= n_; ++l)
            if (classes_[l - 1].size() != n_ - l + 1) return false;
        return true;
    }

    friend bool operator==(const CompositionMultiset&, const CompositionMultiset&) = default;

   private:
    CompositionClass& class_for(Composition c) {
        if (c.length() < 1 || c.length() > n_)
            throw MultisetError("composition of length " + std::to_string(c.length()) + " outside [1, " +
                                std::to_string(n_) + "]");
        return classes_[c.length() - 1];
    }

    std::size_t n_ = 0;
    std::vector<CompositionClass> classes_;
};

namespace detail {

inline std::vector<std::uint32_t> prefix_weights(const BitString& s) {
    std::vector<std::uint32_t> p(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) p[i + 1] = p[i] + s[i];
    return p;
}

/// Histogram of window weights for substring length l, trimmed; `scratch` is reused across calls.
inline CompositionClass window_class(const std::vector<std::uint32_t>& prefix, std::size_t l,
                                     std::vector<std::uint32_t>& scratch) {
    const std::size_t n = prefix.size() - 1;
    std::uint32_t lo = static_cast<std::uint32_t>(l);
    std::uint32_t hi = 0;
    for (std::size_t i = 0; i + l <= n; ++i) {
        const std::uint32_t w = prefix[i + l] - prefix[i];
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    scratch.assign(hi - lo + 1, 0);
    for (std::size_t i = 0; i + l <= n; ++i) ++scratch[prefix[i + l] - prefix[i] - lo];
    return CompositionClass::from_histogram(l, lo, scratch);
}

}  // namespace detail

/// C(s): every substring of s, summarised by its composition.
inline CompositionMultiset composition_multiset(const BitString& s) {
    if (s.empty()) throw std::invalid_argument("composition_multiset: empty string");
    const auto prefix = detail::prefix_weights(s);
    CompositionMultiset out(s.size());
    std::vector<std::uint32_t> scratch;
    for (std::size_t l = 1; l <= s.size(); ++l) out.cls(l) = detail::window_class(prefix, l, scratch);
    return out;
}

/// Streams C(s) class by class against c without materialising C(s).
inline bool is_multiset_of(const CompositionMultiset& c, const BitString& s) {
    if (s.size() != c.n() || s.empty()) return false;
    const auto prefix = detail::prefix_weights(s);
    std::vector<std::uint32_t> scratch;
    for (std::size_t l = 1; l <= s.size(); ++l)
        if (!(detail::window_class(prefix, l, scratch) == c.cls(l))) return false;
    return true;
}

/// w_1 .. w_n, the total number of ones in each class.
inline std::vector<std::int64_t> cumulative_weights(const CompositionMultiset& c) {
    std::vector<std::int64_t> w(c.n());
    for (std::size_t l = 1; l <= c.n(); ++l) w[l - 1] = static_cast<std::int64_t>(c.cls(l).ones_total());
    return w;
}

/// w_1 .. w_n computed straight from the string in O(n) with second-order prefix sums.
inline std::vector<std::int64_t> cumulative_weights(const BitString& s) {
    const std::size_t n = s.size();
    std::vector<std::int64_t> p(n + 1, 0);
    std::vector<std::int64_t> pp(n + 2, 0);  // pp[k] = p[0] + ... + p[k-1]
    for (std::size_t i = 0; i < n; ++i) p[i + 1] = p[i] + s[i];
    for (std::size_t k = 0; k <= n; ++k) pp[k + 1] = pp[k] + p[k];
    std::vector<std::int64_t> w(n);
    for (std::size_t l = 1; l <= n; ++l) {
        // sum_{i=0}^{n-l} (p[i+l] - p[i])
        w[l - 1] = (pp[n + 1] - pp[l]) - pp[n - l + 1];
    }
    return w;
}

/// sigma_i = s_i + s_{n+1-i}; the middle entry of an odd-length string is its middle bit.
struct SigmaSequence {
    std::vector<std::uint8_t> values;

    friend bool operator==(const SigmaSequence&, const SigmaSequence&) = default;
};

inline SigmaSequence sigma_of(const BitString& s) {
    const std::size_t n = s.size();
    SigmaSequence out;
    out.values.resize((n + 1) / 2);
    for (std::size_t i = 0; i < n / 2; ++i) out.values[i] = static_cast<std::uint8_t>(s[i] + s[n - 1 - i]);
    if (n % 2 == 1) out.values[n / 2] = s[n / 2];
    return out;
}

/**
 * Inverts w_i = sum_m sigma_m * min(m, i) for i <= ceil(n/2).
 *
 * Successive differences w_i - w_{i-1} are the tail sums sigma_i + ... + sigma_{ceil(n/2)},
 * so the sequence falls out without division. When all n weights are supplied the
 * mirror relation w_l = w_{n+1-l} is checked as well.
 */
inline SigmaSequence sigma_from_weights(std::span<const std::int64_t> w, std::size_t n) {
    const std::size_t h = (n + 1) / 2;
    if (w.size() < h) throw MultisetError("sigma_from_weights: need at least ceil(n/2) weights");
    if (w.size() >= n) {
        for (std::size_t l = 1; l <= n; ++l)
            if (w[l - 1] != w[n - l]) throw MultisetError("cumulative weights are not mirror-symmetric");
    }
    std::vector<std::int64_t> tail(h + 1, 0);
    std::int64_t prev = 0;
    for (std::size_t i = 1; i <= h; ++i) {
        tail[i] = w[i - 1] - prev;
        prev = w[i - 1];
    }
    SigmaSequence out;
    out.values.resize(h);
    for (std::size_t i = 1; i <= h; ++i) {
        const std::int64_t sigma = tail[i] - (i < h ? tail[i + 1] : 0);
        const std::int64_t cap = (n % 2 == 1 && i == h) ? 1 : 2;
        if (sigma < 0 || sigma > cap)
            throw MultisetError("cumulative weights admit no sigma sequence (index " + std::to_string(i) + ")");
        out.values[i - 1] = static_cast<std::uint8_t>(sigma);
    }
    return out;
}

struct Substitution {
    std::size_t length = 0;
    Composition from;
    Composition to;

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct ErrorPattern {
    std::vector<Substitution> substitutions;

    [[nodiscard]] std::size_t size() const noexcept { return substitutions.size(); }
    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

inline void validate(const Substitution& e) {
    if (e.from == e.to) throw MultisetError("substitution leaves the composition unchanged");
    if (e.from.length() != e.length || e.to.length() != e.length)
        throw MultisetError("substitution crosses length classes");
}

/// Applies the substitutions in order; each must find its source composition present at that point.
inline CompositionMultiset apply_errors(CompositionMultiset c, const ErrorPattern& e) {
    for (const auto& sub : e.substitutions) {
        validate(sub);
        c.remove(sub.from);
        c.add(sub.to);
    }
    return c;
}

/// sum over classes of |C_l(a) Δ C_l(b)| / 2: the fewest substitutions turning a into b.
inline std::uint64_t multiset_distance(const CompositionMultiset& a, const CompositionMultiset& b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiset_distance: length mismatch");
    std::uint64_t sym = 0;
    for (std::size_t l = 1; l <= a.n(); ++l) {
        const auto& ca = a.cls(l);
        const auto& cb = b.cls(l);
        if (ca == cb) continue;
        const std::uint32_t lo = std::min(ca.min_ones(), cb.min_ones());
        const std::uint32_t hi = std::max(ca.max_ones(), cb.max_ones());
        for (std::uint32_t w = lo; w <= hi; ++w) {
            const auto x = ca.count(w);
            const auto y = cb.count(w);
            sym += x > y ? x - y : y - x;
        }
    }
    return sym / 2;
}

}  // namespace masscode

#endif  // MASSCODE_COMPOSITION_HPP
