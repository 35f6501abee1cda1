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

#ifndef MASSCODE_CHANNEL_HPP
#define MASSCODE_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "composition.hpp"

namespace masscode {

/// Seeded generator. Draws are made here rather than through std distributions,
/// whose output is implementation-defined, so campaigns replay bit-for-bit.
class Rng {
   public:
    static constexpr const char* kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
        std::uint64_t v;
        do v = eng_();
        while (v >= limit);
        return v % bound;
    }

    BitString bits(std::size_t n) {
        BitString out = BitString::zeros(n);
        for (std::size_t i = 0; i < n; ++i) out.set(i, static_cast<std::uint8_t>(eng_() >> 63U));
        return out;
    }

   private:
    std::mt19937_64 eng_;
};

enum class PatternStrategy {
    UniformElement,  // source drawn uniformly from all n(n+1)/2 multiset entries
    UniformClass,    // length class drawn uniformly, then an entry of that class
};

/**
 * Draws k substitutions and applies them in order to a working copy, so each
 * source composition is present when drawn. The replacement is uniform over the
 * other compositions of the same length.
 */
inline ErrorPattern random_pattern(const CompositionMultiset& c, std::size_t k, Rng& rng,
                                   PatternStrategy strategy = PatternStrategy::UniformElement) {
    CompositionMultiset work = c;
    ErrorPattern out;
    const std::size_t n = c.n();
    for (std::size_t e = 0; e < k; ++e) {
        std::size_t l = 0;
        std::uint64_t idx = 0;
        if (strategy == PatternStrategy::UniformElement) {
            idx = rng.below(work.total_size());
            for (l = 1; l <= n && idx >= work.cls(l).size(); ++l) idx -= work.cls(l).size();
        } else {
            do l = 1 + rng.below(n);
            while (work.cls(l).empty());
            idx = rng.below(work.cls(l).size());
        }
        std::uint32_t from_ones = 0;
        bool found = false;
        work.cls(l).for_each([&](std::uint32_t ones, std::uint32_t count) {
            if (found) return;
            if (idx < count) {
                from_ones = ones;
                found = true;
            } else {
                idx -= count;
            }
        });
        // l other compositions share the length; skip over the source
        auto to_ones = static_cast<std::uint32_t>(rng.below(l));
        if (to_ones >= from_ones) ++to_ones;
        Substitution sub{l,
                         {static_cast<std::uint32_t>(l - from_ones), from_ones},
                         {static_cast<std::uint32_t>(l - to_ones), to_ones}};
        work.remove(sub.from);
        work.add(sub.to);
        out.substitutions.push_back(sub);
    }
    return out;
}

}  // namespace masscode

#endif  // MASSCODE_CHANNEL_HPP
