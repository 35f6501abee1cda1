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

// Naive reference computations for tests. Nothing here calls into the library
// except for plain data types, so agreement is evidence rather than tautology.

#ifndef MASSCODE_TESTS_ORACLES_HPP
#define MASSCODE_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Bits = std::vector<int>;

inline Bits bits_of(const std::string& s) {
    Bits b;
    for (char c : s) b.push_back(c - '0');
    return b;
}

inline std::string str_of(const Bits& b) {
    std::string s;
    for (int v : b) s.push_back(static_cast<char>('0' + v));
    return s;
}

inline Bits random_bits(std::mt19937_64& rng, std::size_t n) {
    Bits b(n);
    for (auto& v : b) v = static_cast<int>(rng() & 1U);
    return b;
}

/// (length, zeros, ones) -> multiplicity, by listing every substring.
using Multiset = std::map<std::tuple<int, int, int>, int>;

inline Multiset multiset(const Bits& s) {
    Multiset m;
    const int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i) {
        int ones = 0;
        for (int j = i; j < n; ++j) {
            ones += s[j];
            const int l = j - i + 1;
            ++m[{l, l - ones, ones}];
        }
    }
    return m;
}

/// Laurent polynomial as (x-exp, y-exp) -> integer coefficient.
using Laurent = std::map<std::pair<int, int>, long long>;

inline void add(Laurent& p, int i, int j, long long c) {
    auto& v = p[{i, j}];
    v += c;
    if (v == 0) p.erase({i, j});
}

/// Both sides of P(x,y)P(1/x,1/y) = (n+1) + S(x,y) + S(1/x,1/y), expanded naively.
inline std::pair<Laurent, Laurent> identity_sides(const Bits& s) {
    std::vector<std::pair<int, int>> prefixes{{0, 0}};
    for (int b : s) {
        auto last = prefixes.back();
        prefixes.push_back(b ? std::make_pair(last.first + 1, last.second) : std::make_pair(last.first, last.second + 1));
    }
    Laurent lhs;
    for (auto [a, b] : prefixes)
        for (auto [c, d] : prefixes) add(lhs, a - c, b - d, 1);
    Laurent rhs;
    add(rhs, 0, 0, static_cast<long long>(s.size()) + 1);
    for (const auto& [key, cnt] : multiset(s)) {
        const auto [l, z, w] = key;
        add(rhs, w, z, cnt);
        add(rhs, -w, -z, cnt);
    }
    return {lhs, rhs};
}

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

/// Multiplicative order of g mod q by repeated multiplication.
inline std::uint64_t order(std::uint64_t g, std::uint64_t q) {
    std::uint64_t v = g % q;
    std::uint64_t k = 1;
    while (v != 1) {
        v = v * g % q;
        ++k;
    }
    return k;
}

inline std::uint64_t smallest_generator(std::uint64_t q) {
    for (std::uint64_t g = 2; g < q; ++g)
        if (order(g, q) == q - 1) return g;
    return 0;
}

inline std::uint64_t powmod(std::uint64_t b, std::int64_t e, std::uint64_t q) {
    if (e < 0) {
        // Fermat inverse
        b = powmod(b, static_cast<std::int64_t>(q - 2), q);
        e = -e;
    }
    std::uint64_t r = 1 % q;
    for (std::int64_t k = 0; k < e; ++k) r = r * b % q;
    return r;
}

/// Sum of c * x^i * y^j over F_q, with naive exponentiation.
inline std::uint64_t eval(const Laurent& p, std::uint64_t x, std::uint64_t y, std::uint64_t q) {
    std::uint64_t acc = 0;
    for (const auto& [ij, c] : p) {
        const auto cc = static_cast<std::uint64_t>(((c % static_cast<long long>(q)) + static_cast<long long>(q)) %
                                                   static_cast<long long>(q));
        acc = (acc + cc * powmod(x, ij.first, q) % q * powmod(y, ij.second, q)) % q;
    }
    return acc;
}

/// Pair-walk predicate: partial sums of u_{m+1-j} - u_j stay >= 1 for j <= max(1, floor(m/2) - 1).
inline bool pair_walk_ok(const Bits& u) {
    const int m = static_cast<int>(u.size());
    if (m < 2) return false;
    const int limit = std::max(1, m / 2 - 1);
    int h = 0;
    for (int j = 1; j <= limit; ++j) {
        h += u[m - j] - u[j - 1];
        if (h < 1) return false;
    }
    return true;
}

inline long long hamming(const Bits& a, const Bits& b) {
    long long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// |A Δ B| / 2 summed over classes.
inline long long distance(const Multiset& a, const Multiset& b) {
    long long sym = 0;
    std::set<std::tuple<int, int, int>> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    for (const auto& k : keys) {
        const auto ia = a.find(k);
        const auto ib = b.find(k);
        const long long va = ia == a.end() ? 0 : ia->second;
        const long long vb = ib == b.end() ? 0 : ib->second;
        sym += va > vb ? va - vb : vb - va;
    }
    return sym / 2;
}

inline unsigned long long binomial(unsigned n, unsigned k) {
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle

#endif  // MASSCODE_TESTS_ORACLES_HPP
