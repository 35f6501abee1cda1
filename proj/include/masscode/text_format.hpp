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

// Plain-text formats shared by the CLI and tests.
//
//   bit string : one line of '0'/'1'
//   multiset   : "n=<n>", then per length l one line "l | z:w*count z:w ..." ordered by
//                z descending, "*count" omitted when the count is 1
//   pattern    : one substitution per line "l z:w -> z':w'"; '#' starts a comment line

#ifndef MASSCODE_TEXT_FORMAT_HPP
#define MASSCODE_TEXT_FORMAT_HPP

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "composition.hpp"

namespace masscode {

class FormatError : public std::runtime_error {
   public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line, const char* what) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw FormatError(line, std::string("malformed ") + what + " '" + std::string(s) + "'");
    return v;
}

inline Composition parse_composition(std::string_view tok, std::size_t line) {
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw FormatError(line, "expected z:w, got '" + std::string(tok) + "'");
    return {parse_int<std::uint32_t>(tok.substr(0, colon), line, "zero count"),
            parse_int<std::uint32_t>(tok.substr(colon + 1), line, "one count")};
}

}  // namespace detail

inline void write_bitstring(std::ostream& os, const BitString& s) { os << s.to_string() << '\n'; }

inline BitString read_bitstring(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto t = detail::trim(line);
        if (t.empty()) continue;
        try {
            return BitString::from_string(t);
        } catch (const std::invalid_argument& e) {
            throw FormatError(lineno, e.what());
        }
    }
    // an empty file is the empty string (zero information bits)
    return {};
}

inline void write_multiset(std::ostream& os, const CompositionMultiset& c) {
    os << "n=" << c.n() << '\n';
    for (std::size_t l = 1; l <= c.n(); ++l) {
        os << l << " |";
        c.cls(l).for_each([&](std::uint32_t ones, std::uint32_t count) {
            os << ' ' << (l - ones) << ':' << ones;
            if (count != 1) os << '*' << count;
        });
        os << '\n';
    }
}

inline std::string format_multiset(const CompositionMultiset& c) {
    std::ostringstream os;
    write_multiset(os, c);
    return os.str();
}

/**
 * Parses the multiset format. Entries must be in canonical order and belong to their
 * line's length class; with `require_string_counts` every class must hold n - l + 1 entries.
 */
inline CompositionMultiset read_multiset(std::istream& is, bool require_string_counts = true) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(is, out)) {
            ++lineno;
            if (!detail::trim(out).empty()) return true;
        }
        return false;
    };
    if (!next_line(line)) throw FormatError(lineno, "empty multiset file");
    auto head = detail::trim(line);
    if (head.substr(0, 2) != "n=") throw FormatError(lineno, "expected header n=<n>");
    const auto n = detail::parse_int<std::size_t>(head.substr(2), lineno, "length");
    if (n < 1) throw FormatError(lineno, "n must be positive");

    CompositionMultiset c(n);
    for (std::size_t l = 1; l <= n; ++l) {
        if (!next_line(line)) throw FormatError(lineno, "missing class line for l=" + std::to_string(l));
        auto body = detail::trim(line);
        const auto bar = body.find('|');
        if (bar == std::string_view::npos) throw FormatError(lineno, "expected 'l | ...'");
        const auto lv = detail::parse_int<std::size_t>(detail::trim(body.substr(0, bar)), lineno, "length class");
        if (lv != l) throw FormatError(lineno, "classes out of order: expected " + std::to_string(l));
        bool first = true;
        std::uint32_t prev_ones = 0;
        for (auto tok : detail::split_ws(body.substr(bar + 1))) {
            std::uint32_t count = 1;
            if (const auto star = tok.find('*'); star != std::string_view::npos) {
                count = detail::parse_int<std::uint32_t>(tok.substr(star + 1), lineno, "count");
                if (count == 0) throw FormatError(lineno, "zero count");
                tok = tok.substr(0, star);
            }
            const auto comp = detail::parse_composition(tok, lineno);
            if (comp.length() != l)
                throw FormatError(lineno, "composition " + std::string(tok) + " does not belong to class " +
                                              std::to_string(l));
            if (!first && comp.ones <= prev_ones) throw FormatError(lineno, "entries not in z-descending order");
            first = false;
            prev_ones = comp.ones;
            c.cls(l).add(comp.ones, count);
        }
        if (require_string_counts && c.cls(l).size() != n - l + 1)
            throw FormatError(lineno, "class " + std::to_string(l) + " holds " + std::to_string(c.cls(l).size()) +
                                          " compositions, expected " + std::to_string(n - l + 1));
    }
    if (next_line(line)) throw FormatError(lineno, "trailing content after class n");
    return c;
}

inline CompositionMultiset parse_multiset(const std::string& text, bool require_string_counts = true) {
    std::istringstream is(text);
    return read_multiset(is, require_string_counts);
}

inline void write_pattern(std::ostream& os, const ErrorPattern& e) {
    for (const auto& s : e.substitutions)
        os << s.length << ' ' << s.from.zeros << ':' << s.from.ones << " -> " << s.to.zeros << ':' << s.to.ones
           << '\n';
}

inline ErrorPattern read_pattern(std::istream& is) {
    ErrorPattern e;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto toks = detail::split_ws(t);
        if (toks.size() != 4 || toks[2] != "->") throw FormatError(lineno, "expected 'l z:w -> z:w'");
        Substitution s;
        s.length = detail::parse_int<std::size_t>(toks[0], lineno, "length");
        s.from = detail::parse_composition(toks[1], lineno);
        s.to = detail::parse_composition(toks[3], lineno);
        try {
            validate(s);
        } catch (const MultisetError& err) {
            throw FormatError(lineno, err.what());
        }
        e.substitutions.push_back(s);
    }
    return e;
}

inline ErrorPattern parse_pattern(const std::string& text) {
    std::istringstream is(text);
    return read_pattern(is);
}

}  // namespace masscode

#endif  // MASSCODE_TEXT_FORMAT_HPP
