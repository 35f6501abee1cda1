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

// Brute-force references: codebook distance certification and nearest-codeword
// decoding. Both compute every multiset up front and are meant for small codebooks.

#ifndef MASSCODE_ORACLE_HPP
#define MASSCODE_ORACLE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "composition.hpp"

namespace masscode {

struct CertificationReport {
    bool pass = true;
    std::size_t codebook_size = 0;
    std::size_t t = 0;
    /// Minimum pairwise distance; unset for codebooks with fewer than two words.
    std::optional<std::uint64_t> min_distance;
    std::optional<std::pair<BitString, BitString>> witness;  // a closest pair
    std::size_t violations = 0;                              // pairs closer than 2t+1
};

inline void write_report(std::ostream& os, const CertificationReport& r) {
    os << (r.pass ? "PASS" : "FAIL") << '\n';
    os << "codebook_size " << r.codebook_size << '\n';
    os << "t " << r.t << '\n';
    os << "min_distance " << (r.min_distance ? std::to_string(*r.min_distance) : std::string("-")) << '\n';
    os << "required " << 2 * r.t + 1 << '\n';
    os << "violating_pairs " << r.violations << '\n';
    if (r.witness) os << "witness " << r.witness->first.to_string() << ' ' << r.witness->second.to_string() << '\n';
}

inline std::string format_report(const CertificationReport& r) {
    std::ostringstream os;
    write_report(os, r);
    return os.str();
}

/// Passes iff every pair of distinct codewords is at multiset distance >= 2t+1.
/// Distinct strings with equal multisets (such as reversals) are at distance 0 and fail.
inline CertificationReport certify_code(const std::vector<BitString>& codebook, std::size_t t) {
    CertificationReport r;
    r.codebook_size = codebook.size();
    r.t = t;
    std::vector<CompositionMultiset> ms;
    ms.reserve(codebook.size());
    for (const auto& s : codebook) ms.push_back(composition_multiset(s));
    for (std::size_t i = 0; i < codebook.size(); ++i)
        for (std::size_t j = i + 1; j < codebook.size(); ++j) {
            if (codebook[i] == codebook[j]) throw std::invalid_argument("certify_code: duplicate codeword");
            const auto d = ms[i].n() == ms[j].n() ? multiset_distance(ms[i], ms[j])
                                                  : std::numeric_limits<std::uint64_t>::max();
            if (d < 2 * t + 1) ++r.violations;
            if (!r.min_distance || d < *r.min_distance) {
                r.min_distance = d;
                r.witness = std::make_pair(codebook[i], codebook[j]);
            }
        }
    r.pass = r.violations == 0;
    return r;
}

class ReferenceDecodeError : public std::runtime_error {
   public:
    ReferenceDecodeError(const std::string& what, std::vector<BitString> minimizers)
        : std::runtime_error(what), minimizers_(std::move(minimizers)) {}
    /// All codewords at the minimum distance (empty when none is within t).
    [[nodiscard]] const std::vector<BitString>& minimizers() const noexcept { return minimizers_; }

   private:
    std::vector<BitString> minimizers_;
};

/// Precomputed multisets for repeated nearest-codeword queries.
class ReferenceDecoder {
   public:
    ReferenceDecoder(std::vector<BitString> codebook, std::size_t t) : codebook_(std::move(codebook)), t_(t) {
        ms_.reserve(codebook_.size());
        for (const auto& s : codebook_) ms_.push_back(composition_multiset(s));
    }

    [[nodiscard]] BitString decode(const CompositionMultiset& readout) const {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::vector<BitString> mins;
        for (std::size_t i = 0; i < codebook_.size(); ++i) {
            if (ms_[i].n() != readout.n()) continue;
            const auto d = multiset_distance(ms_[i], readout);
            if (d < best) {
                best = d;
                mins.clear();
            }
            if (d == best) mins.push_back(codebook_[i]);
        }
        if (mins.empty() || best > t_) throw ReferenceDecodeError("no codeword within t substitutions", {});
        if (mins.size() > 1) throw ReferenceDecodeError("nearest codeword is not unique", std::move(mins));
        return mins.front();
    }

   private:
    std::vector<BitString> codebook_;
    std::vector<CompositionMultiset> ms_;
    std::size_t t_;
};

inline BitString reference_decode(const CompositionMultiset& readout, const std::vector<BitString>& codebook,
                                  std::size_t t) {
    return ReferenceDecoder(codebook, t).decode(readout);
}

}  // namespace masscode

#endif  // MASSCODE_ORACLE_HPP
