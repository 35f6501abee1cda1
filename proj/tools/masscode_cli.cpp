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

// masscode: encode, corrupt, and decode composition multisets from the command line.
//
// Exit codes: 0 ok, 2 input or parameter error, 3 decode failure, 4 certification
// or identity failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <masscode/catalan.hpp>
#include <masscode/channel.hpp>
#include <masscode/codec.hpp>
#include <masscode/oracle.hpp>
#include <masscode/polybiv.hpp>
#include <masscode/text_format.hpp>

namespace {

using namespace masscode;

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kDecodeFailure = 3;
constexpr int kCertifyFailure = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::size_t> n;
    std::size_t t = 1;
    std::string in;
    std::string out;
    std::string multiset_out;
    std::uint64_t seed = 0;
    std::string errors;
    std::size_t trials = 100;
    std::string mode = "codec";
    bool no_timing = false;
};

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::ifstream open_in(const std::string& path) {
    if (path.empty()) throw InputError("--in is required");
    std::ifstream is(path);
    if (!is) throw InputError("cannot open " + path);
    return is;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw InputError("cannot write " + path);
    return os;
}

std::size_t require_n(const Options& o) {
    if (!o.n) throw InputError("--n is required");
    return *o.n;
}

/// Encoder for either mode behind one signature.
struct Scheme {
    std::optional<CodecParams> codec;
    std::optional<CatalanCode> catalan;

    [[nodiscard]] std::size_t info_bits() const { return codec ? codec->info_bits() : catalan->info_bits(); }
    [[nodiscard]] BitString encode(const BitString& info) const {
        return codec ? masscode::encode(info, *codec).s : catalan->encode(info);
    }
};

Scheme make_scheme(const Options& o, std::size_t n) {
    Scheme s;
    if (o.mode == "codec") {
        s.codec = CodecParams::make(n, o.t);
    } else if (o.mode == "catalan") {
        s.catalan.emplace(n, o.t);
    } else {
        throw InputError("unknown --mode " + o.mode);
    }
    return s;
}

int cmd_encode(const Options& o) {
    auto is = open_in(o.in);
    const auto info = read_bitstring(is);
    const auto scheme = make_scheme(o, require_n(o));
    if (info.size() != scheme.info_bits())
        throw InputError("expected " + std::to_string(scheme.info_bits()) + " information bits, got " +
                         std::to_string(info.size()));
    if (o.out.empty()) throw InputError("--out is required");
    const auto s = scheme.encode(info);
    auto os = open_out(o.out);
    write_bitstring(os, s);
    auto ms = open_out(o.multiset_out.empty() ? o.out + ".ms" : o.multiset_out);
    write_multiset(ms, composition_multiset(s));
    return kOk;
}

int cmd_corrupt(const Options& o) {
    auto is = open_in(o.in);
    const auto c = read_multiset(is);
    if (o.out.empty()) throw InputError("--out is required");
    ErrorPattern pattern;
    bool random = false;
    if (o.errors.rfind("random:", 0) == 0) {
        std::size_t k = 0;
        try {
            k = std::stoull(o.errors.substr(7));
        } catch (const std::exception&) {
            throw InputError("malformed --errors " + o.errors);
        }
        Rng rng(o.seed);
        pattern = random_pattern(c, k, rng);
        random = true;
    } else if (!o.errors.empty()) {
        std::ifstream es(o.errors);
        if (!es) throw InputError("cannot open " + o.errors);
        pattern = read_pattern(es);
    } else {
        throw InputError("--errors is required");
    }
    CompositionMultiset noisy{1};
    try {
        noisy = apply_errors(c, pattern);
    } catch (const MultisetError& e) {
        throw InputError(e.what());
    }
    auto os = open_out(o.out);
    write_multiset(os, noisy);
    if (random) {
        auto ps = open_out(o.out + ".errors");
        ps << "# prng " << Rng::kName << " seed " << o.seed << '\n';
        write_pattern(ps, pattern);
    }
    return kOk;
}

int cmd_decode(const Options& o) {
    auto is = open_in(o.in);
    const auto readout = read_multiset(is);
    if (o.n && *o.n != readout.n())
        throw InputError("--n " + std::to_string(*o.n) + " does not match the multiset length " +
                         std::to_string(readout.n()));
    const auto scheme = make_scheme(o, readout.n());
    BitString info;
    BitString s;
    std::size_t corrections = 0;
    std::size_t inner = 0;
    try {
        if (scheme.codec) {
            const auto res = decode(readout, *scheme.codec);
            info = res.info;
            s = res.codeword.s;
            corrections = res.corrections;
            inner = res.inner_corrections;
        } else {
            s = scheme.catalan->decode(readout);
            info = scheme.catalan->info_of(s);
            corrections = static_cast<std::size_t>(multiset_distance(readout, composition_multiset(s)));
        }
    } catch (const DecodeError& e) {
        std::cout << "status failure\nfailure " << to_string(e.kind()) << "\ndetail " << e.what() << '\n';
        return kDecodeFailure;
    } catch (const CatalanDecodeError& e) {
        std::cout << "status failure\nfailure catalan\ndetail " << e.what() << '\n';
        return kDecodeFailure;
    } catch (const std::invalid_argument& e) {
        // a Catalan codeword outside the information range
        std::cout << "status failure\nfailure validation\ndetail " << e.what() << '\n';
        return kDecodeFailure;
    }
    std::cout << "status ok\ncorrections " << corrections << '\n';
    if (scheme.codec) std::cout << "inner_corrections " << inner << '\n';
    if (!o.out.empty()) {
        auto os = open_out(o.out);
        write_bitstring(os, info);
        auto cs = open_out(o.out + ".corrected.ms");
        write_multiset(cs, composition_multiset(s));
    } else {
        std::cout << "info " << info.to_string() << '\n';
    }
    return kOk;
}

int cmd_roundtrip(const Options& o) {
    const auto scheme = make_scheme(o, require_n(o));
    std::uint64_t state = o.seed;
    std::size_t successes = 0;
    double total_ms = 0;
    for (std::size_t trial = 0; trial < o.trials; ++trial) {
        Rng rng(splitmix64(state));
        const auto info = rng.bits(scheme.info_bits());
        const auto s = scheme.encode(info);
        const auto c = composition_multiset(s);
        const auto readout = apply_errors(c, random_pattern(c, rng.below(o.t + 1), rng));
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            if (scheme.codec) {
                const auto res = decode(readout, *scheme.codec);
                ok = res.info == info && res.codeword.s == s && res.corrected == c;
            } else {
                const auto got = scheme.catalan->decode(readout);
                ok = got == s && scheme.catalan->info_of(got) == info;
            }
        } catch (const DecodeError&) {
        } catch (const CatalanDecodeError&) {
        }
        total_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        successes += ok;
    }
    const double rate = o.trials ? static_cast<double>(successes) / static_cast<double>(o.trials) : 0.0;
    std::cout << "mode\tn\tt\ttrials\tsuccesses\tfailures\tsuccess_rate\tmean_decode_ms\tprng\tseed\n";
    std::cout << o.mode << '\t' << *o.n << '\t' << o.t << '\t' << o.trials << '\t' << successes << '\t'
              << o.trials - successes << '\t' << std::fixed << std::setprecision(4) << rate << '\t';
    if (o.no_timing)
        std::cout << '-';
    else
        std::cout << std::setprecision(3) << (o.trials ? total_ms / static_cast<double>(o.trials) : 0.0);
    std::cout << '\t' << Rng::kName << '\t' << o.seed << '\n';
    return successes == o.trials ? kOk : kDecodeFailure;
}

int cmd_identity(const Options& o) {
    auto is = open_in(o.in);
    const auto s = read_bitstring(is);
    if (s.empty()) throw InputError("empty string");
    const bool pass = verify_identity(s);
    std::cout << (pass ? "PASS" : "FAIL") << "\nn " << s.size() << '\n';
    return pass ? kOk : kCertifyFailure;
}

int cmd_certify(const Options& o) {
    std::vector<BitString> book;
    if (!o.in.empty()) {
        auto is = open_in(o.in);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string word;
            if (!(ls >> word)) continue;
            try {
                book.push_back(BitString::from_string(word));
            } catch (const std::invalid_argument& e) {
                throw FormatError(lineno, e.what());
            }
        }
    } else {
        const auto scheme = make_scheme(o, require_n(o));
        if (scheme.catalan) {
            book = scheme.catalan->codebook();
        } else {
            if (scheme.info_bits() > 8) throw InputError("codec codebook too large to enumerate");
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << scheme.info_bits()); ++v)
                book.push_back(scheme.encode(big_to_bits(v, scheme.info_bits())));
        }
    }
    if (book.empty()) throw InputError("empty codebook");
    CertificationReport r;
    try {
        r = certify_code(book, o.t);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    write_report(std::cout, r);
    return r.pass ? kOk : kCertifyFailure;
}

int cmd_report(const Options& o) {
    std::vector<std::size_t> ns;
    if (o.n) {
        ns.push_back(*o.n);
    } else {
        for (std::size_t n = 64; n <= 4096; n *= 2) ns.push_back(n);
    }
    std::vector<std::size_t> ts;
    if (o.n) {
        ts.push_back(o.t);
    } else {
        for (std::size_t t = 1; t <= 4; ++t) ts.push_back(t);
    }
    std::cout << "n\tt\tq\tpayload_bits\tinner_bits\tr_hat\tfeasible\tsr_redundancy\ttotal\tratio\tgrid_estimate"
                 "\tasymptotic_bound\n";
    std::cout << std::fixed << std::setprecision(3);
    for (auto t : ts)
        for (auto n : ns) {
            const auto r = redundancy_report(n, t);
            std::cout << r.n << '\t' << r.t << '\t' << r.q << '\t' << r.payload_bits << '\t' << r.inner_bits << '\t'
                      << r.r_hat << '\t' << (r.feasible ? "yes" : "no") << '\t' << r.sr_redundancy << '\t'
                      << r.total << '\t' << r.ratio << '\t' << r.grid_estimate << '\t' << r.asymptotic_bound
                      << '\n';
        }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composition-error-correcting codes for mass-spectrometry readout"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "string length");
        sub->add_option("--t", o.t, "substitutions to correct")->check(CLI::PositiveNumber);
        sub->add_option("--mode", o.mode, "codec or catalan")->check(CLI::IsMember({"codec", "catalan"}));
    };

    auto* enc = app.add_subcommand("encode", "information bits to codeword and multiset");
    add_common(enc);
    enc->add_option("--in", o.in, "information bit file");
    enc->add_option("--out", o.out, "codeword file");
    enc->add_option("--multiset-out", o.multiset_out, "multiset file (default <out>.ms)");

    auto* cor = app.add_subcommand("corrupt", "apply substitutions to a multiset");
    cor->add_option("--in", o.in, "multiset file");
    cor->add_option("--out", o.out, "corrupted multiset file");
    cor->add_option("--errors", o.errors, "pattern file or random:<count>");
    cor->add_option("--seed", o.seed, "seed for random:<count>");

    auto* dec = app.add_subcommand("decode", "multiset to information bits");
    add_common(dec);
    dec->add_option("--in", o.in, "multiset file");
    dec->add_option("--out", o.out, "information bit file; <out>.corrected.ms gets the corrected multiset");

    auto* rt = app.add_subcommand("roundtrip", "seeded encode/corrupt/decode campaign");
    add_common(rt);
    rt->add_option("--trials", o.trials, "number of trials");
    rt->add_option("--seed", o.seed, "campaign seed");
    rt->add_flag("--no-timing", o.no_timing, "print '-' for the timing column");

    auto* id = app.add_subcommand("identity", "check the prefix/multiset polynomial identity for a string");
    id->add_option("--in", o.in, "bit string file");

    auto* cert = app.add_subcommand("certify", "check the minimum multiset distance of a codebook");
    add_common(cert);
    cert->add_option("--in", o.in, "codebook file, one string per line");

    auto* rep = app.add_subcommand("report", "redundancy table");
    add_common(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*enc) return cmd_encode(o);
        if (*cor) return cmd_corrupt(o);
        if (*dec) return cmd_decode(o);
        if (*rt) return cmd_roundtrip(o);
        if (*id) return cmd_identity(o);
        if (*cert) return cmd_certify(o);
        if (*rep) return cmd_report(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
