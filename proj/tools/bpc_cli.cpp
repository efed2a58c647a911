#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bpc/affine.hpp"
#include "bpc/boolfn.hpp"
#include "bpc/bounds.hpp"
#include "bpc/codec.hpp"
#include "bpc/search.hpp"
#include "bpc/stats.hpp"

using nlohmann::json;

namespace {

bpc::BooleanFunction load_tt(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bpc::BadFormat("cannot open " + path);
    return bpc::read_tt(in);
}

std::vector<std::uint8_t> load_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bpc::BadFormat("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void save_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw bpc::BadFormat("cannot write " + path);
}

std::string plateau_string(const bpc::PlateauClass& cls) {
    if (!cls.is_plateaued()) return "not plateaued";
    if (cls.is_bent()) return "bent (s=0)";
    return "plateaued (s=" + std::to_string(cls.s) + ")";
}

json spectrum_json(const bpc::WalshSpectrum& w) {
    json values = json::array();
    for (auto v : w.values) values.push_back(v);
    return json{{"n", w.n}, {"values", values}};
}

int run_analyze(const std::string& input, bool as_json) {
    bpc::BooleanFunction f = load_tt(input);
    const bpc::WalshSpectrum w = bpc::walsh_transform(f);
    const bpc::PlateauClass cls = bpc::classify_plateau(f);
    const int degree = bpc::algebraic_degree(f);
    const bpc::SubspaceCensus census = bpc::odd_parity_census(f, 0);
    if (as_json) {
        json out{{"schema", 1},
                 {"n", f.n()},
                 {"degree", degree},
                 {"class", plateau_string(cls)},
                 {"spectrum", spectrum_json(w)},
                 {"census",
                  {{"V", census.V.get_str()},
                   {"S", census.S.get_str()},
                   {"fraction", census.fraction.get_str()}}}};
        if (cls.is_plateaued()) out["s"] = cls.s;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n: " << f.n() << "\n"
                  << "degree: " << degree << "\n"
                  << "class: " << plateau_string(cls) << "\n"
                  << "spectrum: max |W| = " << w.max_abs()
                  << ", support = " << w.support_size() << " of " << f.size() << "\n"
                  << "S(0)/V: " << census.S.get_str() << "/" << census.V.get_str() << " = "
                  << census.fraction.get_str() << "\n";
    }
    return 0;
}

int run_encode(const std::string& input, const std::string& output, std::uint64_t seed,
               const std::string& mode) {
    bpc::BooleanFunction f = load_tt(input);
    std::vector<std::uint8_t> bytes;
    if (mode == "dual") {
        bytes = bpc::encode_bent_dual(f, seed);
    } else {
        bytes = bpc::encode_plateaued(f, seed);
    }
    save_bytes(output, bytes);
    const bpc::SectionLengths rep = bpc::bitstream_length_report(bytes);
    std::cout << "encoded " << f.size() << " table bits into " << rep.total_bits
              << " stream bits\n";
    return 0;
}

int run_decode(const std::string& input, const std::string& output) {
    bpc::BooleanFunction f = bpc::decode(load_bytes(input));
    std::ofstream out(output);
    if (!out) throw bpc::BadFormat("cannot write " + output);
    bpc::write_tt(out, f);
    return 0;
}

int run_enumerate(int n, int s, const std::string& output) {
    bpc::Corpus corpus = bpc::enumerate_plateaued(n, s);
    if (output.empty()) {
        bpc::write_corpus(std::cout, corpus);
    } else {
        std::ofstream out(output);
        if (!out) throw bpc::BadFormat("cannot write " + output);
        bpc::write_corpus(out, corpus);
        std::cout << "enumerated " << corpus.functions.size() << " functions\n";
    }
    return 0;
}

json bound_json(const bpc::BoundReport& rep) {
    json comps = json::object();
    for (const auto& [name, v] : rep.components) comps[name] = static_cast<double>(v);
    json extras = json::object();
    for (const auto& [name, v] : rep.extras) extras[name] = static_cast<double>(v);
    json out{{"n", rep.n},
             {"s", rep.s},
             {"label", rep.label},
             {"leading_term_bits", static_cast<double>(rep.leading_term_bits)},
             {"components", comps}};
    if (!extras.empty()) out["extras"] = extras;
    if (rep.known_log2_count) out["known_log2_count"] = static_cast<double>(*rep.known_log2_count);
    return out;
}

void print_bound(const bpc::BoundReport& rep) {
    std::cout << "n=" << rep.n << " s=" << rep.s << "  " << rep.label << ": "
              << static_cast<double>(rep.leading_term_bits) << " bits";
    if (rep.known_log2_count) {
        std::cout << "  (known log2 count " << static_cast<double>(*rep.known_log2_count);
        if (rep.leading_term_bits < *rep.known_log2_count) {
            std::cout << "; finite-n bound below known count, leading term only";
        }
        std::cout << ")";
    }
    std::cout << "\n";
    for (const auto& [name, v] : rep.components) {
        std::cout << "    " << name << " = " << static_cast<double>(v) << "\n";
    }
    for (const auto& [name, v] : rep.extras) {
        std::cout << "    [" << name << " = " << static_cast<double>(v) << "]\n";
    }
}

int run_bounds(int n_min, int n_max, bool as_json) {
    json rows = json::array();
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<bpc::BoundReport> reports;
        if (n % 2 == 0) reports.push_back(bpc::bent_bound(n));
        if (n % 2 == 1 && n >= 3) reports.push_back(bpc::restricted_nearbent_bound(n));
        for (int s = 1 + (n % 2 == 0); s <= n; s += 2) {
            reports.push_back(bpc::plateaued_bound(n, s));
        }
        for (const auto& rep : reports) {
            if (as_json) rows.push_back(bound_json(rep));
            else print_bound(rep);
        }
    }
    if (as_json) std::cout << json{{"schema", 1}, {"bounds", rows}}.dump(2) << "\n";
    return 0;
}

int run_stats(const std::string& input, int face_i, int face_j, bool as_json) {
    bpc::BooleanFunction f = load_tt(input);
    const bpc::SubspaceCensus census = bpc::odd_parity_census(f, 0);
    const bpc::FaceHistogram hist = bpc::face_histogram(f, face_i, face_j);
    const bpc::FaceBitCost cost = bpc::per_face_bit_cost(hist);
    if (as_json) {
        json hj = json::object();
        for (int z = 0; z <= 4; ++z) hj[std::to_string(z)] = hist.counts[z];
        std::cout << json{{"schema", 1},
                          {"V", census.V.get_str()},
                          {"S", census.S.get_str()},
                          {"fraction", census.fraction.get_str()},
                          {"histogram", hj},
                          {"per_face_bits", cost.value()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "V=" << census.V.get_str() << " S=" << census.S.get_str()
                  << " fraction=" << census.fraction.get_str() << "\n";
        std::cout << "face (" << face_i << "," << face_j << ") zero-count histogram:";
        for (int z = 0; z <= 4; ++z) std::cout << " " << z << ":" << hist.counts[z];
        std::cout << "\nper-face bits: " << cost.value() << "\n";
    }
    return 0;
}

int run_verify(const std::string& input, std::uint64_t seed, const std::string& mode) {
    std::ifstream in(input);
    if (!in) throw bpc::BadFormat("cannot open " + input);
    bpc::Corpus corpus = bpc::read_corpus(in);
    std::size_t ok = 0;
    std::size_t total_bits = 0;
    for (const auto& f : corpus.functions) {
        std::vector<std::uint8_t> bytes = mode == "dual" ? bpc::encode_bent_dual(f, seed)
                                                         : bpc::encode_plateaued(f, seed);
        total_bits += bytes.size() * 8;
        if (bpc::decode(bytes) == f) ++ok;
    }
    std::cout << ok << "/" << corpus.functions.size() << " roundtrips OK\n";
    if (!corpus.functions.empty()) {
        std::cout << "mean stream bits: "
                  << static_cast<double>(total_bits) / double(corpus.functions.size())
                  << " (raw table: " << (std::uint32_t{1} << corpus.n) << ")\n";
    }
    return ok == corpus.functions.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis and compact storage of bent and plateaued Boolean functions"};
    app.require_subcommand(1);

    std::string input, output, mode = "direct";
    std::uint64_t seed = 1;
    bool as_json = false;
    int n = 4, s = 0, n_min = 2, n_max = 8;
    int face_i = 1, face_j = 2;

    auto* analyze = app.add_subcommand("analyze", "classify a function and summarize its spectrum");
    analyze->add_option("--input", input)->required();
    analyze->add_flag("--json", as_json);

    auto* encode = app.add_subcommand("encode", "encode a tt file into a BPC1 stream");
    encode->add_option("--input", input)->required();
    encode->add_option("--output", output)->required();
    encode->add_option("--seed", seed);
    encode->add_option("--mode", mode)->check(CLI::IsMember({"direct", "dual"}));

    auto* decode = app.add_subcommand("decode", "decode a BPC1 stream back to a tt file");
    decode->add_option("--input", input)->required();
    decode->add_option("--output", output)->required();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustively enumerate plateaued functions");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--s", s)->required();
    enumerate->add_option("--output", output);

    auto* bounds = app.add_subcommand("bounds", "evaluate the storage bound formulas");
    bounds->add_option("--n-min", n_min);
    bounds->add_option("--n-max", n_max);
    bounds->add_flag("--json", as_json);

    auto* stats = app.add_subcommand("stats", "subspace census and face statistics");
    stats->add_option("--input", input)->required();
    stats->add_option("--face-i", face_i);
    stats->add_option("--face-j", face_j);
    stats->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "roundtrip-check every function in a corpus");
    verify->add_option("--input", input)->required();
    verify->add_option("--seed", seed);
    verify->add_option("--mode", mode)->check(CLI::IsMember({"direct", "dual"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(input, as_json);
        if (*encode) return run_encode(input, output, seed, mode);
        if (*decode) return run_decode(input, output);
        if (*enumerate) return run_enumerate(n, s, output);
        if (*bounds) return run_bounds(n_min, n_max, as_json);
        if (*stats) return run_stats(input, face_i, face_j, as_json);
        if (*verify) return run_verify(input, seed, mode);
    } catch (const bpc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
