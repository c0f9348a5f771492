// Command-line front end: sequence/pattern generation, window location,
// decoding, verification, and simulation over text-first file formats.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "selfloc/analysis.hpp"
#include "selfloc/decode.hpp"
#include "selfloc/io.hpp"

using nlohmann::json;
using namespace selfloc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // verification failed, decode not ok
constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input

struct GenSeqArgs {
    std::string kind = "mseq";
    int order = 0;
    std::string taps;
    std::string seed;
    std::string half_method = "mseq";
    int first_bit = 1;
    std::string out;
};

struct GenPatternArgs {
    int k = 5;
    int n = 4;
    std::string half_method = "mseq";
    int first_bit = 1;
    bool acyclic = false;
    std::string vertical_file;
    std::string horizontal_file;
    std::string out;
};

struct LocateArgs {
    std::string sequence_file;
    std::string window;
    std::string strategy = "table";
    size_t spacing = 0;
};

struct DecodeArgs {
    std::string pattern_file;
    std::string sample_file;
    std::string out;
};

struct SimulateArgs {
    int k = 8;
    int n = 8;
    double p = 0.99;
    size_t trials = 10000;
    std::optional<uint64_t> seed;
    std::string out;
};

std::vector<int> parse_taps(const std::string& text) {
    std::vector<int> taps;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) taps.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return taps;
}

HalfMethod parse_half_method(const std::string& name) {
    if (name == "one-run" || name == "mseq") return HalfMethod::one_run;
    if (name == "inverse-d") return HalfMethod::inverse_d;
    throw CLI::ValidationError("--half must be mseq|inverse-d");
}

uint64_t effective_seed(const std::optional<uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SELFLOC_SEED")) return std::stoull(env);
    return 0;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

int run_gen_seq(const GenSeqArgs& a) {
    BitSequence s;
    if (a.kind == "mseq" || a.kind == "debruijn") {
        LfsrSpec spec;
        spec.order = a.order;
        spec.taps = a.taps.empty() ? builtin_taps(a.order) : parse_taps(a.taps);
        spec.seed = a.seed.empty() ? width_mask(a.order)
                                   : window_from_bits(parse_bits(a.seed)).value;
        BitSequence m = lfsr_m_sequence(spec);
        s = a.kind == "mseq" ? m : de_bruijn_from_m(m);
    } else if (a.kind == "half") {
        HalfMethod method = parse_half_method(a.half_method);
        if (a.taps.empty() && a.seed.empty()) {
            s = make_half_de_bruijn(a.order, method, a.first_bit);
        } else {
            LfsrSpec spec;
            spec.order = a.order - 1;
            spec.taps = a.taps.empty() ? builtin_taps(a.order - 1) : parse_taps(a.taps);
            spec.seed = a.seed.empty() ? width_mask(a.order - 1)
                                       : window_from_bits(parse_bits(a.seed)).value;
            BitSequence m = lfsr_m_sequence(spec);
            s = method == HalfMethod::one_run
                    ? half_de_bruijn_from_m(m)
                    : inverse_d_morphism(de_bruijn_from_m(m), a.first_bit);
        }
    } else {
        throw CLI::ValidationError("--kind must be mseq|debruijn|half");
    }
    write_sequence(a.out, s);
    std::cerr << "wrote " << s.length() << "-bit " << to_string(s.kind) << " of order "
              << s.order << " to " << a.out << "\n";
    return kExitOk;
}

BitSequence sequence_for_pattern(const std::string& file, int order, bool vertical,
                                 const GenPatternArgs& a) {
    if (!file.empty()) {
        BitSequence s = read_sequence(file);
        if (s.order != order)
            throw std::runtime_error(file + ": order " + std::to_string(s.order) +
                                     " does not match the requested " +
                                     std::to_string(order));
        return s;
    }
    if (vertical)
        return make_half_de_bruijn(order, parse_half_method(a.half_method), a.first_bit);
    return make_de_bruijn(order);
}

int run_gen_pattern(const GenPatternArgs& a) {
    BitSequence vertical = sequence_for_pattern(a.vertical_file, a.k, true, a);
    BitSequence horizontal = sequence_for_pattern(a.horizontal_file, a.n, false, a);
    PatternArray g = product(vertical, horizontal);
    if (a.acyclic) g = extend_acyclic(g);
    write_pattern(a.out, g);
    std::cerr << "wrote " << g.rows() << "x" << g.cols() << " pattern to " << a.out
              << "\n";
    return kExitOk;
}

int run_locate(const LocateArgs& a) {
    BitSequence s = read_sequence(a.sequence_file);
    Window query = window_from_bits(parse_bits(a.window));
    Locator loc = [&] {
        if (a.strategy == "scan") return Locator::scan(s);
        if (a.strategy == "table") return Locator::table(s);
        if (a.strategy == "milestone") return Locator::milestone(s, a.spacing);
        throw CLI::ValidationError("--strategy must be scan|table|milestone");
    }();
    try {
        LocateResult r = loc.locate(query);
        emit(json{{"position", r.position},
                  {"complemented", r.complemented},
                  {"steps", r.steps}},
             "");
        return kExitOk;
    } catch (const NoSuchWindow& e) {
        emit(json{{"error", "no_such_window"}, {"reason", e.what()}}, "");
        return kExitDomain;
    }
}

int run_decode_cross(const DecodeArgs& a) {
    PatternArray g = read_pattern(a.pattern_file);
    Sample sample = read_sample(a.sample_file);
    const auto* cs = std::get_if<CrossSample>(&sample);
    if (!cs) throw std::runtime_error(a.sample_file + ": expected a cross sample");
    CrossDecodeResult res =
        decode_cross(*cs, Locator::table(g.vertical), Locator::table(g.horizontal));
    emit(cross_result_to_json(res), a.out);
    return res.status == DecodeStatus::ok ? kExitOk : kExitDomain;
}

int run_decode_rect(const DecodeArgs& a) {
    PatternArray g = read_pattern(a.pattern_file);
    Sample sample = read_sample(a.sample_file);
    const auto* rs = std::get_if<RectSample>(&sample);
    if (!rs) throw std::runtime_error(a.sample_file + ": expected a rect sample");
    DecodeReport rep =
        robust_decode(*rs, Locator::table(g.vertical), Locator::table(g.horizontal));
    emit(decode_report_to_json(rep), a.out);
    return rep.status == DecodeStatus::ok ? kExitOk : kExitDomain;
}

json census_json(const UniquenessReport& rep) {
    json dups = json::array();
    for (const auto& d : rep.duplicates)
        dups.push_back({{"r1", d.r1}, {"c1", d.c1}, {"r2", d.r2}, {"c2", d.c2}});
    return json{{"ok", rep.ok},
                {"positions", rep.positions},
                {"distinct", rep.distinct},
                {"expected", rep.expected},
                {"complete", rep.complete},
                {"duplicates", dups}};
}

int run_verify(const std::string& pattern_file) {
    PatternArray g = read_pattern(pattern_file);
    if (g.mode != GridMode::cyclic)
        throw std::runtime_error("verify expects a cyclic pattern file");
    const int k = g.vertical_order(), n = g.horizontal_order();

    // Cell-level check against the sequences, then the window censuses.
    json mismatch;
    for (size_t r = 0; r < g.rows() && mismatch.is_null(); ++r)
        for (size_t c = 0; c < g.cols(); ++c)
            if (g.grid.get(r, c) != (g.vertical.bits[r] ^ g.horizontal.bits[c])) {
                mismatch = json{{"row", r}, {"col", c}};
                break;
            }
    UniquenessReport rect = rect_uniqueness_census(g.grid, k, n);
    rect.expected = size_t{1} << (k - 1 + n);
    rect.complete = rect.distinct == rect.expected;
    UniquenessReport crossrep = cross_uniqueness_census(g.grid, k, n, k / 2, n / 2);

    bool ok = mismatch.is_null() && rect.ok && rect.complete && crossrep.ok;
    emit(json{{"ok", ok},
              {"grid_matches_sequences", mismatch.is_null()},
              {"first_mismatch", mismatch},
              {"rect_census", census_json(rect)},
              {"cross_census", census_json(crossrep)}},
         "");
    return ok ? kExitOk : kExitDomain;
}

int run_simulate(const SimulateArgs& a) {
    SimulationResult r =
        monte_carlo_success_rate(a.k, a.n, a.p, a.trials, effective_seed(a.seed));
    std::ostringstream csv;
    csv << simulation_csv_header() << "\n" << simulation_csv_row(a.p, a.n, r) << "\n";
    if (a.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary self-location patterns: generation, decoding, analysis"};
    app.require_subcommand(1);

    GenSeqArgs gs;
    auto* gen_seq = app.add_subcommand("gen-seq", "generate a sequence file");
    gen_seq->add_option("--kind", gs.kind, "mseq|debruijn|half")->capture_default_str();
    gen_seq->add_option("--order", gs.order, "window order")->required();
    gen_seq->add_option("--taps", gs.taps, "feedback exponents, e.g. 4,1,0");
    gen_seq->add_option("--seed", gs.seed, "register seed bits, e.g. 1111");
    gen_seq->add_option("--half", gs.half_method, "mseq|inverse-d")
        ->capture_default_str();
    gen_seq->add_option("--b0", gs.first_bit, "first bit for inverse-d")
        ->capture_default_str();
    gen_seq->add_option("--out", gs.out, "output path")->required();

    GenPatternArgs gp;
    auto* gen_pattern = app.add_subcommand("gen-pattern", "generate a pattern file");
    gen_pattern->add_option("--k", gp.k, "vertical order")->capture_default_str();
    gen_pattern->add_option("--n", gp.n, "horizontal order")->capture_default_str();
    gen_pattern->add_option("--half", gp.half_method, "mseq|inverse-d")
        ->capture_default_str();
    gen_pattern->add_option("--b0", gp.first_bit, "first bit for inverse-d")
        ->capture_default_str();
    gen_pattern->add_flag("--acyclic", gp.acyclic, "write the acyclic extension");
    gen_pattern->add_option("--vertical", gp.vertical_file, "vertical sequence file");
    gen_pattern->add_option("--horizontal", gp.horizontal_file,
                            "horizontal sequence file");
    gen_pattern->add_option("--out", gp.out, "output PBM path")->required();

    LocateArgs la;
    auto* locate_cmd = app.add_subcommand("locate", "locate a window in a sequence");
    locate_cmd->add_option("--sequence", la.sequence_file, "sequence file")->required();
    locate_cmd->add_option("--window", la.window, "query bits, e.g. 0111")->required();
    locate_cmd->add_option("--strategy", la.strategy, "scan|table|milestone")
        ->capture_default_str();
    locate_cmd->add_option("--spacing", la.spacing, "milestone spacing (0 = default)");

    DecodeArgs dc, dr;
    auto* decode_cross_cmd =
        app.add_subcommand("decode-cross", "decode a cross sample JSON");
    decode_cross_cmd->add_option("--pattern", dc.pattern_file, "pattern PBM path")
        ->required();
    decode_cross_cmd->add_option("--sample", dc.sample_file, "sample JSON path")
        ->required();
    decode_cross_cmd->add_option("--out", dc.out, "report path (default stdout)");

    auto* decode_rect_cmd =
        app.add_subcommand("decode-rect", "decode a rectangular sample JSON");
    decode_rect_cmd->add_option("--pattern", dr.pattern_file, "pattern PBM path")
        ->required();
    decode_rect_cmd->add_option("--sample", dr.sample_file, "sample JSON path")
        ->required();
    decode_rect_cmd->add_option("--out", dr.out, "report path (default stdout)");

    std::string verify_pattern;
    auto* verify_cmd = app.add_subcommand("verify", "census checks on a pattern file");
    verify_cmd->add_option("--pattern", verify_pattern, "pattern PBM path")->required();

    SimulateArgs sa;
    auto* simulate_cmd = app.add_subcommand("simulate", "decode success rate under noise");
    simulate_cmd->add_option("--k", sa.k, "vertical order")->capture_default_str();
    simulate_cmd->add_option("--n", sa.n, "horizontal order")->capture_default_str();
    simulate_cmd->add_option("--p", sa.p, "per-bit correct probability")
        ->capture_default_str();
    simulate_cmd->add_option("--trials", sa.trials, "trial count")->capture_default_str();
    simulate_cmd->add_option("--seed", sa.seed, "RNG seed (SELFLOC_SEED fallback)");
    simulate_cmd->add_option("--out", sa.out, "CSV path (default stdout)");

    auto* table_cmd =
        app.add_subcommand("table1", "print the row-condition probability table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_seq->parsed()) return run_gen_seq(gs);
        if (gen_pattern->parsed()) return run_gen_pattern(gp);
        if (locate_cmd->parsed()) return run_locate(la);
        if (decode_cross_cmd->parsed()) return run_decode_cross(dc);
        if (decode_rect_cmd->parsed()) return run_decode_rect(dr);
        if (verify_cmd->parsed()) return run_verify(verify_pattern);
        if (simulate_cmd->parsed()) return run_simulate(sa);
        if (table_cmd->parsed()) {
            std::cout << format_table1(reproduce_table1());
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
