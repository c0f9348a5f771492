#include "selfloc/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace selfloc {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

json provenance_to_json(const Provenance& p) {
    json j;
    j["method"] = to_string(p.method);
    if (p.has_generator()) {
        j["lfsr"] = {{"order", p.lfsr.order},
                     {"taps", p.lfsr.taps},
                     {"seed", format_bits(window_to_bits({p.lfsr.seed, p.lfsr.order}))}};
    }
    if (p.method == Provenance::Method::inverse_d) j["b0"] = p.inverse_d_first_bit;
    return j;
}

Provenance provenance_from_json(const json& j) {
    Provenance p;
    p.method = provenance_method_from_string(j.at("method").get<std::string>());
    if (j.contains("lfsr")) {
        const json& l = j.at("lfsr");
        p.lfsr.order = l.at("order").get<int>();
        p.lfsr.taps = l.at("taps").get<std::vector<int>>();
        p.lfsr.seed = window_from_bits(parse_bits(l.at("seed").get<std::string>())).value;
    }
    if (j.contains("b0") && !j.at("b0").is_null())
        p.inverse_d_first_bit = j.at("b0").get<int>();
    return p;
}

void validate_declared_kind(const BitSequence& s, const std::string& origin) {
    bool ok = true;
    switch (s.kind) {
        case SeqKind::m_sequence: ok = is_m_sequence(s, s.order); break;
        case SeqKind::de_bruijn: ok = is_de_bruijn(s, s.order); break;
        case SeqKind::half_de_bruijn: ok = is_half_de_bruijn(s, s.order); break;
        case SeqKind::raw: break;
    }
    if (!ok)
        throw std::runtime_error(origin + ": bits do not satisfy the declared kind '" +
                                 to_string(s.kind) + "'");
}

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& file) {
    std::filesystem::path p = file;
    p += ".json";
    return p;
}

json sequence_to_json(const BitSequence& s) {
    return json{{"kind", to_string(s.kind)},
                {"order", s.order},
                {"length", s.length()},
                {"bits", format_bits(s.bits)},
                {"provenance", provenance_to_json(s.provenance)}};
}

BitSequence sequence_from_json(const json& j) {
    BitSequence s;
    s.kind = seq_kind_from_string(j.at("kind").get<std::string>());
    s.order = j.at("order").get<int>();
    s.bits = parse_bits(j.at("bits").get<std::string>());
    if (j.contains("provenance")) s.provenance = provenance_from_json(j.at("provenance"));
    if (j.contains("length") && j.at("length").get<size_t>() != s.length())
        throw std::runtime_error("sequence length field disagrees with the bits");
    validate_declared_kind(s, "sequence record");
    return s;
}

void write_sequence(const std::filesystem::path& path, const BitSequence& s) {
    write_file(path, format_bits(s.bits) + "\n");
    json j = sequence_to_json(s);
    j.erase("bits");  // the bits line is the payload; the sidecar is metadata
    write_file(sidecar_path(path), j.dump(2) + "\n");
}

BitSequence read_sequence(const std::filesystem::path& path) {
    BitSequence s;
    s.bits = parse_bits(read_file(path));
    json j = json::parse(read_file(sidecar_path(path)));
    s.kind = seq_kind_from_string(j.at("kind").get<std::string>());
    s.order = j.at("order").get<int>();
    if (j.contains("provenance")) s.provenance = provenance_from_json(j.at("provenance"));
    if (j.at("length").get<size_t>() != s.length())
        throw std::runtime_error(path.string() + ": sidecar length disagrees with the bits");
    validate_declared_kind(s, path.string());
    return s;
}

std::string to_pbm(const BitMatrix& m) {
    std::ostringstream out;
    out << "P1\n" << m.cols() << ' ' << m.rows() << '\n';
    for (const auto& row : m.row_strings()) out << row << '\n';
    return out.str();
}

BitMatrix from_pbm(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    in >> magic;
    if (magic != "P1") throw std::runtime_error("not a P1 bitmap");
    size_t cols = 0, rows = 0;
    in >> cols >> rows;
    if (!in || rows == 0 || cols == 0) throw std::runtime_error("bad bitmap dimensions");
    BitMatrix m(rows, cols);
    size_t have = 0;
    char c;
    while (have < rows * cols && in.get(c)) {
        if (c == '0' || c == '1') {
            m.set(have / cols, have % cols, c == '1');
            ++have;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::runtime_error("invalid bitmap character");
        }
    }
    if (have != rows * cols) throw std::runtime_error("bitmap truncated");
    return m;
}

void write_pattern(const std::filesystem::path& pbm_path, const PatternArray& g) {
    write_file(pbm_path, to_pbm(g.grid));
    json j{{"k", g.vertical_order()},
           {"n", g.horizontal_order()},
           {"mode", to_string(g.mode)},
           {"vertical_sequence", sequence_to_json(g.vertical)},
           {"horizontal_sequence", sequence_to_json(g.horizontal)}};
    write_file(sidecar_path(pbm_path), j.dump(2) + "\n");
}

PatternArray read_pattern(const std::filesystem::path& pbm_path) {
    BitMatrix grid = from_pbm(read_file(pbm_path));
    json j = json::parse(read_file(sidecar_path(pbm_path)));
    BitSequence vertical = sequence_from_json(j.at("vertical_sequence"));
    BitSequence horizontal = sequence_from_json(j.at("horizontal_sequence"));
    GridMode mode = grid_mode_from_string(j.at("mode").get<std::string>());
    if (j.at("k").get<int>() != vertical.order || j.at("n").get<int>() != horizontal.order)
        throw std::runtime_error(pbm_path.string() + ": sidecar orders disagree");
    return PatternArray::from_parts(std::move(grid), std::move(vertical),
                                    std::move(horizontal), mode);
}

json sample_to_json(const Sample& sample) {
    if (const auto* rect = std::get_if<RectSample>(&sample)) {
        return json{{"kind", "rect"},
                    {"bits", rect->bits.row_strings()},
                    {"k", rect->bits.rows()},
                    {"n", rect->bits.cols()}};
    }
    const auto& c = std::get<CrossSample>(sample);
    return json{{"kind", "cross"},
                {"bits", {format_bits(c.vertical_arm), format_bits(c.horizontal_arm)}},
                {"k", c.vertical_arm.size()},
                {"n", c.horizontal_arm.size()},
                {"i0", c.i0},
                {"j0", c.j0}};
}

Sample sample_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rect") {
        RectSample s;
        s.bits = BitMatrix::from_row_strings(j.at("bits").get<std::vector<std::string>>());
        if (j.contains("k") && j.at("k").get<size_t>() != s.bits.rows())
            throw std::runtime_error("rect sample: k disagrees with the rows");
        if (j.contains("n") && j.at("n").get<size_t>() != s.bits.cols())
            throw std::runtime_error("rect sample: n disagrees with the columns");
        return s;
    }
    if (kind == "cross") {
        CrossSample s;
        auto arms = j.at("bits").get<std::vector<std::string>>();
        if (arms.size() != 2)
            throw std::runtime_error("cross sample: expected [vertical, horizontal] bits");
        s.vertical_arm = parse_bits(arms[0]);
        s.horizontal_arm = parse_bits(arms[1]);
        s.i0 = j.at("i0").get<int>();
        s.j0 = j.at("j0").get<int>();
        s.validate();
        return s;
    }
    throw std::runtime_error("unknown sample kind: " + kind);
}

void write_sample(const std::filesystem::path& path, const Sample& sample) {
    write_file(path, sample_to_json(sample).dump(2) + "\n");
}

Sample read_sample(const std::filesystem::path& path) {
    return sample_from_json(json::parse(read_file(path)));
}

json decode_report_to_json(const DecodeReport& rep) {
    json j;
    j["status"] = to_string(rep.status);
    if (rep.status != DecodeStatus::ok) {
        j["reason"] = rep.reason;
        return j;
    }
    if (rep.location) {
        j["row"] = rep.location->row;
        j["col"] = rep.location->col;
    }
    j["X"] = format_bits(rep.recovered_vertical);
    j["Y"] = format_bits(rep.recovered_horizontal);
    j["corrected"] = rep.corrected.row_strings();
    j["error_counts"] = {{"rows", rep.row_error_counts}, {"cols", rep.col_error_counts}};
    return j;
}

json cross_result_to_json(const CrossDecodeResult& res) {
    json j;
    j["status"] = to_string(res.status);
    if (res.status != DecodeStatus::ok) {
        j["reason"] = res.reason;
        return j;
    }
    j["row"] = res.location.row;
    j["col"] = res.location.col;
    j["vertical_complemented"] = res.location.vertical_complemented;
    j["horizontal_complemented"] = res.location.horizontal_complemented;
    return j;
}

}  // namespace selfloc
