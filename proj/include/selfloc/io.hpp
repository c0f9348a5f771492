#pragma once

#include <filesystem>
#include <variant>

#include "selfloc/decode.hpp"
#include "selfloc/pattern.hpp"
#include "selfloc/sequence.hpp"

#include <nlohmann/json_fwd.hpp>

namespace selfloc {

// Sequence files hold one line of '0'/'1' characters; the metadata sidecar
// lives next to them at "<path>.json".
std::filesystem::path sidecar_path(const std::filesystem::path& file);

void write_sequence(const std::filesystem::path& path, const BitSequence& s);

// Loads bits plus sidecar and re-validates the declared kind by census.
BitSequence read_sequence(const std::filesystem::path& path);

// Pattern files are plain-text PBM (P1) images; the sidecar carries the
// mode and both sequences, which are authoritative for decoding. Reading
// returns the PBM's bits as-is so verification can catch mutated grids.
void write_pattern(const std::filesystem::path& pbm_path, const PatternArray& g);
PatternArray read_pattern(const std::filesystem::path& pbm_path);

std::string to_pbm(const BitMatrix& m);
BitMatrix from_pbm(const std::string& text);

using Sample = std::variant<RectSample, CrossSample>;

void write_sample(const std::filesystem::path& path, const Sample& sample);
Sample read_sample(const std::filesystem::path& path);

nlohmann::json sequence_to_json(const BitSequence& s);
BitSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json sample_to_json(const Sample& sample);
Sample sample_from_json(const nlohmann::json& j);

nlohmann::json decode_report_to_json(const DecodeReport& rep);
nlohmann::json cross_result_to_json(const CrossDecodeResult& res);

}  // namespace selfloc
