#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfloc/locator.hpp"
#include "selfloc/pattern.hpp"

namespace selfloc {

enum class DecodeStatus { ok, tie_ambiguous, no_legal_assignment, inconsistent, no_such_window };

std::string to_string(DecodeStatus status);

// A decoded sample position on the cyclic torus, using the sample's
// reference corner (top of the vertical extent, left of the horizontal one).
struct Location {
    size_t row = 0;
    size_t col = 0;
    // Which member of each complement pair the sample actually read.
    bool vertical_complemented = false;
    bool horizontal_complemented = false;

    friend bool operator==(const Location&, const Location&) = default;
};

struct CrossDecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    Location location;
    std::string reason;
};

// Error-free cross decoding: locate the vertical arm, derive the row bit at
// the shared pixel, unmask the horizontal arm, locate it, and cross-check
// the shared pixel both ways.
CrossDecodeResult decode_cross(const CrossSample& sample, const Locator& vertical_locator,
                               const Locator& horizontal_locator);

struct DecodeReport {
    DecodeStatus status = DecodeStatus::ok;
    std::optional<Location> location;           // filled by robust_decode
    std::vector<uint8_t> recovered_vertical;    // the column tuple, as stored
    std::vector<uint8_t> recovered_horizontal;  // the row tuple
    BitMatrix corrected;                        // product of the recovered tuples
    BitMatrix error_pattern;                    // sample XOR corrected
    std::vector<int> row_error_counts;
    std::vector<int> col_error_counts;
    std::string reason;
};

// Majority-vote denoising of a rectangular sample. Rows vote against the
// first row to recover the column tuple up to complement; the ambiguity is
// resolved by which member occurs in the vertical sequence; columns then
// vote against the resolved tuple to recover the row tuple. Exact vote ties
// surface as tie_ambiguous; a vertical sequence containing neither member
// surfaces as no_legal_assignment.
DecodeReport denoise_rect(const RectSample& sample, const BitSequence& vertical);

// Denoise, then locate both recovered tuples. When the sample's error
// pattern keeps strictly fewer than n/4 errors per row and k/2 per column,
// the decoded location is exact.
DecodeReport robust_decode(const RectSample& sample, const Locator& vertical_locator,
                           const Locator& horizontal_locator);

struct ErrorConditionReport {
    std::vector<int> row_counts;
    std::vector<int> col_counts;
    bool rows_ok = false;      // every row strictly under a quarter in error
    bool cols_ok = false;      // every column strictly under a half in error
    bool ok = false;           // rows_ok && cols_ok
    // Weaker pairwise condition, reported as a diagnostic only: the distinct
    // error positions of any two rows stay strictly under n/2.
    bool pairwise_ok = false;
    int worst_pairwise = 0;
};

ErrorConditionReport check_error_conditions(const BitMatrix& error_pattern);

}  // namespace selfloc
