#include "selfloc/decode.hpp"

#include <algorithm>
#include <functional>

namespace selfloc {

std::string to_string(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::ok: return "ok";
        case DecodeStatus::tie_ambiguous: return "tie_ambiguous";
        case DecodeStatus::no_legal_assignment: return "no_legal_assignment";
        case DecodeStatus::inconsistent: return "inconsistent";
        case DecodeStatus::no_such_window: return "no_such_window";
    }
    return "ok";
}

CrossDecodeResult decode_cross(const CrossSample& sample, const Locator& vertical_locator,
                               const Locator& horizontal_locator) {
    sample.validate();
    const BitSequence& vseq = vertical_locator.sequence();
    const BitSequence& hseq = horizontal_locator.sequence();
    const int k = static_cast<int>(sample.vertical_arm.size());
    const int n = static_cast<int>(sample.horizontal_arm.size());
    if (k != vseq.order || n != hseq.order)
        throw std::invalid_argument("cross arm lengths do not match the sequence orders");

    CrossDecodeResult out;
    Window varm = window_from_bits(sample.vertical_arm);
    LocateResult vloc;
    try {
        vloc = vertical_locator.locate(varm);
    } catch (const NoSuchWindow&) {
        out.status = DecodeStatus::no_such_window;
        out.reason = "vertical arm does not occur in the vertical sequence";
        return out;
    }
    const size_t row = vloc.position;

    // The arm's column carries the vertical sequence XOR one horizontal bit;
    // that bit is exactly the complement flag. The shared row likewise masks
    // the horizontal arm with one vertical bit.
    const uint8_t row_bit =
        vseq.bit(row + static_cast<size_t>(sample.i0));
    Window harm = window_from_bits(sample.horizontal_arm);
    if (row_bit) harm = complement(harm);
    LocateResult hloc;
    try {
        hloc = horizontal_locator.locate(harm);
    } catch (const NoSuchWindow&) {
        out.status = DecodeStatus::no_such_window;
        out.reason = "horizontal arm does not occur in the horizontal sequence";
        return out;
    }
    const size_t col = hloc.position;

    const uint8_t col_bit = hseq.bit(col + static_cast<size_t>(sample.j0));
    if (col_bit != static_cast<uint8_t>(vloc.complemented)) {
        out.status = DecodeStatus::inconsistent;
        out.reason = "vertical arm complement flag disagrees with the decoded column";
        return out;
    }
    if (sample.vertical_arm[static_cast<size_t>(sample.i0)] != (row_bit ^ col_bit)) {
        out.status = DecodeStatus::inconsistent;
        out.reason = "shared pixel disagrees with the decoded position";
        return out;
    }

    out.location = {row, col, vloc.complemented, row_bit != 0};
    return out;
}

namespace {

// Row votes against the first row: 0 = same side, 1 = complemented side.
// Nullopt marks an exact tie (only possible for even row length).
std::optional<std::vector<uint8_t>> vote_rows(const BitMatrix& z, int* tie_row) {
    const size_t k = z.rows(), n = z.cols();
    std::vector<uint8_t> rel(k);
    for (size_t i = 0; i < k; ++i) {
        size_t agree = 0;
        for (size_t j = 0; j < n; ++j) agree += z.get(i, j) == z.get(0, j);
        if (2 * agree == n) {
            if (tie_row) *tie_row = static_cast<int>(i);
            return std::nullopt;
        }
        rel[i] = 2 * agree > n ? 0 : 1;
    }
    return rel;
}

std::optional<std::vector<uint8_t>> vote_cols(const BitMatrix& z,
                                              const std::vector<uint8_t>& column_tuple,
                                              int* tie_col) {
    const size_t k = z.rows(), n = z.cols();
    std::vector<uint8_t> row_tuple(n);
    for (size_t j = 0; j < n; ++j) {
        size_t agree = 0;
        for (size_t i = 0; i < k; ++i) agree += z.get(i, j) == column_tuple[i];
        if (2 * agree == k) {
            if (tie_col) *tie_col = static_cast<int>(j);
            return std::nullopt;
        }
        row_tuple[j] = 2 * agree > k ? 0 : 1;
    }
    return row_tuple;
}

void fill_correction(DecodeReport& rep, const BitMatrix& z) {
    const size_t k = z.rows(), n = z.cols();
    rep.corrected = BitMatrix(k, n);
    rep.error_pattern = BitMatrix(k, n);
    rep.row_error_counts.assign(k, 0);
    rep.col_error_counts.assign(n, 0);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < n; ++j) {
            uint8_t c = rep.recovered_vertical[i] ^ rep.recovered_horizontal[j];
            rep.corrected.set(i, j, c);
            uint8_t e = z.get(i, j) ^ c;
            rep.error_pattern.set(i, j, e);
            rep.row_error_counts[i] += e;
            rep.col_error_counts[j] += e;
        }
    }
}

// Shared vote pipeline. resolve_pair(candidate) reports which member of
// {candidate, ~candidate} the vertical sequence stores and at what position,
// or nullopt when it stores neither.
DecodeReport denoise_with(
    const RectSample& sample, int order_k,
    const std::function<std::optional<std::pair<bool, size_t>>(Window)>& resolve_pair,
    size_t* vertical_position) {
    DecodeReport rep;
    const BitMatrix& z = sample.bits;
    if (z.rows() == 0 || z.cols() == 0)
        throw std::invalid_argument("empty sample");
    if (static_cast<int>(z.rows()) != order_k)
        throw std::invalid_argument("sample height does not match the vertical order");

    int tie_row = -1;
    auto rel = vote_rows(z, &tie_row);
    if (!rel) {
        rep.status = DecodeStatus::tie_ambiguous;
        rep.reason = "row " + std::to_string(tie_row) + " ties with the first row";
        return rep;
    }

    auto resolved = resolve_pair(window_from_bits(*rel));
    if (!resolved) {
        rep.status = DecodeStatus::no_legal_assignment;
        rep.reason = "neither assignment of the free bit occurs in the vertical sequence";
        return rep;
    }
    auto [complemented, position] = *resolved;
    rep.recovered_vertical = *rel;
    if (complemented)
        for (auto& b : rep.recovered_vertical) b ^= 1u;
    if (vertical_position) *vertical_position = position;

    int tie_col = -1;
    auto row_tuple = vote_cols(z, rep.recovered_vertical, &tie_col);
    if (!row_tuple) {
        rep.status = DecodeStatus::tie_ambiguous;
        rep.reason = "column " + std::to_string(tie_col) + " ties between both row bits";
        return rep;
    }
    rep.recovered_horizontal = *row_tuple;
    fill_correction(rep, z);
    rep.status = DecodeStatus::ok;
    return rep;
}

}  // namespace

DecodeReport denoise_rect(const RectSample& sample, const BitSequence& vertical) {
    if (vertical.kind != SeqKind::half_de_bruijn && vertical.kind != SeqKind::raw)
        throw std::invalid_argument("vertical sequence must be half de Bruijn (or raw)");
    auto resolve = [&vertical](Window cand) -> std::optional<std::pair<bool, size_t>> {
        const int order = cand.width;
        const uint32_t mask = width_mask(order);
        const uint32_t comp = ~cand.value & mask;
        uint32_t w = vertical.window_at(0).value;
        for (size_t p = 0; p < vertical.length(); ++p) {
            if (w == cand.value) return {{false, p}};
            if (w == comp) return {{true, p}};
            w = ((w << 1) | vertical.bit(p + static_cast<size_t>(order))) & mask;
        }
        return std::nullopt;
    };
    return denoise_with(sample, vertical.order, resolve, nullptr);
}

DecodeReport robust_decode(const RectSample& sample, const Locator& vertical_locator,
                           const Locator& horizontal_locator) {
    const BitSequence& vseq = vertical_locator.sequence();
    const BitSequence& hseq = horizontal_locator.sequence();
    if (static_cast<int>(sample.bits.cols()) != hseq.order)
        throw std::invalid_argument("sample width does not match the horizontal order");

    size_t row = 0;
    auto resolve = [&vertical_locator](Window cand) -> std::optional<std::pair<bool, size_t>> {
        try {
            LocateResult r = vertical_locator.locate(cand);
            return {{r.complemented, r.position}};
        } catch (const NoSuchWindow&) {
            return std::nullopt;
        }
    };
    DecodeReport rep = denoise_with(sample, vseq.order, resolve, &row);
    if (rep.status != DecodeStatus::ok) return rep;

    LocateResult hloc;
    try {
        hloc = horizontal_locator.locate(window_from_bits(rep.recovered_horizontal));
    } catch (const NoSuchWindow&) {
        rep.status = DecodeStatus::inconsistent;
        rep.reason = "recovered row tuple does not occur in the horizontal sequence";
        return rep;
    }
    // The recovered tuples are the stored members, so neither flag is set.
    rep.location = Location{row, hloc.position, false, false};
    return rep;
}

ErrorConditionReport check_error_conditions(const BitMatrix& error_pattern) {
    const size_t k = error_pattern.rows(), n = error_pattern.cols();
    ErrorConditionReport rep;
    rep.row_counts.assign(k, 0);
    rep.col_counts.assign(n, 0);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            uint8_t e = error_pattern.get(i, j);
            rep.row_counts[i] += e;
            rep.col_counts[j] += e;
        }
    rep.rows_ok = true;
    for (int c : rep.row_counts) rep.rows_ok &= static_cast<size_t>(4 * c) < n;
    rep.cols_ok = true;
    for (int c : rep.col_counts) rep.cols_ok &= static_cast<size_t>(2 * c) < k;
    rep.ok = rep.rows_ok && rep.cols_ok;

    rep.worst_pairwise = 0;
    for (size_t i = 0; i < k; ++i) {
        for (size_t i2 = i + 1; i2 < k; ++i2) {
            int distinct = 0;
            for (size_t j = 0; j < n; ++j)
                distinct += error_pattern.get(i, j) | error_pattern.get(i2, j);
            rep.worst_pairwise = std::max(rep.worst_pairwise, distinct);
        }
    }
    rep.pairwise_ok = static_cast<size_t>(2 * rep.worst_pairwise) < n;
    return rep;
}

}  // namespace selfloc
