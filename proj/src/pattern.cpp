#include "selfloc/pattern.hpp"

#include <unordered_map>

namespace selfloc {

std::vector<std::string> BitMatrix::row_strings() const {
    std::vector<std::string> out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        out[r].resize(cols_);
        for (size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? '1' : '0';
    }
    return out;
}

BitMatrix BitMatrix::from_row_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty row list");
    BitMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw std::invalid_argument("ragged rows in bit matrix");
        for (size_t c = 0; c < m.cols(); ++c) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("invalid bit character in matrix row");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

std::string to_string(GridMode mode) {
    return mode == GridMode::cyclic ? "cyclic" : "acyclic_extended";
}

GridMode grid_mode_from_string(const std::string& name) {
    if (name == "cyclic") return GridMode::cyclic;
    if (name == "acyclic_extended") return GridMode::acyclic_extended;
    throw std::invalid_argument("unknown grid mode: " + name);
}

uint8_t PatternArray::at(size_t r, size_t c) const {
    if (mode == GridMode::cyclic) return grid.get(r % rows(), c % cols());
    if (r >= rows() || c >= cols())
        throw std::out_of_range("position outside the extended board");
    return grid.get(r, c);
}

PatternArray PatternArray::from_parts(BitMatrix grid, BitSequence vertical,
                                      BitSequence horizontal, GridMode mode) {
    PatternArray g;
    g.grid = std::move(grid);
    g.vertical = std::move(vertical);
    g.horizontal = std::move(horizontal);
    g.mode = mode;
    return g;
}

PatternArray product(const BitSequence& vertical, const BitSequence& horizontal,
                     bool unchecked) {
    if (!unchecked) {
        if (vertical.kind != SeqKind::half_de_bruijn)
            throw std::invalid_argument("vertical sequence must be half de Bruijn");
        if (horizontal.kind != SeqKind::de_bruijn)
            throw std::invalid_argument("horizontal sequence must be de Bruijn");
        if (vertical.length() != size_t{1} << (vertical.order - 1))
            throw std::invalid_argument("vertical sequence length does not match its order");
        if (horizontal.length() != size_t{1} << horizontal.order)
            throw std::invalid_argument("horizontal sequence length does not match its order");
    }
    PatternArray g;
    g.vertical = vertical;
    g.horizontal = horizontal;
    g.mode = GridMode::cyclic;
    g.grid = BitMatrix(vertical.length(), horizontal.length());
    for (size_t r = 0; r < vertical.length(); ++r)
        for (size_t c = 0; c < horizontal.length(); ++c)
            g.grid.set(r, c, vertical.bits[r] ^ horizontal.bits[c]);
    return g;
}

PatternArray extend_acyclic(const PatternArray& g) {
    if (g.mode != GridMode::cyclic)
        throw std::invalid_argument("grid is already acyclically extended");
    const size_t k = static_cast<size_t>(g.vertical_order());
    const size_t n = static_cast<size_t>(g.horizontal_order());
    const size_t rows = g.rows() + k - 1;
    const size_t cols = g.cols() + n - 1;
    PatternArray out;
    out.vertical = g.vertical;
    out.horizontal = g.horizontal;
    out.mode = GridMode::acyclic_extended;
    out.grid = BitMatrix(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            out.grid.set(r, c, g.grid.get(r % g.rows(), c % g.cols()));
    return out;
}

void CrossSample::validate() const {
    if (vertical_arm.empty() || horizontal_arm.empty())
        throw std::invalid_argument("cross arms must be nonempty");
    if (i0 < 0 || static_cast<size_t>(i0) >= vertical_arm.size())
        throw std::invalid_argument("shared-pixel row offset outside the vertical arm");
    if (j0 < 0 || static_cast<size_t>(j0) >= horizontal_arm.size())
        throw std::invalid_argument("shared-pixel column offset outside the horizontal arm");
    if (vertical_arm[static_cast<size_t>(i0)] != horizontal_arm[static_cast<size_t>(j0)])
        throw std::invalid_argument("arms disagree at the shared pixel");
}

namespace {

void check_sample_shape(const PatternArray& g, size_t r, size_t c, int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("sample dimensions must be positive");
    if (g.mode == GridMode::acyclic_extended) {
        if (r + static_cast<size_t>(k) > g.rows() || c + static_cast<size_t>(n) > g.cols())
            throw std::out_of_range("sample exceeds the extended board");
    } else {
        if (r >= g.rows() || c >= g.cols())
            throw std::out_of_range("sample origin outside the grid");
    }
}

}  // namespace

RectSample window(const PatternArray& g, size_t r, size_t c, int k, int n) {
    check_sample_shape(g, r, c, k, n);
    RectSample s;
    s.bits = BitMatrix(static_cast<size_t>(k), static_cast<size_t>(n));
    for (size_t i = 0; i < static_cast<size_t>(k); ++i)
        for (size_t j = 0; j < static_cast<size_t>(n); ++j)
            s.bits.set(i, j, g.at(r + i, c + j));
    s.true_origin = {{r, c}};
    return s;
}

CrossSample cross(const PatternArray& g, size_t r, size_t c, int i0, int j0, int k, int n) {
    check_sample_shape(g, r, c, k, n);
    if (i0 < 0 || i0 >= k || j0 < 0 || j0 >= n)
        throw std::invalid_argument("shared pixel outside the cross");
    CrossSample s;
    s.i0 = i0;
    s.j0 = j0;
    s.vertical_arm.resize(static_cast<size_t>(k));
    s.horizontal_arm.resize(static_cast<size_t>(n));
    for (int i = 0; i < k; ++i)
        s.vertical_arm[static_cast<size_t>(i)] =
            g.at(r + static_cast<size_t>(i), c + static_cast<size_t>(j0));
    for (int j = 0; j < n; ++j)
        s.horizontal_arm[static_cast<size_t>(j)] =
            g.at(r + static_cast<size_t>(i0), c + static_cast<size_t>(j));
    s.validate();
    return s;
}

RectSample sample_window(const BitSequence& vertical, const BitSequence& horizontal,
                         size_t r, size_t c, int k, int n) {
    RectSample s;
    s.bits = BitMatrix(static_cast<size_t>(k), static_cast<size_t>(n));
    for (size_t i = 0; i < static_cast<size_t>(k); ++i) {
        uint8_t t = vertical.bit(r + i);
        for (size_t j = 0; j < static_cast<size_t>(n); ++j)
            s.bits.set(i, j, t ^ horizontal.bit(c + j));
    }
    s.true_origin = {{r % vertical.length(), c % horizontal.length()}};
    return s;
}

namespace {

constexpr size_t kMaxReportedDuplicates = 8;

void check_census_orders(const PatternArray& g, int k, int n) {
    if (g.mode != GridMode::cyclic)
        throw std::invalid_argument("censuses run on the cyclic torus");
    if (k != g.vertical_order() || n != g.horizontal_order())
        throw std::invalid_argument("census dimensions must match the sequence orders");
}

}  // namespace

UniquenessReport rect_uniqueness_census(const BitMatrix& torus, int k, int n) {
    if (k < 1 || n < 1 || static_cast<size_t>(k) > torus.rows() ||
        static_cast<size_t>(n) > torus.cols())
        throw std::invalid_argument("window does not fit the torus");
    if (k * n > 64)
        throw std::invalid_argument("rect census supports windows up to 64 bits");

    UniquenessReport rep;
    rep.positions = torus.rows() * torus.cols();
    rep.expected = rep.positions;

    std::unordered_map<uint64_t, uint32_t> seen;
    seen.reserve(rep.positions * 2);
    for (size_t r = 0; r < torus.rows(); ++r) {
        for (size_t c = 0; c < torus.cols(); ++c) {
            uint64_t key = 0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j)
                    key = (key << 1) |
                          torus.get((r + static_cast<size_t>(i)) % torus.rows(),
                                    (c + static_cast<size_t>(j)) % torus.cols());
            auto [it, inserted] = seen.emplace(key, static_cast<uint32_t>(r * torus.cols() + c));
            if (!inserted && rep.duplicates.size() < kMaxReportedDuplicates) {
                size_t first = it->second;
                rep.duplicates.push_back(
                    {first / torus.cols(), first % torus.cols(), r, c});
            }
        }
    }
    rep.distinct = seen.size();
    rep.ok = rep.duplicates.empty() && rep.distinct == rep.positions;
    rep.complete = rep.distinct == rep.expected;
    return rep;
}

UniquenessReport verify_rect_uniqueness(const PatternArray& g, int k, int n) {
    check_census_orders(g, k, n);
    auto rep = rect_uniqueness_census(g.grid, k, n);
    // The window property forces exactly 2^(k-1+n) windows, which equals the
    // number of positions on the torus.
    rep.expected = size_t{1} << (k - 1 + n);
    rep.complete = rep.distinct == rep.expected;
    rep.ok = rep.ok && rep.positions == rep.expected;
    return rep;
}

UniquenessReport cross_uniqueness_census(const BitMatrix& torus, int k, int n, int i0,
                                         int j0) {
    if (k < 1 || n < 1 || i0 < 0 || i0 >= k || j0 < 0 || j0 >= n)
        throw std::invalid_argument("invalid cross geometry");
    if (k + n > 64)
        throw std::invalid_argument("cross census supports readouts up to 64 bits");

    UniquenessReport rep;
    rep.positions = torus.rows() * torus.cols();
    rep.expected = size_t{1} << (k + n - 1);

    std::unordered_map<uint64_t, uint32_t> seen;
    seen.reserve(rep.positions * 2);
    for (size_t r = 0; r < torus.rows(); ++r) {
        for (size_t c = 0; c < torus.cols(); ++c) {
            uint64_t v = 0, h = 0;
            for (int i = 0; i < k; ++i)
                v = (v << 1) | torus.get((r + static_cast<size_t>(i)) % torus.rows(),
                                         (c + static_cast<size_t>(j0)) % torus.cols());
            for (int j = 0; j < n; ++j)
                h = (h << 1) | torus.get((r + static_cast<size_t>(i0)) % torus.rows(),
                                         (c + static_cast<size_t>(j)) % torus.cols());
            uint64_t key = (v << n) | h;
            auto [it, inserted] = seen.emplace(key, static_cast<uint32_t>(r * torus.cols() + c));
            if (!inserted && rep.duplicates.size() < kMaxReportedDuplicates) {
                size_t first = it->second;
                rep.duplicates.push_back(
                    {first / torus.cols(), first % torus.cols(), r, c});
            }
        }
    }
    rep.distinct = seen.size();
    rep.complete = rep.distinct == rep.expected;
    rep.ok = rep.duplicates.empty() && rep.complete;
    return rep;
}

UniquenessReport verify_cross_uniqueness(const PatternArray& g, int k, int n, int i0,
                                         int j0) {
    check_census_orders(g, k, n);
    if (i0 < 0) i0 = k / 2;
    if (j0 < 0) j0 = n / 2;
    return cross_uniqueness_census(g.grid, k, n, i0, j0);
}

}  // namespace selfloc
