#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfloc/sequence.hpp"

namespace selfloc {

// Row-major packed bit matrix.
class BitMatrix {
  public:
    BitMatrix() : rows_(0), cols_(0) {}
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_((rows * cols + 63) / 64, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t get(size_t r, size_t c) const {
        size_t i = r * cols_ + c;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(size_t r, size_t c, uint8_t v) {
        size_t i = r * cols_ + c;
        uint64_t bit = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(size_t r, size_t c) { set(r, c, get(r, c) ^ 1u); }

    std::vector<std::string> row_strings() const;
    static BitMatrix from_row_strings(const std::vector<std::string>& rows);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    size_t rows_, cols_;
    std::vector<uint64_t> words_;
};

enum class GridMode { cyclic, acyclic_extended };

std::string to_string(GridMode mode);
GridMode grid_mode_from_string(const std::string& name);

// The product grid: cell (i, j) holds vertical[i] XOR horizontal[j], or its
// acyclic extension. Immutable after construction.
struct PatternArray {
    BitMatrix grid;
    BitSequence vertical;    // half de Bruijn, order k
    BitSequence horizontal;  // de Bruijn, order n
    GridMode mode = GridMode::cyclic;

    size_t rows() const { return grid.rows(); }
    size_t cols() const { return grid.cols(); }
    int vertical_order() const { return vertical.order; }
    int horizontal_order() const { return horizontal.order; }

    // Cell value; positions wrap only in cyclic mode.
    uint8_t at(size_t r, size_t c) const;

    // IO path: adopt a grid as read from disk without recomputing it, so
    // verification can catch grids that disagree with their sequences.
    static PatternArray from_parts(BitMatrix grid, BitSequence vertical,
                                   BitSequence horizontal, GridMode mode);
};

// Builds the cyclic product grid. Kinds are checked unless `unchecked`
// (adversarial fixtures force raw sequences through).
PatternArray product(const BitSequence& vertical, const BitSequence& horizontal,
                     bool unchecked = false);

// Appends the first k-1 rows and n-1 columns so every cyclic window also
// occurs as a plain window of a bounded board.
PatternArray extend_acyclic(const PatternArray& g);

// Cross readout: a k-bit vertical arm and an n-bit horizontal arm sharing
// the pixel at arm offsets (i0, j0).
struct CrossSample {
    std::vector<uint8_t> vertical_arm;    // top to bottom
    std::vector<uint8_t> horizontal_arm;  // left to right
    int i0 = 0;
    int j0 = 0;

    void validate() const;
};

struct RectSample {
    BitMatrix bits;
    // For test harnesses only; decoders never read it.
    std::optional<std::pair<size_t, size_t>> true_origin;
};

// Rectangular window with top-left cell at (r, c).
RectSample window(const PatternArray& g, size_t r, size_t c, int k, int n);

// Cross whose vertical arm spans rows r..r+k-1 of column c+j0 and whose
// horizontal arm spans columns c..c+n-1 of row r+i0.
CrossSample cross(const PatternArray& g, size_t r, size_t c, int i0, int j0, int k, int n);

// Window values straight from the sequences, no materialized grid.
RectSample sample_window(const BitSequence& vertical, const BitSequence& horizontal,
                         size_t r, size_t c, int k, int n);

struct DuplicateWindow {
    size_t r1, c1, r2, c2;
};

struct UniquenessReport {
    bool ok = false;
    size_t positions = 0;  // window positions examined
    size_t distinct = 0;
    size_t expected = 0;  // count forced by the window property
    bool complete = false;  // every possible value realized
    std::vector<DuplicateWindow> duplicates;  // first few collisions
};

// Exhaustive censuses over the cyclic torus. The PatternArray overloads
// check (k, n) against the sequences' orders; the raw-grid overloads accept
// any torus (hand-made fixtures included).
UniquenessReport verify_rect_uniqueness(const PatternArray& g, int k, int n);
UniquenessReport verify_cross_uniqueness(const PatternArray& g, int k, int n,
                                         int i0 = -1, int j0 = -1);
UniquenessReport rect_uniqueness_census(const BitMatrix& torus, int k, int n);
UniquenessReport cross_uniqueness_census(const BitMatrix& torus, int k, int n, int i0, int j0);

}  // namespace selfloc
