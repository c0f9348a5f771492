#include "doctest.h"

#include "selfloc/pattern.hpp"

#include "fixtures.hpp"

using namespace selfloc;

namespace {

BitSequence literal(const std::string& bits, int order, SeqKind kind) {
    BitSequence s;
    s.bits = parse_bits(bits);
    s.order = order;
    s.kind = kind;
    s.provenance.method = Provenance::Method::literal;
    return s;
}

PatternArray grid16() {
    return product(literal(fixtures::kGridVertical, 5, SeqKind::half_de_bruijn),
                   literal(fixtures::kGridHorizontal, 4, SeqKind::de_bruijn));
}

}  // namespace

TEST_SUITE("pattern") {

TEST_CASE("product reproduces the worked 16x16 grid bit-exactly") {
    PatternArray g = grid16();
    REQUIRE(g.rows() == 16);
    REQUIRE(g.cols() == 16);
    CHECK(g.grid.row_strings() == fixtures::grid16_rows());
    // Spot cells quoted with 1-based indices (1,1), (6,1), (8,5).
    CHECK(g.at(0, 0) == 1);
    CHECK(g.at(5, 0) == 0);
    CHECK(g.at(7, 4) == 1);
}

TEST_CASE("rows are the horizontal sequence or its complement") {
    BitSequence v = make_half_de_bruijn(5);
    BitSequence h = make_de_bruijn(6);
    PatternArray g = product(v, h);
    for (size_t i = 0; i < g.rows(); ++i) {
        for (size_t j = 0; j < g.cols(); ++j)
            CHECK(g.at(i, j) == (v.bits[i] ^ h.bits[j]));
    }
}

TEST_CASE("transposing swaps the sequence roles") {
    BitSequence v = literal(fixtures::kGridVertical, 5, SeqKind::half_de_bruijn);
    BitSequence h = literal(fixtures::kGridHorizontal, 4, SeqKind::de_bruijn);
    PatternArray g = product(v, h);
    PatternArray swapped = product(h, v, /*unchecked=*/true);
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            CHECK(g.at(i, j) == swapped.at(j, i));
}

TEST_CASE("product checks sequence kinds unless forced") {
    BitSequence raw = literal("0011", 2, SeqKind::raw);
    BitSequence db = make_de_bruijn(2);
    CHECK_THROWS_AS(product(raw, db), std::invalid_argument);
    PatternArray forced = product(raw, db, /*unchecked=*/true);
    CHECK(forced.rows() == 4);
    CHECK(forced.cols() == 4);
}

TEST_CASE("acyclic extension sizes and window preservation") {
    PatternArray g = grid16();
    PatternArray ext = extend_acyclic(g);
    CHECK(ext.rows() == 20);  // 2^4 + 4
    CHECK(ext.cols() == 19);  // 2^4 + 3
    CHECK(ext.mode == GridMode::acyclic_extended);
    for (size_t r = 0; r < 16; ++r)
        for (size_t c = 0; c < 16; ++c)
            CHECK(window(g, r, c, 5, 4).bits == window(ext, r, c, 5, 4).bits);
    CHECK_THROWS_AS(extend_acyclic(ext), std::invalid_argument);
}

TEST_CASE("acyclic boards reject out-of-range samples") {
    PatternArray ext = extend_acyclic(grid16());
    CHECK_THROWS_AS(window(ext, 16, 16, 5, 4), std::out_of_range);
    CHECK_THROWS_AS(ext.at(20, 0), std::out_of_range);
    CHECK(window(ext, 15, 15, 5, 4).bits == window(grid16(), 15, 15, 5, 4).bits);
}

TEST_CASE("cross readout matches the worked example's marked cells") {
    // Vertical arm rows 8..12 of column 5, horizontal arm columns 4..7 of
    // row 10, all 1-based in the figure.
    CrossSample s = cross(grid16(), 7, 3, 2, 1, 5, 4);
    CHECK(format_bits(s.vertical_arm) == "10010");
    CHECK(format_bits(s.horizontal_arm) == "1000");
    CHECK(s.vertical_arm[2] == s.horizontal_arm[1]);
}

TEST_CASE("window extraction matches the top-left block") {
    RectSample w = window(grid16(), 0, 0, 5, 4);
    auto rows = w.bits.row_strings();
    auto grid_rows = fixtures::grid16_rows();
    for (size_t i = 0; i < 5; ++i) CHECK(rows[i] == grid_rows[i].substr(0, 4));
}

TEST_CASE("shared-pixel equality holds at every position") {
    PatternArray g = grid16();
    for (size_t r = 0; r < 16; ++r)
        for (size_t c = 0; c < 16; ++c) {
            CrossSample s = cross(g, r, c, 2, 1, 5, 4);
            CHECK(s.vertical_arm[2] == s.horizontal_arm[1]);
        }
}

TEST_CASE("gridless window sampling equals grid extraction") {
    BitSequence v = literal(fixtures::kGridVertical, 5, SeqKind::half_de_bruijn);
    BitSequence h = literal(fixtures::kGridHorizontal, 4, SeqKind::de_bruijn);
    PatternArray g = product(v, h);
    for (size_t r : {size_t{0}, size_t{7}, size_t{15}})
        for (size_t c : {size_t{0}, size_t{3}, size_t{15}})
            CHECK(sample_window(v, h, r, c, 5, 4).bits == window(g, r, c, 5, 4).bits);
}

TEST_CASE("rect census counts all windows exactly once") {
    UniquenessReport rep = verify_rect_uniqueness(grid16(), 5, 4);
    CHECK(rep.ok);
    CHECK(rep.positions == 256);
    CHECK(rep.distinct == 256);
    CHECK(rep.expected == 256);
    CHECK(rep.complete);
    CHECK(rep.duplicates.empty());
}

TEST_CASE("cross census finds every possible readout exactly once") {
    UniquenessReport rep = verify_cross_uniqueness(grid16(), 5, 4, 2, 1);
    CHECK(rep.ok);
    CHECK(rep.distinct == 256);  // 2^(5+4-1)
    CHECK(rep.complete);

    // Default shared pixel (arm midpoints) has the same property.
    UniquenessReport centered = verify_cross_uniqueness(grid16(), 5, 4);
    CHECK(centered.ok);
}

TEST_CASE("a corrupted grid is caught by the cross census") {
    PatternArray g = grid16();
    g.grid.flip(9, 4);
    // A single flip moves 5x4 windows to unused values in the much larger
    // window space, so rect distinctness can survive; the cross readout
    // space is complete, so any deviation there forces a collision.
    UniquenessReport cr = cross_uniqueness_census(g.grid, 5, 4, 2, 1);
    CHECK_FALSE(cr.ok);
    CHECK_FALSE(cr.duplicates.empty());

    // A duplicated rect window is reported with both coordinates.
    BitMatrix rows_repeat = BitMatrix::from_row_strings({"0011", "0011"});
    UniquenessReport rep = rect_uniqueness_census(rows_repeat, 2, 2);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.duplicates.empty());
    auto d = rep.duplicates.front();
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(rows_repeat.get((d.r1 + i) % 2, (d.c1 + j) % 4) ==
                  rows_repeat.get((d.r2 + i) % 2, (d.c2 + j) % 4));
}

TEST_CASE("hand-made 2x4 torus with all eight 2x2 windows") {
    // No product grid this small has the property; the census itself is
    // exercised on a hand-checked torus.
    BitMatrix toy = BitMatrix::from_row_strings({"0011", "0110"});
    UniquenessReport rep = rect_uniqueness_census(toy, 2, 2);
    CHECK(rep.ok);
    CHECK(rep.positions == 8);
    CHECK(rep.distinct == 8);
}

TEST_CASE("census dimensions must match the sequence orders") {
    CHECK_THROWS_AS(verify_rect_uniqueness(grid16(), 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_cross_uniqueness(extend_acyclic(grid16()), 5, 4),
                    std::invalid_argument);
}

}  // TEST_SUITE
