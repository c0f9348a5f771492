// Shared worked-example fixtures (16x16 product grid and the 7x9 noisy
// sample with its corrected form).
#pragma once

#include <string>
#include <vector>

namespace fixtures {

// Horizontal de Bruijn sequence of order 4 and vertical half de Bruijn
// sequence of order 5 of the worked 16x16 grid.
inline const std::string kGridHorizontal = "0000111101100101";
inline const std::string kGridVertical = "1111101011011100";

// The grid rows; row i is the horizontal sequence complemented when the
// vertical bit is one. Transcribed row by row from the worked example.
inline std::vector<std::string> grid16_rows() {
    const std::string plain = kGridHorizontal;
    const std::string flipped = "1111000010011010";
    std::vector<std::string> rows;
    for (char t : kGridVertical) rows.push_back(t == '1' ? flipped : plain);
    return rows;
}

// 7x9 noisy readout and its corrected form.
inline const std::vector<std::string> kNoisy7x9 = {
    "100101001", "000001110", "101000111", "001000100",
    "110010001", "001010110", "100110001",
};
inline const std::vector<std::string> kCorrected7x9 = {
    "110111001", "001000110", "001000110", "001000110",
    "110111001", "001000110", "110111001",
};
inline const std::string kColumnTuple7 = "0111010";
inline const std::string kRowTuple9 = "110111001";

}  // namespace fixtures
