#include "selfloc/bits.hpp"

namespace selfloc {

std::vector<uint8_t> parse_bits(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<uint8_t>(c - '0'));
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            continue;
        } else {
            throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        }
    }
    return bits;
}

std::string format_bits(std::span<const uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (uint8_t b : bits) out.push_back(b ? '1' : '0');
    return out;
}

Window window_from_bits(std::span<const uint8_t> bits) {
    if (bits.empty() || bits.size() > 31)
        throw std::invalid_argument("window width must be in 1..31");
    Window w{0, static_cast<int>(bits.size())};
    for (uint8_t b : bits) w.value = (w.value << 1) | (b & 1u);
    return w;
}

std::vector<uint8_t> window_to_bits(Window w) {
    std::vector<uint8_t> bits(static_cast<size_t>(w.width));
    for (int i = 0; i < w.width; ++i)
        bits[static_cast<size_t>(i)] = (w.value >> (w.width - 1 - i)) & 1u;
    return bits;
}

}  // namespace selfloc
