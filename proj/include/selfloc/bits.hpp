#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace selfloc {

// A fixed-width window value. Bits are MSB-first: the bit read first is the
// highest bit of `value`.
struct Window {
    uint32_t value = 0;
    int width = 0;

    friend bool operator==(const Window&, const Window&) = default;
};

inline uint32_t width_mask(int width) {
    return width >= 32 ? 0xffffffffu : ((1u << width) - 1u);
}

inline Window complement(Window w) {
    return {~w.value & width_mask(w.width), w.width};
}

// Canonical representative of the pair {w, ~w}: the member with top bit 0.
inline uint32_t pair_key(uint32_t value, int width) {
    return (value >> (width - 1)) & 1u ? ~value & width_mask(width) : value;
}

std::vector<uint8_t> parse_bits(std::string_view text);
std::string format_bits(std::span<const uint8_t> bits);
Window window_from_bits(std::span<const uint8_t> bits);
std::vector<uint8_t> window_to_bits(Window w);

// Deterministic 64-bit generator (splitmix64). Used everywhere randomness is
// needed so results are reproducible independent of the standard library's
// distribution implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below: bound must be positive");
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool chance(double prob) { return unit() < prob; }

    // Independent stream for a trial index; streams derived from the same
    // master seed never share state, so parallel and serial runs agree.
    static SplitMix64 stream(uint64_t master_seed, uint64_t index) {
        SplitMix64 mixer(master_seed ^ (0xd1b54a32d192ed03ull * (index + 1)));
        return SplitMix64(mixer.next());
    }

  private:
    uint64_t state_;
};

}  // namespace selfloc
