#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfloc/bits.hpp"

namespace selfloc {

enum class SeqKind { raw, m_sequence, de_bruijn, half_de_bruijn };

std::string to_string(SeqKind kind);
SeqKind seq_kind_from_string(const std::string& name);

// Feedback register description. `taps` lists the exponents of the feedback
// polynomial; it must contain `order` (the leading term) and 0 (the constant
// term). The seed is the initial register contents, which are also the first
// `order` bits of the output.
struct LfsrSpec {
    int order = 0;
    std::vector<int> taps;
    uint32_t seed = 0;

    void validate() const;
    uint32_t recurrence_mask() const;  // tap exponents below `order`, as window bits
};

// Construction record. Everything the library builds bottoms out in a single
// feedback register, so one spec plus the chain method reconstructs the
// sequence (and its successor rule) exactly.
struct Provenance {
    enum class Method { none, lfsr, zero_run_extension, one_run_extension, inverse_d, literal };
    Method method = Method::none;
    LfsrSpec lfsr;
    int inverse_d_first_bit = -1;

    bool has_generator() const { return method != Method::none && method != Method::literal; }
};

std::string to_string(Provenance::Method m);
Provenance::Method provenance_method_from_string(const std::string& name);

// A finite cyclic binary sequence with a declared window order and kind.
// Immutable by convention after construction; safe to share across threads.
struct BitSequence {
    std::vector<uint8_t> bits;
    int order = 0;
    SeqKind kind = SeqKind::raw;
    Provenance provenance;

    size_t length() const { return bits.size(); }
    uint8_t bit(size_t i) const { return bits[i % bits.size()]; }

    // The `width` bits starting at cyclic position `pos`, MSB-first.
    Window window_at(size_t pos, int width) const;
    Window window_at(size_t pos) const { return window_at(pos, order); }
};

struct NonPrimitivePolynomial : std::runtime_error {
    uint64_t observed_period;
    NonPrimitivePolynomial(const std::string& what, uint64_t period)
        : std::runtime_error(what), observed_period(period) {}
};

struct NoSuchWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive cyclic window census result.
struct CensusReport {
    bool ok = false;
    std::string reason;
    std::optional<uint32_t> duplicate_window;
    std::array<size_t, 2> duplicate_positions{0, 0};
    std::optional<uint32_t> missing_window;
};

CensusReport m_sequence_report(std::span<const uint8_t> bits, int order);
CensusReport de_bruijn_report(std::span<const uint8_t> bits, int order);
CensusReport half_de_bruijn_report(std::span<const uint8_t> bits, int order);

bool is_m_sequence(std::span<const uint8_t> bits, int order);
bool is_de_bruijn(std::span<const uint8_t> bits, int order);
bool is_half_de_bruijn(std::span<const uint8_t> bits, int order);

bool is_m_sequence(const BitSequence& s, int order);
bool is_de_bruijn(const BitSequence& s, int order);
bool is_half_de_bruijn(const BitSequence& s, int order);

// For an M-sequence of order m: every (m+1)-tuple pair {X, ~X} except the
// all-zero/all-one pair has exactly one member occurring as a window.
CensusReport complement_pair_report(const BitSequence& m);

// Runs the register until the seed state recurs; the observed period is the
// executable primitivity test. Rejects zero seeds and non-maximal periods.
BitSequence lfsr_m_sequence(const LfsrSpec& spec);

// De Bruijn sequence by inserting one extra zero into the unique run of
// order-1 zeros of an M-sequence.
BitSequence de_bruijn_from_m(const BitSequence& m);

// Half de Bruijn sequence of order m+1 by inserting one extra one into the
// unique run of m ones of an order-m M-sequence.
BitSequence half_de_bruijn_from_m(const BitSequence& m);

// Inverse adjacent-XOR map: output t with t[0] = first_bit and
// t[i+1] = t[i] ^ s[i]. Requires a de Bruijn input of order >= 2 with even
// bit-sum; output is half de Bruijn of the next order.
BitSequence inverse_d_morphism(const BitSequence& s, int first_bit);

// Forward adjacent-XOR map (cyclic): out[i] = bits[i] ^ bits[i+1].
std::vector<uint8_t> d_morphism(std::span<const uint8_t> bits);

// Bitwise complement. Half de Bruijn and de Bruijn kinds survive
// complementation; an M-sequence does not (its complement holds a zero tuple).
BitSequence complement_sequence(const BitSequence& s);

// Built-in primitive feedback polynomials, orders 2..24.
int builtin_taps_min_order();
int builtin_taps_max_order();
const std::vector<int>& builtin_taps(int order);

enum class HalfMethod { one_run, inverse_d };

BitSequence make_m_sequence(int order);
BitSequence make_de_bruijn(int order);
BitSequence make_half_de_bruijn(int order, HalfMethod method = HalfMethod::one_run,
                                int first_bit = 1);

}  // namespace selfloc
