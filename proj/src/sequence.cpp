#include "selfloc/sequence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace selfloc {

std::string to_string(SeqKind kind) {
    switch (kind) {
        case SeqKind::raw: return "raw";
        case SeqKind::m_sequence: return "m_sequence";
        case SeqKind::de_bruijn: return "de_bruijn";
        case SeqKind::half_de_bruijn: return "half_de_bruijn";
    }
    return "raw";
}

SeqKind seq_kind_from_string(const std::string& name) {
    if (name == "raw") return SeqKind::raw;
    if (name == "m_sequence") return SeqKind::m_sequence;
    if (name == "de_bruijn") return SeqKind::de_bruijn;
    if (name == "half_de_bruijn") return SeqKind::half_de_bruijn;
    throw std::invalid_argument("unknown sequence kind: " + name);
}

std::string to_string(Provenance::Method m) {
    switch (m) {
        case Provenance::Method::none: return "none";
        case Provenance::Method::lfsr: return "lfsr";
        case Provenance::Method::zero_run_extension: return "zero_run_extension";
        case Provenance::Method::one_run_extension: return "one_run_extension";
        case Provenance::Method::inverse_d: return "inverse_d";
        case Provenance::Method::literal: return "literal";
    }
    return "none";
}

Provenance::Method provenance_method_from_string(const std::string& name) {
    if (name == "none") return Provenance::Method::none;
    if (name == "lfsr") return Provenance::Method::lfsr;
    if (name == "zero_run_extension") return Provenance::Method::zero_run_extension;
    if (name == "one_run_extension") return Provenance::Method::one_run_extension;
    if (name == "inverse_d") return Provenance::Method::inverse_d;
    if (name == "literal") return Provenance::Method::literal;
    throw std::invalid_argument("unknown provenance method: " + name);
}

void LfsrSpec::validate() const {
    if (order < 1 || order > 30) throw std::invalid_argument("register order must be in 1..30");
    if (seed == 0) throw std::invalid_argument("register seed must be nonzero");
    if (seed > width_mask(order)) throw std::invalid_argument("seed wider than register");
    if (taps.empty()) throw std::invalid_argument("empty tap set");
    int high = *std::max_element(taps.begin(), taps.end());
    int low = *std::min_element(taps.begin(), taps.end());
    if (high != order)
        throw std::invalid_argument("feedback polynomial degree must equal the register order");
    if (low != 0) throw std::invalid_argument("feedback polynomial needs a constant term");
    for (int t : taps)
        if (t < 0) throw std::invalid_argument("negative tap exponent");
}

uint32_t LfsrSpec::recurrence_mask() const {
    // Exponent i contributes the window bit that is i steps behind the newest
    // bit; windows are MSB-first, so exponent i maps to bit (order-1-i).
    uint32_t mask = 0;
    for (int t : taps)
        if (t < order) mask |= 1u << (order - 1 - t);
    return mask;
}

Window BitSequence::window_at(size_t pos, int width) const {
    if (width < 1 || width > 31) throw std::invalid_argument("window width must be in 1..31");
    Window w{0, width};
    size_t len = bits.size();
    for (int i = 0; i < width; ++i) w.value = (w.value << 1) | bits[(pos + i) % len];
    return w;
}

namespace {

// Counts every cyclic `order`-window of `bits`. Counts saturate at 255.
std::vector<uint8_t> window_counts(std::span<const uint8_t> bits, int order,
                                   std::optional<uint32_t>* first_dup, size_t* dup_pos) {
    size_t len = bits.size();
    std::vector<uint8_t> counts(size_t{1} << order, 0);
    uint32_t mask = width_mask(order);
    uint32_t w = 0;
    for (int i = 0; i < order; ++i) w = (w << 1) | bits[i % len];
    for (size_t p = 0; p < len; ++p) {
        if (counts[w] == 1 && first_dup && !first_dup->has_value()) {
            *first_dup = w;
            *dup_pos = p;
        }
        if (counts[w] < 255) ++counts[w];
        w = ((w << 1) | bits[(p + static_cast<size_t>(order)) % len]) & mask;
    }
    return counts;
}

size_t find_window_position(std::span<const uint8_t> bits, int order, uint32_t target) {
    size_t len = bits.size();
    uint32_t mask = width_mask(order);
    uint32_t w = 0;
    for (int i = 0; i < order; ++i) w = (w << 1) | bits[i % len];
    for (size_t p = 0; p < len; ++p) {
        if (w == target) return p;
        w = ((w << 1) | bits[(p + static_cast<size_t>(order)) % len]) & mask;
    }
    return len;
}

CensusReport fail(std::string reason) {
    CensusReport r;
    r.ok = false;
    r.reason = std::move(reason);
    return r;
}

bool order_in_range(std::span<const uint8_t> bits, int order) {
    return !bits.empty() && order >= 1 && order <= 26;
}

}  // namespace

CensusReport m_sequence_report(std::span<const uint8_t> bits, int order) {
    if (!order_in_range(bits, order)) return fail("empty sequence or unsupported order");
    if (bits.size() != (size_t{1} << order) - 1)
        return fail("length is not 2^order - 1");
    std::optional<uint32_t> dup;
    size_t dup_second = 0;
    auto counts = window_counts(bits, order, &dup, &dup_second);
    CensusReport r;
    if (counts[0] != 0) {
        r.reason = "all-zero window present";
        r.duplicate_window = 0;
        return r;
    }
    if (dup) {
        r.reason = "duplicated window";
        r.duplicate_window = dup;
        r.duplicate_positions = {find_window_position(bits, order, *dup), dup_second};
        return r;
    }
    for (uint32_t v = 1; v < counts.size(); ++v) {
        if (counts[v] == 0) {
            r.reason = "missing nonzero window";
            r.missing_window = v;
            return r;
        }
    }
    r.ok = true;
    return r;
}

CensusReport de_bruijn_report(std::span<const uint8_t> bits, int order) {
    if (!order_in_range(bits, order)) return fail("empty sequence or unsupported order");
    if (bits.size() != size_t{1} << order) return fail("length is not 2^order");
    std::optional<uint32_t> dup;
    size_t dup_second = 0;
    auto counts = window_counts(bits, order, &dup, &dup_second);
    CensusReport r;
    if (dup) {
        r.reason = "duplicated window";
        r.duplicate_window = dup;
        r.duplicate_positions = {find_window_position(bits, order, *dup), dup_second};
        return r;
    }
    for (uint32_t v = 0; v < counts.size(); ++v) {
        if (counts[v] == 0) {
            r.reason = "missing window";
            r.missing_window = v;
            return r;
        }
    }
    r.ok = true;
    return r;
}

CensusReport half_de_bruijn_report(std::span<const uint8_t> bits, int order) {
    if (!order_in_range(bits, order)) return fail("empty sequence or unsupported order");
    if (order < 2 || bits.size() != size_t{1} << (order - 1))
        return fail("length is not 2^(order-1)");
    std::optional<uint32_t> dup;
    size_t dup_second = 0;
    auto counts = window_counts(bits, order, &dup, &dup_second);
    uint32_t mask = width_mask(order);
    CensusReport r;
    if (dup) {
        r.reason = "duplicated window";
        r.duplicate_window = dup;
        r.duplicate_positions = {find_window_position(bits, order, *dup), dup_second};
        return r;
    }
    // No duplicates: each pair must have exactly one member present.
    // Pairs are visited via their canonical member (top bit 0).
    for (uint32_t v = 0; v < counts.size() / 2; ++v) {
        uint32_t c = ~v & mask;
        int present = counts[v] + counts[c];
        if (present == 0) {
            r.reason = "complement pair absent";
            r.missing_window = v;
            return r;
        }
        if (present > 1) {
            r.reason = "both members of a complement pair present";
            r.duplicate_window = v;
            r.duplicate_positions = {find_window_position(bits, order, v),
                                     find_window_position(bits, order, c)};
            return r;
        }
    }
    r.ok = true;
    return r;
}

bool is_m_sequence(std::span<const uint8_t> bits, int order) {
    return m_sequence_report(bits, order).ok;
}
bool is_de_bruijn(std::span<const uint8_t> bits, int order) {
    return de_bruijn_report(bits, order).ok;
}
bool is_half_de_bruijn(std::span<const uint8_t> bits, int order) {
    return half_de_bruijn_report(bits, order).ok;
}

bool is_m_sequence(const BitSequence& s, int order) { return is_m_sequence(s.bits, order); }
bool is_de_bruijn(const BitSequence& s, int order) { return is_de_bruijn(s.bits, order); }
bool is_half_de_bruijn(const BitSequence& s, int order) {
    return is_half_de_bruijn(s.bits, order);
}

CensusReport complement_pair_report(const BitSequence& m) {
    if (m.kind != SeqKind::m_sequence)
        return fail("complement pair census requires an M-sequence");
    int width = m.order + 1;
    if (width > 26) return fail("order too large for pair census");
    auto counts = window_counts(m.bits, width, nullptr, nullptr);
    uint32_t mask = width_mask(width);
    CensusReport r;
    for (uint32_t v = 0; v < counts.size(); ++v) {
        if ((v >> (width - 1)) & 1u) continue;
        uint32_t c = ~v & mask;
        int present = counts[v] + counts[c];
        if (v == 0) {
            if (present != 0) {
                r.reason = "all-zero/all-one pair present";
                r.duplicate_window = counts[0] ? 0u : c;
                return r;
            }
            continue;
        }
        if (present == 0) {
            r.reason = "complement pair absent";
            r.missing_window = v;
            return r;
        }
        if (present != 1) {
            r.reason = "complement pair over-represented";
            r.duplicate_window = v;
            return r;
        }
    }
    r.ok = true;
    return r;
}

BitSequence lfsr_m_sequence(const LfsrSpec& spec) {
    spec.validate();
    const int order = spec.order;
    const uint32_t mask = width_mask(order);
    const uint32_t rec = spec.recurrence_mask();
    const uint64_t max_period = (uint64_t{1} << order) - 1;

    // The state is the current window; the seed is the first window out.
    auto step = [&](uint32_t w) {
        uint32_t nb = static_cast<uint32_t>(std::popcount(w & rec)) & 1u;
        return ((w << 1) | nb) & mask;
    };

    uint64_t period = 0;
    uint32_t w = spec.seed;
    do {
        if (w == 0)
            throw NonPrimitivePolynomial("register reached the all-zero state", period);
        w = step(w);
        ++period;
    } while (w != spec.seed && period <= max_period);

    if (period != max_period)
        throw NonPrimitivePolynomial(
            "taps are not primitive: observed period " + std::to_string(period) +
                ", expected " + std::to_string(max_period),
            period);

    BitSequence out;
    out.order = order;
    out.kind = SeqKind::m_sequence;
    out.provenance = {Provenance::Method::lfsr, spec, -1};
    out.bits.resize(max_period);
    w = spec.seed;
    for (size_t i = 0; i < max_period; ++i) {
        out.bits[i] = (w >> (order - 1)) & 1u;
        w = step(w);
    }
    return out;
}

namespace {

// Start of the unique maximal run of `run_len` copies of `symbol` in a cyclic
// M-sequence (the run is flanked by the other symbol on both sides).
size_t find_run_start(const BitSequence& m, uint8_t symbol, int run_len) {
    size_t len = m.length();
    for (size_t p = 0; p < len; ++p) {
        if (m.bit(p + len - 1) == symbol) continue;
        bool run = true;
        for (int i = 0; i < run_len; ++i)
            if (m.bit(p + static_cast<size_t>(i)) != symbol) {
                run = false;
                break;
            }
        if (run && m.bit(p + static_cast<size_t>(run_len)) != symbol) return p;
    }
    throw std::logic_error("maximal run not found; input is not an M-sequence");
}

std::vector<uint8_t> insert_at(const std::vector<uint8_t>& bits, size_t pos, uint8_t value) {
    std::vector<uint8_t> out;
    out.reserve(bits.size() + 1);
    out.insert(out.end(), bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(value);
    out.insert(out.end(), bits.begin() + static_cast<std::ptrdiff_t>(pos), bits.end());
    return out;
}

}  // namespace

BitSequence de_bruijn_from_m(const BitSequence& m) {
    if (m.kind != SeqKind::m_sequence)
        throw std::invalid_argument("de_bruijn_from_m: input must be an M-sequence");
    if (m.order < 2)
        throw std::invalid_argument("de_bruijn_from_m: order must be at least 2");
    size_t run = find_run_start(m, 0, m.order - 1);
    BitSequence out;
    out.bits = insert_at(m.bits, run, 0);
    out.order = m.order;
    out.kind = SeqKind::de_bruijn;
    out.provenance = m.provenance;
    out.provenance.method = Provenance::Method::zero_run_extension;
    return out;
}

BitSequence half_de_bruijn_from_m(const BitSequence& m) {
    if (m.kind != SeqKind::m_sequence)
        throw std::invalid_argument("half_de_bruijn_from_m: input must be an M-sequence");
    if (m.order < 2)
        throw std::invalid_argument("half_de_bruijn_from_m: order must be at least 2");
    size_t run = find_run_start(m, 1, m.order);
    BitSequence out;
    out.bits = insert_at(m.bits, run, 1);
    out.order = m.order + 1;
    out.kind = SeqKind::half_de_bruijn;
    out.provenance = m.provenance;
    out.provenance.method = Provenance::Method::one_run_extension;
    return out;
}

BitSequence inverse_d_morphism(const BitSequence& s, int first_bit) {
    if (s.kind != SeqKind::de_bruijn)
        throw std::invalid_argument("inverse_d_morphism: input must be a de Bruijn sequence");
    if (s.order < 2)
        throw std::invalid_argument("inverse_d_morphism: input order must be at least 2");
    if (first_bit != 0 && first_bit != 1)
        throw std::invalid_argument("inverse_d_morphism: first bit must be 0 or 1");
    size_t ones = static_cast<size_t>(
        std::accumulate(s.bits.begin(), s.bits.end(), size_t{0}));
    if (ones % 2 != 0)
        throw std::invalid_argument("inverse_d_morphism: input bit-sum must be even");

    BitSequence out;
    out.bits.resize(s.length());
    out.bits[0] = static_cast<uint8_t>(first_bit);
    for (size_t i = 0; i + 1 < s.length(); ++i) out.bits[i + 1] = out.bits[i] ^ s.bits[i];
    out.order = s.order + 1;
    out.kind = SeqKind::half_de_bruijn;
    out.provenance = s.provenance;
    out.provenance.method = Provenance::Method::inverse_d;
    out.provenance.inverse_d_first_bit = first_bit;
    return out;
}

std::vector<uint8_t> d_morphism(std::span<const uint8_t> bits) {
    std::vector<uint8_t> out(bits.size());
    for (size_t i = 0; i < bits.size(); ++i)
        out[i] = bits[i] ^ bits[(i + 1) % bits.size()];
    return out;
}

BitSequence complement_sequence(const BitSequence& s) {
    BitSequence out = s;
    for (auto& b : out.bits) b ^= 1u;
    // Complementing preserves the (half) de Bruijn window properties but not
    // the M-sequence one, and it invalidates the construction record.
    if (s.kind == SeqKind::m_sequence) out.kind = SeqKind::raw;
    out.provenance = Provenance{};
    out.provenance.method = Provenance::Method::literal;
    return out;
}

namespace {
// Primitive feedback polynomials over GF(2), given as exponent lists.
// Primitivity is re-checked at generation time by measuring the period.
const std::map<int, std::vector<int>> kBuiltinTaps = {
    {2, {2, 1, 0}},          {3, {3, 1, 0}},           {4, {4, 1, 0}},
    {5, {5, 2, 0}},          {6, {6, 1, 0}},           {7, {7, 1, 0}},
    {8, {8, 4, 3, 2, 0}},    {9, {9, 4, 0}},           {10, {10, 3, 0}},
    {11, {11, 2, 0}},        {12, {12, 6, 4, 1, 0}},   {13, {13, 4, 3, 1, 0}},
    {14, {14, 10, 6, 1, 0}}, {15, {15, 1, 0}},         {16, {16, 12, 3, 1, 0}},
    {17, {17, 3, 0}},        {18, {18, 7, 0}},         {19, {19, 5, 2, 1, 0}},
    {20, {20, 3, 0}},        {21, {21, 2, 0}},         {22, {22, 1, 0}},
    {23, {23, 5, 0}},        {24, {24, 7, 2, 1, 0}},
};
}  // namespace

int builtin_taps_min_order() { return kBuiltinTaps.begin()->first; }
int builtin_taps_max_order() { return kBuiltinTaps.rbegin()->first; }

const std::vector<int>& builtin_taps(int order) {
    auto it = kBuiltinTaps.find(order);
    if (it == kBuiltinTaps.end())
        throw std::invalid_argument("no built-in feedback polynomial for order " +
                                    std::to_string(order));
    return it->second;
}

BitSequence make_m_sequence(int order) {
    LfsrSpec spec{order, builtin_taps(order), width_mask(order)};
    return lfsr_m_sequence(spec);
}

BitSequence make_de_bruijn(int order) { return de_bruijn_from_m(make_m_sequence(order)); }

BitSequence make_half_de_bruijn(int order, HalfMethod method, int first_bit) {
    if (order < 3)
        throw std::invalid_argument(
            "half de Bruijn sequences exist only for order >= 3");
    if (method == HalfMethod::one_run) return half_de_bruijn_from_m(make_m_sequence(order - 1));
    return inverse_d_morphism(make_de_bruijn(order - 1), first_bit);
}

}  // namespace selfloc
