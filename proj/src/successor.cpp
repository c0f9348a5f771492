#include "selfloc/successor.hpp"

#include <bit>

namespace selfloc {

SuccessorRule SuccessorRule::for_sequence(const BitSequence& s) {
    if (!s.provenance.has_generator())
        throw std::invalid_argument(
            "sequence has no construction record; successor rule unavailable");
    s.provenance.lfsr.validate();
    SuccessorRule r;
    r.method_ = s.provenance.method;
    r.order_ = s.order;
    r.base_order_ = s.provenance.lfsr.order;
    r.rec_mask_ = s.provenance.lfsr.recurrence_mask();
    switch (r.method_) {
        case Provenance::Method::lfsr:
        case Provenance::Method::zero_run_extension:
            if (r.base_order_ != s.order)
                throw std::invalid_argument("register order does not match sequence order");
            break;
        case Provenance::Method::one_run_extension:
        case Provenance::Method::inverse_d:
            if (r.base_order_ != s.order - 1)
                throw std::invalid_argument("register order does not match sequence order");
            break;
        default:
            throw std::invalid_argument("unsupported construction record");
    }
    return r;
}

uint32_t SuccessorRule::m_next(uint32_t window, int order, uint32_t rec_mask) const {
    uint32_t nb = static_cast<uint32_t>(std::popcount(window & rec_mask)) & 1u;
    return ((window << 1) | nb) & width_mask(order);
}

uint32_t SuccessorRule::next(uint32_t window) const {
    const uint32_t mask = width_mask(order_);
    if (window > mask) throw std::invalid_argument("window wider than rule order");
    switch (method_) {
        case Provenance::Method::lfsr:
            if (window == 0) throw NoSuchWindow("all-zero window never occurs in an M-sequence");
            return m_next(window, order_, rec_mask_);

        case Provenance::Method::zero_run_extension: {
            // The inserted zero splits [1 0^{n-1}] -> [0^n] -> [0^{n-1} 1];
            // every other step follows the register recurrence.
            const uint32_t one_then_zeros = 1u << (order_ - 1);
            if (window == one_then_zeros) return 0;
            if (window == 0) return 1;
            return m_next(window, order_, rec_mask_);
        }

        case Provenance::Method::one_run_extension: {
            // Windows are one bit wider than the register; the recurrence
            // reads the low base_order_ bits. The inserted one splits
            // [0 1^{k-1}] -> [1^k] -> [1^{k-1} 0].
            if (window == mask >> 1) return mask;
            if (window == mask) return mask - 1;
            uint32_t low = window & width_mask(base_order_);
            uint32_t nb = static_cast<uint32_t>(std::popcount(low & rec_mask_)) & 1u;
            return ((window << 1) | nb) & mask;
        }

        case Provenance::Method::inverse_d: {
            // Adjacent XOR of the window is a base-order window of the
            // underlying de Bruijn sequence; its next bit XOR the window's
            // last bit is the next bit here.
            uint32_t dw = (window ^ (window >> 1)) & width_mask(base_order_);
            const uint32_t one_then_zeros = 1u << (base_order_ - 1);
            uint32_t dnext;
            if (dw == one_then_zeros)
                dnext = 0;
            else if (dw == 0)
                dnext = 1;
            else
                dnext = m_next(dw, base_order_, rec_mask_);
            uint32_t nb = (window & 1u) ^ (dnext & 1u);
            return ((window << 1) | nb) & mask;
        }

        default:
            throw std::logic_error("successor rule without method");
    }
}

std::optional<bool> SuccessorRule::member(uint32_t window) const {
    const uint32_t mask = width_mask(order_);
    switch (method_) {
        case Provenance::Method::lfsr:
            return window != 0;
        case Provenance::Method::zero_run_extension:
            return true;
        case Provenance::Method::one_run_extension: {
            // A window occurs iff it is the all-ones insertion or its prefix
            // is a nonzero register window whose recurrence emits its last bit.
            if (window == mask) return true;
            uint32_t prefix = window >> 1;
            if (prefix == 0) return false;
            uint32_t nb = static_cast<uint32_t>(std::popcount(prefix & rec_mask_)) & 1u;
            return (window & 1u) == nb;
        }
        case Provenance::Method::inverse_d:
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

uint32_t successor(Window window, const SuccessorRule& generator) {
    if (window.width != generator.order())
        throw std::invalid_argument("window width does not match generator order");
    return generator.next(window.value);
}

}  // namespace selfloc
