#pragma once

#include <cstdint>
#include <optional>

#include "selfloc/sequence.hpp"

namespace selfloc {

// One-step window advance for the canonical constructions. Built from a
// sequence's construction record, so it needs no stored copy of the bits.
class SuccessorRule {
  public:
    static SuccessorRule for_sequence(const BitSequence& s);

    int order() const { return order_; }

    // The window one position forward. Throws NoSuchWindow for queries that
    // can never occur (the all-zero M-sequence window).
    uint32_t next(uint32_t window) const;

    // Whether `window` occurs in the sequence, when the construction admits a
    // direct test; nullopt otherwise (inverse-D half de Bruijn sequences).
    std::optional<bool> member(uint32_t window) const;

    // True when feeding the rule a complemented window walks the complement
    // sequence in lockstep. Holds for the inverse-D rule.
    bool complement_covariant() const { return method_ == Provenance::Method::inverse_d; }

  private:
    SuccessorRule() = default;

    uint32_t m_next(uint32_t window, int order, uint32_t rec_mask) const;

    Provenance::Method method_ = Provenance::Method::none;
    int order_ = 0;          // window width this rule advances
    int base_order_ = 0;     // order of the underlying register
    uint32_t rec_mask_ = 0;  // register recurrence taps as window bits
};

// Spec-level convenience: advance `window` one step under the rule derived
// from `generator`'s construction.
uint32_t successor(Window window, const SuccessorRule& generator);

}  // namespace selfloc
