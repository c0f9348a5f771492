#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "selfloc/sequence.hpp"
#include "selfloc/successor.hpp"

namespace selfloc {

enum class LocateStrategy { scan, table, milestone };

struct LocateResult {
    size_t position = 0;
    // For half de Bruijn sequences: the stored window is the complement of
    // the query. Always false for de Bruijn and M-sequences.
    bool complemented = false;
    // Successor iterations performed (milestone strategy only).
    size_t steps = 0;
};

// Position queries over one sequence under a chosen time/space trade-off:
// linear scan (no table), full lookup table, or a sparse table of evenly
// spaced milestones advanced by the construction's successor rule.
class Locator {
  public:
    static Locator scan(BitSequence sequence);
    static Locator table(BitSequence sequence);
    // spacing 0 selects the default 2^ceil(order/2).
    static Locator milestone(BitSequence sequence, size_t spacing = 0);

    LocateResult locate(Window query) const;

    LocateStrategy strategy() const { return strategy_; }
    size_t spacing() const { return spacing_; }
    size_t table_entries() const;
    const BitSequence& sequence() const { return seq_; }

  private:
    Locator(LocateStrategy strategy, BitSequence sequence);

    LocateResult locate_scan(uint32_t value) const;
    LocateResult locate_table(uint32_t value) const;
    LocateResult locate_milestone(uint32_t value) const;

    LocateStrategy strategy_;
    BitSequence seq_;
    bool half_;  // complement-pair semantics apply

    // table strategy: position per window, indexed by window value
    // (canonical pair member for half de Bruijn). npos marks absent windows.
    static constexpr uint32_t kNoPosition = 0xffffffffu;
    std::vector<uint32_t> positions_;
    std::vector<uint8_t> stored_complemented_;  // half: table holds ~key at this slot

    // milestone strategy
    struct Milestone {
        uint32_t position;
        uint32_t actual;  // window value as stored in the sequence
    };
    std::unordered_map<uint32_t, Milestone> milestones_;
    size_t spacing_ = 0;
    std::optional<SuccessorRule> rule_;
};

}  // namespace selfloc
