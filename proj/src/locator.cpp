#include "selfloc/locator.hpp"

namespace selfloc {

namespace {

void require_locatable(const BitSequence& s) {
    if (s.bits.empty()) throw std::invalid_argument("cannot locate in an empty sequence");
    if (s.order < 1 || s.order > 31)
        throw std::invalid_argument("sequence order out of range for location queries");
}

}  // namespace

Locator::Locator(LocateStrategy strategy, BitSequence sequence)
    : strategy_(strategy),
      seq_(std::move(sequence)),
      half_(seq_.kind == SeqKind::half_de_bruijn) {
    require_locatable(seq_);
}

Locator Locator::scan(BitSequence sequence) {
    return Locator(LocateStrategy::scan, std::move(sequence));
}

Locator Locator::table(BitSequence sequence) {
    Locator loc(LocateStrategy::table, std::move(sequence));
    const auto& s = loc.seq_;
    const int order = s.order;
    size_t slots = loc.half_ ? (size_t{1} << (order - 1)) : (size_t{1} << order);
    loc.positions_.assign(slots, kNoPosition);
    if (loc.half_) loc.stored_complemented_.assign(slots, 0);
    uint32_t w = s.window_at(0).value;
    const uint32_t mask = width_mask(order);
    for (size_t p = 0; p < s.length(); ++p) {
        if (loc.half_) {
            uint32_t key = pair_key(w, order);
            loc.positions_[key] = static_cast<uint32_t>(p);
            loc.stored_complemented_[key] = (key != w);
        } else {
            loc.positions_[w] = static_cast<uint32_t>(p);
        }
        w = ((w << 1) | s.bit(p + static_cast<size_t>(order))) & mask;
    }
    return loc;
}

Locator Locator::milestone(BitSequence sequence, size_t spacing) {
    Locator loc(LocateStrategy::milestone, std::move(sequence));
    const auto& s = loc.seq_;
    loc.rule_ = SuccessorRule::for_sequence(s);
    if (spacing == 0) spacing = size_t{1} << ((s.order + 1) / 2);
    if (spacing > s.length()) spacing = s.length();
    loc.spacing_ = spacing;
    loc.milestones_.reserve((s.length() + spacing - 1) / spacing);
    for (size_t p = 0; p < s.length(); p += spacing) {
        uint32_t w = s.window_at(p).value;
        uint32_t key = loc.half_ ? pair_key(w, s.order) : w;
        loc.milestones_.emplace(key, Milestone{static_cast<uint32_t>(p), w});
    }
    return loc;
}

size_t Locator::table_entries() const {
    switch (strategy_) {
        case LocateStrategy::table: {
            size_t n = 0;
            for (uint32_t p : positions_)
                if (p != kNoPosition) ++n;
            return n;
        }
        case LocateStrategy::milestone:
            return milestones_.size();
        default:
            return 0;
    }
}

LocateResult Locator::locate(Window query) const {
    if (query.width != seq_.order)
        throw std::invalid_argument("query width does not match the sequence order");
    if (query.value > width_mask(query.width))
        throw std::invalid_argument("query value wider than declared width");
    if (seq_.kind == SeqKind::m_sequence && query.value == 0)
        throw NoSuchWindow("all-zero window never occurs in an M-sequence");
    switch (strategy_) {
        case LocateStrategy::scan: return locate_scan(query.value);
        case LocateStrategy::table: return locate_table(query.value);
        case LocateStrategy::milestone: return locate_milestone(query.value);
    }
    throw std::logic_error("unreachable");
}

LocateResult Locator::locate_scan(uint32_t value) const {
    const int order = seq_.order;
    const uint32_t mask = width_mask(order);
    const uint32_t comp = ~value & mask;
    uint32_t w = seq_.window_at(0).value;
    for (size_t p = 0; p < seq_.length(); ++p) {
        if (w == value) return {p, false, 0};
        if (half_ && w == comp) return {p, true, 0};
        w = ((w << 1) | seq_.bit(p + static_cast<size_t>(order))) & mask;
    }
    throw NoSuchWindow("window does not occur in the sequence");
}

LocateResult Locator::locate_table(uint32_t value) const {
    if (half_) {
        uint32_t key = pair_key(value, seq_.order);
        uint32_t pos = positions_[key];
        if (pos == kNoPosition) throw NoSuchWindow("window does not occur in the sequence");
        uint32_t actual = stored_complemented_[key] ? (~key & width_mask(seq_.order)) : key;
        return {pos, actual != value, 0};
    }
    uint32_t pos = positions_[value];
    if (pos == kNoPosition) throw NoSuchWindow("window does not occur in the sequence");
    return {pos, false, 0};
}

LocateResult Locator::locate_milestone(uint32_t value) const {
    const int order = seq_.order;
    const uint32_t mask = width_mask(order);
    uint32_t w = value;
    bool comp = false;

    // Walking a window that is not in the sequence would follow a bogus
    // orbit, so resolve the complement pair up front when the rule can test
    // membership; the inverse-D rule instead walks complements in lockstep
    // and resolves against the stored milestone window on arrival.
    if (half_) {
        auto m = rule_->member(w);
        if (m.has_value() && !*m) {
            w = ~w & mask;
            comp = true;
            auto m2 = rule_->member(w);
            if (m2.has_value() && !*m2)
                throw NoSuchWindow("window does not occur in the sequence");
        }
    }

    for (size_t steps = 0; steps <= spacing_; ++steps) {
        uint32_t key = half_ ? pair_key(w, order) : w;
        auto it = milestones_.find(key);
        if (it != milestones_.end()) {
            size_t len = seq_.length();
            size_t pos = (it->second.position + len - steps % len) % len;
            // A pre-resolved complement query and a complement arrival both
            // flag the other pair member.
            bool complemented = half_ && ((w != it->second.actual) ^ comp);
            return {pos, complemented, steps};
        }
        w = rule_->next(w);
    }
    throw NoSuchWindow("window does not occur in the sequence");
}

}  // namespace selfloc
