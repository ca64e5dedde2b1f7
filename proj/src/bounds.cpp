#include "uper/bounds.hpp"

#include <algorithm>

namespace uper {

Utility weu_event(const ComplexEventSequence& s, EventId e, const SpanConstraints& c) {
    const int w = c.winspan();
    Utility sum = 0;
    for (const auto& slot : s.slots())
        if (slot.find(e)) sum += s.window_utility(slot.timestamp - w, slot.timestamp + w);
    return sum;
}

std::unordered_map<EventId, Utility> weu_all(const ComplexEventSequence& s, const SpanConstraints& c) {
    const int w = c.winspan();
    std::unordered_map<EventId, Utility> weu;
    for (const auto& slot : s.slots()) {
        const Utility window = s.window_utility(slot.timestamp - w, slot.timestamp + w);
        for (const auto& entry : slot.entries) weu[entry.event] += window;
    }
    return weu;
}

std::vector<Reucs::Cell> Reucs::cells() const {
    std::vector<Cell> out;
    out.reserve(table_.size());
    for (const auto& [k, v] : table_)
        out.push_back({static_cast<EventId>(k >> 32), static_cast<EventId>(k & 0xffffffffu), v});
    std::sort(out.begin(), out.end(),
              [](const Cell& x, const Cell& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    return out;
}

Reucs build_reucs(const ComplexEventSequence& s, const SpanConstraints& c) {
    const int w = c.winspan();
    Reucs table;
    std::unordered_map<EventId, Timestamp> firstAfter;
    for (const auto& slot : s.slots()) {
        const Timestamp ti = slot.timestamp;
        // Earliest later time point of every event reachable within WinSpan.
        firstAfter.clear();
        for (const auto& later : s.slots_in(ti + 1, ti + w))
            for (const auto& entry : later.entries) firstAfter.try_emplace(entry.event, later.timestamp);
        for (const auto& [b, tj] : firstAfter) {
            const Utility window = s.window_utility(tj - w, ti + w);
            if (window == 0) continue;
            for (const auto& entry : slot.entries) table.add(entry.event, b, window);
        }
    }
    return table;
}

Utility reeu_occurrence(const ComplexEventSequence& s, const RuleOccurrence& o, const SpanConstraints& c) {
    auto si = search_interval(o, c);
    return o.x_utility + s.window_utility(si.start, si.end);
}

Utility reeu_rule(const ComplexEventSequence& s, const RuleNoList& list, const SpanConstraints& c) {
    std::vector<WeightedInterval> weighted;
    weighted.reserve(list.size());
    for (const auto& o : list) weighted.push_back({o.x_start, o.y_end, reeu_occurrence(s, o, c)});
    return max_weight_non_overlapping(weighted);
}

}  // namespace uper
