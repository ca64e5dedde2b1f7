#pragma once

#include <unordered_map>
#include <vector>

#include "uper/occurrence.hpp"
#include "uper/sequence.hpp"

namespace uper {

// WEU(e): for every time point of e, the utility of the window of WinSpan
// slots on each side. Bounds the utility of any rule containing e.
Utility weu_event(const ComplexEventSequence& s, EventId e, const SpanConstraints& c);

// WEU of every event of the alphabet in one pass.
std::unordered_map<EventId, Utility> weu_all(const ComplexEventSequence& s, const SpanConstraints& c);

// Sparse table of WEU({a} -> {b}) over ordered event pairs. Missing pairs read
// as 0.
class Reucs {
public:
    struct Cell {
        EventId a;
        EventId b;
        Utility value;
    };

    Utility at(EventId a, EventId b) const {
        auto it = table_.find(key(a, b));
        return it == table_.end() ? 0 : it->second;
    }
    std::size_t size() const { return table_.size(); }

    // Cells ordered by (a, b).
    std::vector<Cell> cells() const;

    void add(EventId a, EventId b, Utility v) { table_[key(a, b)] += v; }

private:
    static std::uint64_t key(EventId a, EventId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

    std::unordered_map<std::uint64_t, Utility> table_;
};

// For every occurrence time Ti of a and the first later time Tj of b with
// Tj - Ti <= WinSpan, adds window_utility(Tj - WinSpan, Ti + WinSpan).
Reucs build_reucs(const ComplexEventSequence& s, const SpanConstraints& c);

// Positions where a rule occurrence may still take consequent events.
struct SearchInterval {
    Timestamp start = 0;
    Timestamp end = 0;

    bool empty() const { return start > end; }
};

inline SearchInterval search_interval(const RuleOccurrence& o, const SpanConstraints& c) {
    return {std::max(o.y_end - c.yspan + 1, o.x_end + 1),
            std::min(o.y_start + c.yspan - 1, o.x_end + c.xyspan + c.yspan - 2)};
}

// x_utility plus every slot utility inside the search interval.
Utility reeu_occurrence(const ComplexEventSequence& s, const RuleOccurrence& o, const SpanConstraints& c);

// Largest sum of occurrence REEUs over pairwise non-overlapping occurrences;
// covers partial occurrences too, since their expansions may become valid.
Utility reeu_rule(const ComplexEventSequence& s, const RuleNoList& list, const SpanConstraints& c);

}  // namespace uper
