#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "uper/sequence.hpp"

namespace uper {

// An occurrence of an event set: its events span [start, end].
struct SetOccurrence {
    Timestamp start = 0;
    Timestamp end = 0;
    Utility utility = 0;

    Timestamp outer_start() const { return start; }
    Timestamp outer_end() const { return end; }
    auto key() const { return std::make_tuple(start, end); }

    friend bool operator==(const SetOccurrence&, const SetOccurrence&) = default;
};

// An occurrence of X -> Y. `valid` is false for a partial occurrence whose
// consequent still starts too late (y_start - x_end >= XYSpan); partial
// occurrences exist only to be expanded and never count towards support or
// utility.
struct RuleOccurrence {
    Timestamp x_start = 0;
    Timestamp x_end = 0;
    Timestamp y_start = 0;
    Timestamp y_end = 0;
    Utility x_utility = 0;
    Utility utility = 0;  // antecedent + consequent
    bool valid = true;

    Timestamp outer_start() const { return x_start; }
    Timestamp outer_end() const { return y_end; }
    auto key() const { return std::make_tuple(x_start, y_end, x_end, y_start); }

    friend bool operator==(const RuleOccurrence&, const RuleOccurrence&) = default;
};

// Occurrences sorted by outer interval with exact duplicates merged
// (the higher utility wins).
template <class Occurrence>
class NoList {
public:
    NoList() = default;
    explicit NoList(std::vector<Occurrence> occurrences) : items_(std::move(occurrences)) {
        std::sort(items_.begin(), items_.end(), [](const Occurrence& a, const Occurrence& b) {
            if (a.key() != b.key()) return a.key() < b.key();
            return a.utility > b.utility;
        });
        auto last = std::unique(items_.begin(), items_.end(),
                                [](const Occurrence& a, const Occurrence& b) { return a.key() == b.key(); });
        items_.erase(last, items_.end());
    }

    std::span<const Occurrence> items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<Occurrence> items_;
};

using SetNoList = NoList<SetOccurrence>;
using RuleNoList = NoList<RuleOccurrence>;

struct Interval {
    Timestamp start = 0;
    Timestamp end = 0;
};

struct WeightedInterval {
    Timestamp start = 0;
    Timestamp end = 0;
    Utility weight = 0;
};

inline bool overlaps(Interval a, Interval b) {
    return (b.start <= a.start && a.start <= b.end) || (a.start <= b.start && b.start <= a.end);
}

struct NoGroup {
    WeightedInterval representative;  // minimal end among members
    Utility group_utility = 0;        // max member weight
    std::size_t first = 0;            // members are [first, first + count) of the sorted input
    std::size_t count = 0;
};

// Left-to-right scan over intervals sorted by (start, end). An interval joins
// the open group when it starts no later than the group's smallest end so far;
// otherwise it opens a new group. The number of groups is the maximum number
// of pairwise non-overlapping intervals.
std::vector<NoGroup> group_non_overlapping(std::span<const WeightedInterval> sorted);

// Largest total weight of a set of pairwise non-overlapping intervals.
Utility max_weight_non_overlapping(std::span<const WeightedInterval> intervals);

// Outer intervals weighted by utility; rule lists contribute valid
// occurrences only. Result is sorted by (start, end).
std::vector<WeightedInterval> measured_intervals(const SetNoList& list);
std::vector<WeightedInterval> measured_intervals(const RuleNoList& list);

template <class Occurrence>
std::int64_t support(const NoList<Occurrence>& list) {
    auto iv = measured_intervals(list);
    return static_cast<std::int64_t>(group_non_overlapping(iv).size());
}

template <class Occurrence>
Utility utility(const NoList<Occurrence>& list) {
    auto iv = measured_intervals(list);
    return max_weight_non_overlapping(iv);
}

class UndefinedConfidence : public std::domain_error {
public:
    UndefinedConfidence() : std::domain_error("confidence undefined: antecedent support is 0") {}
};

// rule_support / antecedent_support as an exact fraction.
Ratio confidence(std::int64_t rule_support, std::int64_t antecedent_support);

inline Ratio confidence(const RuleNoList& rule, const SetNoList& antecedent) {
    return confidence(support(rule), support(antecedent));
}

}  // namespace uper
