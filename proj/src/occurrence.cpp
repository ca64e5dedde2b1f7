#include "uper/occurrence.hpp"

#include <numeric>

namespace uper {

std::vector<NoGroup> group_non_overlapping(std::span<const WeightedInterval> sorted) {
    std::vector<NoGroup> groups;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& iv = sorted[i];
        if (groups.empty() || iv.start > groups.back().representative.end) {
            groups.push_back({iv, iv.weight, i, 1});
            continue;
        }
        auto& g = groups.back();
        ++g.count;
        g.group_utility = std::max(g.group_utility, iv.weight);
        if (iv.end < g.representative.end) g.representative = iv;
    }
    return groups;
}

Utility max_weight_non_overlapping(std::span<const WeightedInterval> intervals) {
    if (intervals.empty()) return 0;
    std::vector<WeightedInterval> byEnd(intervals.begin(), intervals.end());
    std::sort(byEnd.begin(), byEnd.end(), [](const WeightedInterval& a, const WeightedInterval& b) {
        return a.end != b.end ? a.end < b.end : a.start < b.start;
    });
    // best[i]: optimum over the first i intervals in end order.
    std::vector<Utility> best(byEnd.size() + 1, 0);
    for (std::size_t i = 0; i < byEnd.size(); ++i) {
        auto compatible = std::lower_bound(byEnd.begin(), byEnd.begin() + static_cast<std::ptrdiff_t>(i),
                                           byEnd[i].start,
                                           [](const WeightedInterval& a, Timestamp s) { return a.end < s; });
        auto k = static_cast<std::size_t>(compatible - byEnd.begin());
        best[i + 1] = std::max(best[i], best[k] + byEnd[i].weight);
    }
    return best.back();
}

std::vector<WeightedInterval> measured_intervals(const SetNoList& list) {
    std::vector<WeightedInterval> out;
    out.reserve(list.size());
    for (const auto& o : list) out.push_back({o.start, o.end, o.utility});
    return out;
}

std::vector<WeightedInterval> measured_intervals(const RuleNoList& list) {
    std::vector<WeightedInterval> out;
    out.reserve(list.size());
    for (const auto& o : list)
        if (o.valid) out.push_back({o.x_start, o.y_end, o.utility});
    return out;
}

Ratio confidence(std::int64_t rule_support, std::int64_t antecedent_support) {
    if (antecedent_support <= 0) throw UndefinedConfidence();
    auto g = std::gcd(rule_support, antecedent_support);
    if (g == 0) g = 1;
    return Ratio{rule_support / g, antecedent_support / g};
}

}  // namespace uper
