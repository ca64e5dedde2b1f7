#include "uper/oracle.hpp"

#include <bit>
#include <map>
#include <tuple>

namespace uper {

namespace {

struct Position {
    Timestamp t;
    Utility u;
};

using IntervalMap = std::map<std::pair<Timestamp, Timestamp>, Utility>;

class Enumerator {
public:
    Enumerator(const ComplexEventSequence& s, std::vector<EventId> events) : events_(std::move(events)) {
        for (const auto& slot : s.slots())
            for (const auto& e : slot.entries) positions_[e.event].push_back({slot.timestamp, e.utility});
    }

    // Every assignment of one position per event whose extent is < span,
    // reduced to (first, last) -> best utility.
    IntervalMap assignments(unsigned mask, int span) const {
        std::vector<EventId> set;
        for (std::size_t i = 0; i < events_.size(); ++i)
            if (mask & (1u << i)) set.push_back(events_[i]);
        IntervalMap out;
        recurse(set, 0, 0, 0, 0, span, out);
        return out;
    }

private:
    void recurse(const std::vector<EventId>& set, std::size_t k, Timestamp lo, Timestamp hi, Utility sum, int span,
                 IntervalMap& out) const {
        if (k == set.size()) {
            if (hi - lo < span) {
                auto [it, fresh] = out.try_emplace({lo, hi}, sum);
                if (!fresh) it->second = std::max(it->second, sum);
            }
            return;
        }
        auto found = positions_.find(set[k]);
        if (found == positions_.end()) return;
        for (const auto& p : found->second) {
            recurse(set, k + 1, k == 0 ? p.t : std::min(lo, p.t), k == 0 ? p.t : std::max(hi, p.t), sum + p.u, span,
                    out);
        }
    }

    std::vector<EventId> events_;
    std::map<EventId, std::vector<Position>> positions_;
};

// Dynamic program over the time line: best[t] is the optimum among intervals
// lying inside [first, t].
struct Disjoint {
    std::int64_t count = 0;
    Utility weight = 0;
};

Disjoint best_disjoint(const IntervalMap& intervals, Timestamp first, Timestamp last) {
    if (intervals.empty()) return {};
    const auto n = static_cast<std::size_t>(last - first + 2);
    std::vector<std::int64_t> count(n, 0);
    std::vector<Utility> weight(n, 0);
    std::multimap<Timestamp, std::pair<Timestamp, Utility>> byEnd;
    for (const auto& [iv, w] : intervals) byEnd.emplace(iv.second, std::make_pair(iv.first, w));
    for (Timestamp t = first; t <= last; ++t) {
        const auto i = static_cast<std::size_t>(t - first + 1);
        count[i] = count[i - 1];
        weight[i] = weight[i - 1];
        auto [a, b] = byEnd.equal_range(t);
        for (auto it = a; it != b; ++it) {
            const auto before = static_cast<std::size_t>(it->second.first - first);
            count[i] = std::max(count[i], count[before] + 1);
            weight[i] = std::max(weight[i], weight[before] + it->second.second);
        }
    }
    return {count.back(), weight.back()};
}

Utility slot_sum(const ComplexEventSequence& s, Timestamp lo, Timestamp hi) {
    Utility sum = 0;
    for (const auto& slot : s.slots())
        if (slot.timestamp >= lo && slot.timestamp <= hi)
            for (const auto& e : slot.entries) sum += e.utility;
    return sum;
}

std::vector<EventId> members(const std::vector<EventId>& events, unsigned mask) {
    std::vector<EventId> out;
    for (std::size_t i = 0; i < events.size(); ++i)
        if (mask & (1u << i)) out.push_back(events[i]);
    return out;
}

}  // namespace

std::vector<OracleRule> enumerate_all_rules(const ComplexEventSequence& s, const SpanConstraints& c,
                                            const OracleCaps& caps, bool allow_shared_events) {
    c.validate();
    if (s.size() > caps.max_slots)
        throw CapsExceeded("oracle: " + std::to_string(s.size()) + " time points exceed the cap of " +
                           std::to_string(caps.max_slots));
    if (s.alphabet().size() > caps.max_alphabet)
        throw CapsExceeded("oracle: " + std::to_string(s.alphabet().size()) + " distinct events exceed the cap of " +
                           std::to_string(caps.max_alphabet));
    std::vector<OracleRule> rules;
    if (s.empty()) return rules;

    const auto& events = s.alphabet();
    Enumerator en(s, events);
    const unsigned full = (1u << events.size()) - 1;
    const Timestamp first = s.first_timestamp(), last = s.last_timestamp();

    std::map<unsigned, IntervalMap> asX, asY;
    for (unsigned m = 1; m <= full; ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) > caps.max_set_size) continue;
        asX[m] = en.assignments(m, c.xspan);
        asY[m] = en.assignments(m, c.yspan);
    }

    for (const auto& [xm, xocc] : asX) {
        if (xocc.empty()) continue;
        const auto supX = best_disjoint(xocc, first, last).count;
        for (const auto& [ym, yocc] : asY) {
            if (!allow_shared_events && (xm & ym)) continue;
            IntervalMap outer, reeu;
            for (const auto& [xi, xu] : xocc) {
                for (const auto& [yi, yu] : yocc) {
                    const auto [xs, xe] = xi;
                    const auto [ys, ye] = yi;
                    if (!(xe < ys && ys - xe < c.xyspan)) continue;
                    auto& u = outer[{xs, ye}];
                    u = std::max(u, xu + yu);
                    const Timestamp lo = std::max(ye - c.yspan + 1, xe + 1);
                    const Timestamp hi = std::min(ys + c.yspan - 1, xe + c.xyspan + c.yspan - 2);
                    auto& r = reeu[{xs, ye}];
                    r = std::max(r, xu + slot_sum(s, lo, hi));
                }
            }
            if (outer.empty()) continue;
            const auto measured = best_disjoint(outer, first, last);
            rules.push_back({members(events, xm), members(events, ym), measured.count, supX, measured.weight,
                             best_disjoint(reeu, first, last).weight});
        }
    }
    std::sort(rules.begin(), rules.end(), [](const OracleRule& a, const OracleRule& b) {
        return std::tie(a.antecedent, a.consequent) < std::tie(b.antecedent, b.consequent);
    });
    return rules;
}

std::vector<Huer> oracle_mine(const ComplexEventSequence& s, const MiningThresholds& thresholds,
                              const SpanConstraints& c, const OracleCaps& caps, bool allow_shared_events) {
    const auto t = resolve(thresholds, s);
    std::vector<Huer> out;
    for (const auto& r : enumerate_all_rules(s, c, caps, allow_shared_events)) {
        if (r.support < t.minsup) continue;
        if (!t.confidence_reached(r.support, r.antecedent_support)) continue;
        if (!t.utility_reached(r.utility)) continue;
        out.push_back({r.antecedent, r.consequent, r.support, r.antecedent_support, r.utility});
    }
    return out;
}

}  // namespace uper
